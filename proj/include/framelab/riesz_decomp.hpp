#pragma once

// eps-Riesz sequences and the splitting of a self-localized family with
// norms bounded below into finitely many of them.

#include "framelab/index_map.hpp"

#include <vector>

namespace framelab {

struct EpsRieszResult {
    bool ok = false;
    double A = 0.0;           // (sigma_max^2 + sigma_min^2) / 2
    double sigma_min2 = 0.0;
    double sigma_max2 = 0.0;
};

/// ok iff sigma_min^2 > 0 and sigma_max^2 / sigma_min^2 <= (1 + eps) / (1 - eps).
/// Throws std::invalid_argument for an empty family or eps outside (0, 1).
EpsRieszResult eps_riesz_check(const VectorFamily& F, double eps, double tol = kDefaultTol);

struct PartCertificate {
    EpsRieszResult riesz;
    double offdiag_norm = 0.0;   // || G_part - diag(G_part) ||
    double offdiag_bound = 0.0;  // K ||r||_1 for the part's off-diagonal Gram
    bool offdiag_ok = false;     // offdiag_norm < delta / 2
};

struct PartLabel {
    std::size_t norm_class = 0;
    std::size_t grid = 0;        // parity vector of the tile, bits little-endian by axis
    std::size_t slot = 0;        // rank of the id inside its box
};

struct Decomposition {
    double m = 0.0;              // min ||f_i||^2
    double M = 0.0;              // max ||f_i||^2
    double delta = 0.0;          // eps m
    std::size_t K = 1;           // number of norm classes
    std::int64_t N_delta = 0;
    std::size_t L = 0;           // largest occupancy of a (class, box) cell
    std::size_t part_bound = 0;  // K 2^d L
    std::vector<IdList> parts;
    std::vector<PartLabel> labels;
    std::vector<PartCertificate> per_part;
    bool all_ok = false;
};

struct DecomposeOptions {
    std::int64_t N_max = 0;  // search limit for N_delta; 0 means the envelope extent + 2
    double tol = kDefaultTol;
};

/// Norm classes of width (M - m) / K < delta / 2, boxes B_{N_delta}(t N_delta)
/// split into 2^d grids by the parity of t, and inside each (class, grid,
/// box) the l-th id (by id order) goes to part (class, grid, l).
///
/// Throws std::invalid_argument for eps outside (0, 1), PreconditionError for
/// a zero vector, TruncationError when the self-envelope tail never drops
/// below delta / 2.
Decomposition decompose(const LocatedFamily& F, double eps, const DecomposeOptions& options = {});

}  // namespace framelab
