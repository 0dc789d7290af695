#pragma once

// Model frames: finite Gabor systems over Z_n, unions of orthonormal bases,
// jittered index maps and a synthetic family localized against the standard
// basis of a Z-window.

#include "framelab/index_map.hpp"

#include <cstdint>
#include <span>

namespace framelab {

struct GaborSpec {
    std::int64_t n = 0;
    std::int64_t a = 0;  // time step, a | n
    std::int64_t b = 0;  // frequency step, b | n
    Vector window;       // length n, nonzero

    /// Throws std::invalid_argument when a or b does not divide n, the window
    /// has the wrong length or vanishes.
    void validate() const;
};

/// Periodized Gaussian exp(-pi t^2 / n) on Z_n with unit l^2 norm.
Vector gaussian_window(std::int64_t n);

/// Columns e^{2 pi i b m t / n} g(t - a k), id = k (n/b) + m, located at
/// (k, m) in Z_{n/a} x Z_{n/b}. Throws PreconditionError when there are at
/// least n vectors but they fail to span C^n.
LocatedFamily finite_gabor(const GaborSpec& spec, double tol = kDefaultTol);

/// Haar-distributed unitary (QR of a complex Gaussian matrix with the phases
/// of R removed), deterministic in the seed.
Matrix random_unitary(std::size_t dim, std::uint64_t seed);

/// The columns of every unitary in turn; id c dim + j is located at j on the
/// window [0, dim - 1] of Z. Throws std::invalid_argument for a non-unitary
/// or wrongly sized input.
LocatedFamily union_of_onbs(std::size_t dim, std::span<const Matrix> unitaries, double tol = 1e-10);

/// Moves every location of a 1-d index set to round(k + jitter[i]).
/// Throws std::invalid_argument when |jitter[i]| >= bound or the group is not
/// a single free axis.
IndexedSet jittered_lattice(const IndexedSet& base, std::span<const double> jitter, double bound);

struct SyntheticOptions {
    std::int64_t window = 64;  // dimension and number of Z points
    double decay = 0.5;        // lambda in [0, 1)
    std::size_t redundancy = 2;
    std::uint64_t seed = 1;
    bool randomize = true;     // random coefficient signs; otherwise cos(c k + c)
    double jitter = 0.0;       // copies >= 1 sit at round(j + jitter (1 - cos pi j))
};

struct SyntheticModel {
    LocatedFamily frame;      // F
    LocatedFamily reference;  // E, the standard basis with the identity map
    FrameBounds bounds;
};

/// Copy c of the model is e_j + kappa sum_{k != 0} lambda^{|k|} theta_{c,j,k} e_{j+k}
/// with kappa = (1 - lambda) / 4 and |theta| <= 1, truncated to the window, so
/// every copy is a Riesz basis and the cross Gram against E is dominated by
/// lambda^{|k|}. Throws std::invalid_argument for bad options.
SyntheticModel synthetic_localized_frame(const SyntheticOptions& options);

}  // namespace framelab
