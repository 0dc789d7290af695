#pragma once

// Removing a subfamily J from a frame: the quantity
//
//     rho = || T_J S^{-1} T_J^* || = || S^{-1/2} S_J S^{-1/2} || = || R_J P R_J ||
//
// decides whether the remainder is still a frame for span(F), and a box
// selection builds J of positive uniform density with rho <= alpha + eps.

#include "framelab/index_map.hpp"

#include <string>

namespace framelab {

struct RhoReport {
    double rho = 0.0;             // lambda_max [<f_j, f~_i>]_{i,j in J}
    double via_sqrt = 0.0;        // || S^{-1/2} S_J S^{-1/2} ||
    double via_projection = 0.0;  // || R_J P R_J ||, P the Gram of the Parseval frame
    double discrepancy = 0.0;     // largest pairwise difference of the three
};

/// Computes all three expressions. Throws std::invalid_argument for ids out
/// of range or repeated, std::domain_error when F has no numerical span.
RhoReport removal_rho_report(const VectorFamily& F, std::span<const std::size_t> J, double tol = kDefaultTol);
double removal_rho(const VectorFamily& F, std::span<const std::size_t> J, double tol = kDefaultTol);

enum class RemovalStatus { RemainderIsFrame, SpanReduced };

/// Values of rho within this distance of 1 are not used to judge consistency.
inline constexpr double kRhoBand = 1e-6;

struct RemovalReport {
    double rho = 0.0;
    double A = 0.0;                // bounds of F on span(F)
    double B = 0.0;
    double predicted_lower = 0.0;  // A (1 - rho)
    double remainder_lower = 0.0;  // bounds of the remainder on span(F)
    double remainder_upper = 0.0;
    RemovalStatus status = RemovalStatus::SpanReduced;
    /// (rho < 1) agrees with the status, or rho lies within kRhoBand of 1.
    bool consistent = false;
};

RemovalReport remove_and_bounds(const VectorFamily& F, std::span<const std::size_t> J, double tol = kDefaultTol);

std::string to_string(RemovalStatus s);

struct PositiveRemovalOptions {
    std::int64_t N_max = 0;  // search limit for N_eps and N0; 0 means the window width
    double tol = kDefaultTol;
};

struct RemovalCertificate {
    std::int64_t N_eps = 0;
    std::int64_t N0 = 0;
    std::int64_t N = 0;
    std::size_t box_count = 0;
    double measure_upper = 0.0;      // M+ estimate at scale N_eps
    double rho = 0.0;
    double diag_norm = 0.0;          // max_{j in J} <f_j, f~_j>
    double offdiag_norm = 0.0;       // || R_J P R_J - diag ||
    double offdiag_bound = 0.0;      // dual-pair tail outside S_{N_eps}(0)
    double A = 0.0;
    double B = 0.0;
    double predicted_lower = 0.0;    // A (1 - alpha - eps)
    double actual_lower = 0.0;
    double certified_density = 0.0;  // 1 / |S_{2N}(0)|
    double tiled_density = 0.0;      // |J| / (box_count |S_{2N}(0)|)
    double min_separation = 0.0;     // smallest |a(j) - a(j')| over selected pairs
};

struct PositiveRemoval {
    IdList J;
    RemovalCertificate certificate;
};

/// Tiles the support window of F with boxes S_N(c) whose centers are spaced
/// |S_{2N}(0)| apart (free part), N = max(N_eps, N0), and picks the lowest id
/// of I_N(c) n J_alpha in each box.
///
/// Throws std::invalid_argument for bad parameters or a missing window,
/// PreconditionError when the measure estimate is not below alpha, and
/// TruncationError when no admissible N fits the window.
PositiveRemoval positive_density_removal(const LocatedFamily& F, double alpha, double eps,
                                         const PositiveRemovalOptions& options = {});

}  // namespace framelab
