#pragma once

// Box-averaged measures of a frame sequence F (map a) relative to a reference
// E. Averages are complex in general; they are real and lie in [0, 1] when
// span(E) contains span(F). Ultrafilter limits are replaced by the grid of
// (N, center) cells and the inf/sup envelopes of the real parts.

#include "framelab/index_map.hpp"

#include <complex>
#include <optional>
#include <span>

namespace framelab {

struct MeasureCell {
    std::int64_t N = 0;
    GroupElement center;
    std::size_t count = 0;   // number of summands
    cplx average{0.0, 0.0};
    bool valid = false;
};

struct MeasureProfile {
    std::vector<std::int64_t> N_values;
    std::vector<double> inf_real;  // NaN when no valid cell at that N
    std::vector<double> sup_real;
    std::vector<MeasureCell> cells;  // N-major, centers in input order

    double lower_estimate() const;
    double upper_estimate() const;
};

/// <P_E f_i, f~_i> for every id; with no reference this is <f_i, f~_i>.
std::vector<cplx> relative_diagonal(const VectorFamily& F, const VectorFamily* E, double tol = kDefaultTol);

/// Averages of <P_E f_i, f~_i> over I_N(c). Passing no reference gives the
/// measure of F itself. Throws PreconditionError when a valid cell has an
/// empty I_N(c) and TruncationError when no cell is valid.
MeasureProfile relative_measure_profile(const LocatedFamily& F, const LocatedFamily* E,
                                        std::span<const GroupElement> centers,
                                        std::span<const std::int64_t> N_values, double tol = kDefaultTol);

/// Averages (1 / |S_N(c)|) sum_{j: loc(e_j) in S_N(c)} <P_F e~_j, e_j>; cells
/// are valid when S_N(c) lies inside E's support window.
MeasureProfile dual_side_measure_profile(const LocatedFamily& F, const LocatedFamily& E,
                                         std::span<const GroupElement> centers,
                                         std::span<const std::int64_t> N_values, double tol = kDefaultTol);

struct ResidualCell {
    std::int64_t N = 0;
    GroupElement center;
    cplx s{0.0, 0.0};
    double d = 0.0;
    cplx r{0.0, 0.0};
    double residual = 0.0;  // |s - d r|
};

/// Cells (N, c) valid for both F and E, in N-major order. Throws
/// TruncationError when none is valid.
std::vector<ResidualCell> density_measure_residual(const LocatedFamily& F, const LocatedFamily& E,
                                                   std::span<const GroupElement> centers,
                                                   std::span<const std::int64_t> N_values,
                                                   double tol = kDefaultTol);

/// J_alpha = { i : <f_i, f~_i> <= alpha }, with values within tol of alpha
/// counted in.
IdList j_alpha(const VectorFamily& F, double alpha, double tol = kDefaultTol);

struct JalphaCell {
    GroupElement center;
    double measure = 0.0;         // average <f_i, f~_i> over I_N(c)
    double density = 0.0;         // |I_N(c)| / |S_N(c)|
    double density_j = 0.0;       // |I_N(c) n J_alpha| / |S_N(c)|
    double lower_bound = 0.0;     // (alpha - M) / alpha * D
    double upper_bound = 0.0;     // (1 - M) / (1 - alpha) * D
    double lower_margin = 0.0;    // density_j - lower_bound
    double upper_margin = 0.0;    // upper_bound - density_j
    bool ok = false;
};

struct JalphaReport {
    double alpha = 0.0;
    std::int64_t N = 0;
    std::vector<JalphaCell> cells;
    double min_margin = 0.0;
    bool all_ok = false;
};

/// Cell-level check of
///   (alpha - M)/alpha * D <= D(J_alpha) <= (1 - M)/(1 - alpha) * D.
/// Invalid cells are skipped; throws TruncationError when none remain.
JalphaReport jalpha_inequality_check(const LocatedFamily& F, double alpha, std::span<const GroupElement> centers,
                                     std::int64_t N, double tol = kDefaultTol);

}  // namespace framelab
