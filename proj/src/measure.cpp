#include "framelab/measure.hpp"

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace framelab {

std::vector<cplx> relative_diagonal(const VectorFamily& F, const VectorFamily* E, double tol) {
    const VectorFamily dual = canonical_dual(F, tol);
    Matrix projected = F.columns;
    if (E) {
        if (E->ambient_dim() != F.ambient_dim()) throw std::invalid_argument("relative measure: ambient dimensions differ");
        projected = span_projector(*E, tol) * F.columns;
    }
    std::vector<cplx> out(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        const auto c = static_cast<Eigen::Index>(i);
        out[i] = dual.columns.col(c).dot(projected.col(c));  // <P_E f_i, f~_i>
    }
    return out;
}

namespace {

void finish_envelopes(MeasureProfile& prof, std::size_t nc) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    prof.inf_real.assign(prof.N_values.size(), nan);
    prof.sup_real.assign(prof.N_values.size(), nan);
    bool any = false;
    for (std::size_t k = 0; k < prof.cells.size(); ++k) {
        const auto& cell = prof.cells[k];
        if (!cell.valid) continue;
        any = true;
        const std::size_t n = k / nc;
        const double v = cell.average.real();
        if (std::isnan(prof.inf_real[n]) || v < prof.inf_real[n]) prof.inf_real[n] = v;
        if (std::isnan(prof.sup_real[n]) || v > prof.sup_real[n]) prof.sup_real[n] = v;
    }
    if (!any) throw TruncationError("measure profile: no valid (N, center) cell; window too small");
}

double extreme_at_largest(const std::vector<double>& v) {
    for (std::size_t k = v.size(); k-- > 0;)
        if (!std::isnan(v[k])) return v[k];
    throw TruncationError("measure profile has no valid cell");
}

void check_grid(std::span<const GroupElement> centers, std::span<const std::int64_t> N_values) {
    if (centers.empty()) throw std::invalid_argument("measure profile: no centers");
    if (!std::is_sorted(N_values.begin(), N_values.end()))
        throw std::invalid_argument("measure profile: N values must be increasing");
}

}  // namespace

double MeasureProfile::lower_estimate() const { return extreme_at_largest(inf_real); }
double MeasureProfile::upper_estimate() const { return extreme_at_largest(sup_real); }

MeasureProfile relative_measure_profile(const LocatedFamily& F, const LocatedFamily* E,
                                        std::span<const GroupElement> centers,
                                        std::span<const std::int64_t> N_values, double tol) {
    F.validate();
    check_grid(centers, N_values);
    const std::vector<cplx> diag = relative_diagonal(F.vectors, E ? &E->vectors : nullptr, tol);

    MeasureProfile prof;
    prof.N_values.assign(N_values.begin(), N_values.end());
    const std::size_t nc = centers.size();
    prof.cells.resize(N_values.size() * nc);
    parallel_for(prof.cells.size(), [&](std::size_t k) {
        MeasureCell& cell = prof.cells[k];
        cell.N = N_values[k / nc];
        cell.center = centers[k % nc];
        cell.valid = cell_valid(F.index, cell.center, cell.N);
        if (!cell.valid) return;
        const IdList ids = preimage_box(F.index, cell.center, cell.N);
        if (ids.empty()) throw PreconditionError("relative measure: empty I_N(c) in a valid cell");
        cplx sum{0.0, 0.0};
        for (auto i : ids) sum += diag[i];
        cell.count = ids.size();
        cell.average = sum / static_cast<double>(ids.size());
    });
    finish_envelopes(prof, nc);
    return prof;
}

namespace {

// <P_F e~_j, e_j> for every reference id.
std::vector<cplx> dual_side_diagonal(const VectorFamily& F, const VectorFamily& E, double tol) {
    const VectorFamily dualE = canonical_dual(E, tol);
    const Matrix projected = span_projector(F, tol) * dualE.columns;
    std::vector<cplx> out(E.size());
    for (std::size_t j = 0; j < E.size(); ++j) {
        const auto c = static_cast<Eigen::Index>(j);
        out[j] = E.columns.col(c).dot(projected.col(c));
    }
    return out;
}

}  // namespace

MeasureProfile dual_side_measure_profile(const LocatedFamily& F, const LocatedFamily& E,
                                         std::span<const GroupElement> centers,
                                         std::span<const std::int64_t> N_values, double tol) {
    F.validate();
    E.validate();
    check_grid(centers, N_values);
    const std::vector<cplx> diag = dual_side_diagonal(F.vectors, E.vectors, tol);

    MeasureProfile prof;
    prof.N_values.assign(N_values.begin(), N_values.end());
    const std::size_t nc = centers.size();
    prof.cells.resize(N_values.size() * nc);
    parallel_for(prof.cells.size(), [&](std::size_t k) {
        MeasureCell& cell = prof.cells[k];
        cell.N = N_values[k / nc];
        cell.center = centers[k % nc];
        cell.valid = cell_valid(E.index, cell.center, cell.N);
        if (!cell.valid) return;
        const IdList ids = preimage_box(E.index, cell.center, cell.N);
        cplx sum{0.0, 0.0};
        for (auto j : ids) sum += diag[j];
        cell.count = ids.size();
        cell.average = sum / static_cast<double>(box_cardinality(E.index.spec, cell.N));
    });
    finish_envelopes(prof, nc);
    return prof;
}

std::vector<ResidualCell> density_measure_residual(const LocatedFamily& F, const LocatedFamily& E,
                                                   std::span<const GroupElement> centers,
                                                   std::span<const std::int64_t> N_values, double tol) {
    F.validate();
    E.validate();
    check_grid(centers, N_values);
    const std::vector<cplx> rdiag = relative_diagonal(F.vectors, &E.vectors, tol);
    const std::vector<cplx> sdiag = dual_side_diagonal(F.vectors, E.vectors, tol);

    const std::size_t nc = centers.size();
    std::vector<std::optional<ResidualCell>> grid(N_values.size() * nc);
    parallel_for(grid.size(), [&](std::size_t k) {
        const std::int64_t N = N_values[k / nc];
        const GroupElement& c = centers[k % nc];
        if (!cell_valid(F.index, c, N) || !cell_valid(E.index, c, N)) return;
        const double volume = static_cast<double>(box_cardinality(F.index.spec, N));
        ResidualCell cell;
        cell.N = N;
        cell.center = c;
        for (auto j : preimage_box(E.index, c, N)) cell.s += sdiag[j];
        cell.s /= volume;
        const IdList ids = preimage_box(F.index, c, N);
        cell.d = static_cast<double>(ids.size()) / volume;
        if (!ids.empty()) {
            for (auto i : ids) cell.r += rdiag[i];
            cell.r /= static_cast<double>(ids.size());
        }
        cell.residual = std::abs(cell.s - cell.d * cell.r);
        grid[k] = cell;
    });
    std::vector<ResidualCell> out;
    for (auto& g : grid)
        if (g) out.push_back(std::move(*g));
    if (out.empty()) throw TruncationError("density_measure_residual: no valid cell");
    return out;
}

IdList j_alpha(const VectorFamily& F, double alpha, double tol) {
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("j_alpha: alpha must lie in [0, 1]");
    const RealVector q = self_dual_products(F, tol);
    IdList out;
    for (std::size_t i = 0; i < F.size(); ++i)
        if (q[static_cast<Eigen::Index>(i)] <= alpha + tol) out.push_back(i);
    return out;
}

JalphaReport jalpha_inequality_check(const LocatedFamily& F, double alpha, std::span<const GroupElement> centers,
                                     std::int64_t N, double tol) {
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("jalpha check: alpha must lie in (0, 1)");
    F.validate();
    const RealVector q = self_dual_products(F.vectors, tol);
    const IdList J = j_alpha(F.vectors, alpha, tol);
    std::vector<bool> inJ(F.vectors.size(), false);
    for (auto i : J) inJ[i] = true;

    JalphaReport rep;
    rep.alpha = alpha;
    rep.N = N;
    const double volume = static_cast<double>(box_cardinality(F.index.spec, N));
    for (const auto& c : centers) {
        if (!cell_valid(F.index, c, N)) continue;
        const IdList ids = preimage_box(F.index, c, N);
        if (ids.empty()) continue;
        JalphaCell cell;
        cell.center = c;
        double sum = 0.0;
        std::size_t nj = 0;
        for (auto i : ids) {
            sum += q[static_cast<Eigen::Index>(i)];
            if (inJ[i]) ++nj;
        }
        cell.measure = sum / static_cast<double>(ids.size());
        cell.density = static_cast<double>(ids.size()) / volume;
        cell.density_j = static_cast<double>(nj) / volume;
        cell.lower_bound = (alpha - cell.measure) / alpha * cell.density;
        cell.upper_bound = (1.0 - cell.measure) / (1.0 - alpha) * cell.density;
        cell.lower_margin = cell.density_j - cell.lower_bound;
        cell.upper_margin = cell.upper_bound - cell.density_j;
        // J_alpha admits values up to alpha + tol; allow the matching slack.
        const double slack = 10.0 * tol * cell.density / (1.0 - alpha) + 1e-12;
        cell.ok = cell.lower_margin >= -slack && cell.upper_margin >= -slack;
        rep.cells.push_back(std::move(cell));
    }
    if (rep.cells.empty()) throw TruncationError("jalpha check: no valid cell");
    rep.all_ok = true;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (const auto& cell : rep.cells) {
        rep.all_ok = rep.all_ok && cell.ok;
        rep.min_margin = std::min({rep.min_margin, cell.lower_margin, cell.upper_margin});
    }
    return rep;
}

}  // namespace framelab
