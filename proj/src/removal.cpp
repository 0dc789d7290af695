#include "framelab/removal.hpp"

#include "framelab/errors.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace framelab {

namespace {

double largest_eigenvalue(const Matrix& H) {
    if (H.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
    return std::max(0.0, es.eigenvalues().maxCoeff());
}

void check_ids(const VectorFamily& F, std::span<const std::size_t> J) {
    std::vector<bool> seen(F.size(), false);
    for (auto j : J) {
        if (j >= F.size()) throw std::invalid_argument("removal: id out of range");
        if (seen[j]) throw std::invalid_argument("removal: repeated id");
        seen[j] = true;
    }
}

Matrix columns_of(const VectorFamily& F, std::span<const std::size_t> J) { return subfamily(F, J).columns; }

}  // namespace

RhoReport removal_rho_report(const VectorFamily& F, std::span<const std::size_t> J, double tol) {
    check_ids(F, J);
    const SpanDecomposition sd = span_decomposition(F, tol);
    const RealVector inv = sd.eigenvalues.cwiseInverse();
    const RealVector inv_sqrt = inv.cwiseSqrt();
    const Matrix S_inv = sd.basis * inv.asDiagonal() * sd.basis.adjoint();
    const Matrix S_inv_sqrt = sd.basis * inv_sqrt.asDiagonal() * sd.basis.adjoint();
    const Matrix FJ = columns_of(F, J);

    RhoReport rep;
    rep.rho = largest_eigenvalue(FJ.adjoint() * S_inv * FJ);
    rep.via_sqrt = largest_eigenvalue(S_inv_sqrt * (FJ * FJ.adjoint()) * S_inv_sqrt);
    const Matrix H = S_inv_sqrt * F.columns;
    const Matrix P = H.adjoint() * H;
    Matrix PJ(static_cast<Eigen::Index>(J.size()), static_cast<Eigen::Index>(J.size()));
    for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = 0; b < J.size(); ++b)
            PJ(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                P(static_cast<Eigen::Index>(J[a]), static_cast<Eigen::Index>(J[b]));
    rep.via_projection = largest_eigenvalue(PJ);
    rep.discrepancy = std::max({std::abs(rep.rho - rep.via_sqrt), std::abs(rep.rho - rep.via_projection),
                                std::abs(rep.via_sqrt - rep.via_projection)});
    return rep;
}

double removal_rho(const VectorFamily& F, std::span<const std::size_t> J, double tol) {
    return removal_rho_report(F, J, tol).rho;
}

std::string to_string(RemovalStatus s) {
    return s == RemovalStatus::RemainderIsFrame ? "remainder_is_frame" : "span_reduced";
}

RemovalReport remove_and_bounds(const VectorFamily& F, std::span<const std::size_t> J, double tol) {
    check_ids(F, J);
    const SpanDecomposition sd = span_decomposition(F, tol);
    RemovalReport rep;
    rep.A = sd.eigenvalues.minCoeff();
    rep.B = sd.eigenvalues.maxCoeff();
    rep.rho = removal_rho(F, J, tol);
    rep.predicted_lower = rep.A * (1.0 - rep.rho);

    const VectorFamily rest = remove_ids(F, J);
    const Matrix C = sd.basis.adjoint() * rest.columns;
    Eigen::SelfAdjointEigenSolver<Matrix> es(C * C.adjoint(), Eigen::EigenvaluesOnly);
    rep.remainder_lower = std::max(0.0, es.eigenvalues().minCoeff());
    rep.remainder_upper = std::max(0.0, es.eigenvalues().maxCoeff());
    rep.status = rep.remainder_lower > tol * rep.B ? RemovalStatus::RemainderIsFrame : RemovalStatus::SpanReduced;
    const bool predicted_frame = rep.rho < 1.0;
    rep.consistent = std::abs(rep.rho - 1.0) <= kRhoBand ||
                     predicted_frame == (rep.status == RemovalStatus::RemainderIsFrame);
    return rep;
}

namespace {

std::int64_t default_search_limit(const IndexedSet& I) {
    double width = 0.0;
    for (std::size_t a = 0; a < I.spec.free_rank(); ++a) {
        const double scale = boost::rational_cast<double>(I.spec.scales[a]);
        width = std::max(width, static_cast<double>(I.support->hi[a] - I.support->lo[a] + 1) * scale);
    }
    return static_cast<std::int64_t>(std::ceil(width)) + 1;
}

// Box centers spaced |S_{2N}(0)| apart along every free axis, torsion residue 0.
std::vector<GroupElement> tiling_centers(const IndexedSet& I, std::int64_t N) {
    const GroupSpec& spec = I.spec;
    const Window& w = *I.support;
    const std::size_t d = spec.free_rank();
    std::vector<std::vector<std::int64_t>> axes(d);
    for (std::size_t a = 0; a < d; ++a) {
        const std::int64_t r = free_radius(spec, a, N);
        const std::int64_t step = 2 * free_radius(spec, a, 2 * N) + 1;
        for (std::int64_t c = w.lo[a] + r; c + r <= w.hi[a]; c += step) axes[a].push_back(c);
        if (axes[a].empty()) return {};
    }
    std::vector<GroupElement> out;
    std::vector<std::size_t> pos(d, 0);
    const std::vector<std::int64_t> tors(spec.torsion_rank(), 0);
    while (true) {
        std::vector<std::int64_t> free(d);
        for (std::size_t a = 0; a < d; ++a) free[a] = axes[a][pos[a]];
        out.emplace_back(spec, free, tors);
        std::size_t a = d;
        while (a-- > 0) {
            if (++pos[a] < axes[a].size()) break;
            pos[a] = 0;
        }
        if (a == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

}  // namespace

PositiveRemoval positive_density_removal(const LocatedFamily& F, double alpha, double eps,
                                         const PositiveRemovalOptions& options) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("positive removal: alpha must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0 - alpha)) throw std::invalid_argument("positive removal: eps must lie in (0, 1 - alpha)");
    F.validate();
    const IndexedSet& I = F.index;
    if (!I.support) throw std::invalid_argument("positive removal: the index set needs a support window");
    if (I.spec.free_rank() == 0) throw std::invalid_argument("positive removal: needs at least one free axis");
    const double tol = options.tol;
    const std::int64_t N_max = options.N_max > 0 ? options.N_max : default_search_limit(I);
    const std::int64_t N_min = I.spec.torsion_rank() > 0 ? 2 : 1;

    RemovalCertificate cert;
    const Envelope r = dual_pair_envelope(F, 1.0, tol);
    std::optional<std::int64_t> n_eps;
    for (std::int64_t N = 0; N <= N_max && !n_eps; ++N)
        if (r.tail_outside_box(N) < eps) n_eps = N;
    if (!n_eps) throw TruncationError("positive removal: dual-pair tail never drops below eps within the window");
    cert.N_eps = *n_eps;

    {
        const std::int64_t Nm = std::max(cert.N_eps, N_min);
        const std::vector<GroupElement> centers = valid_centers(I, Nm);
        if (centers.empty()) throw TruncationError("positive removal: no valid box at scale N_eps");
        const std::int64_t Ns[] = {Nm};
        cert.measure_upper = relative_measure_profile(F, nullptr, centers, Ns, tol).upper_estimate();
        if (!(cert.measure_upper < alpha))
            throw PreconditionError("positive removal: measure estimate " + std::to_string(cert.measure_upper) +
                                    " is not below alpha");
    }

    const RealVector q = self_dual_products(F.vectors, tol);
    const IdList Ja = j_alpha(F.vectors, alpha, tol);
    std::vector<bool> inJ(F.vectors.size(), false);
    for (auto i : Ja) inJ[i] = true;
    auto meets = [&](const GroupElement& c, std::int64_t N) {
        for (auto i : preimage_box(I, c, N))
            if (inJ[i]) return true;
        return false;
    };

    std::optional<std::int64_t> n0;
    for (std::int64_t N = N_min; N <= N_max && !n0; ++N) {
        const std::vector<GroupElement> centers = valid_centers(I, N);
        if (centers.empty()) break;
        if (std::all_of(centers.begin(), centers.end(), [&](const GroupElement& c) { return meets(c, N); })) n0 = N;
    }
    if (!n0) throw TruncationError("positive removal: some box misses J_alpha at every scale that fits the window");
    cert.N0 = *n0;
    cert.N = std::max({cert.N_eps, cert.N0, N_min});

    const std::vector<GroupElement> centers = tiling_centers(I, cert.N);
    if (centers.empty()) throw TruncationError("positive removal: no box of size N fits the window");
    cert.box_count = centers.size();
    std::vector<std::optional<std::size_t>> pick(centers.size());
    parallel_for(centers.size(), [&](std::size_t k) {
        for (auto i : preimage_box(I, centers[k], cert.N))
            if (inJ[i]) {
                pick[k] = i;
                return;
            }
    });
    PositiveRemoval out;
    for (const auto& p : pick) {
        if (!p) throw PreconditionError("positive removal: a tiling box misses J_alpha");
        out.J.push_back(*p);
    }
    std::sort(out.J.begin(), out.J.end());

    const RhoReport rho = removal_rho_report(F.vectors, out.J, tol);
    cert.rho = rho.rho;
    cert.diag_norm = 0.0;
    for (auto j : out.J) cert.diag_norm = std::max(cert.diag_norm, q[static_cast<Eigen::Index>(j)]);
    {
        const Matrix H = subfamily(parseval(F.vectors, tol), out.J).columns;
        Matrix off = H.adjoint() * H;
        off.diagonal().setZero();
        Eigen::SelfAdjointEigenSolver<Matrix> es(off, Eigen::EigenvaluesOnly);
        cert.offdiag_norm = off.size() ? es.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
    }
    cert.offdiag_bound = r.tail_outside_box(cert.N_eps);
    const RemovalReport rem = remove_and_bounds(F.vectors, out.J, tol);
    cert.A = rem.A;
    cert.B = rem.B;
    cert.predicted_lower = rem.A * (1.0 - alpha - eps);
    cert.actual_lower = rem.remainder_lower;
    const auto big = static_cast<double>(box_cardinality(I.spec, 2 * cert.N));
    cert.certified_density = 1.0 / big;
    cert.tiled_density = static_cast<double>(out.J.size()) / (static_cast<double>(cert.box_count) * big);
    cert.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < out.J.size(); ++x)
        for (std::size_t y = x + 1; y < out.J.size(); ++y)
            cert.min_separation = std::min(cert.min_separation,
                                           metric_norm(I.spec, subtract(I.spec, I.locations[out.J[x]], I.locations[out.J[y]])));
    out.certificate = cert;
    return out;
}

}  // namespace framelab
