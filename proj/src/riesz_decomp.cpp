#include "framelab/riesz_decomp.hpp"

#include "framelab/envelope_algebra.hpp"
#include "framelab/errors.hpp"
#include "framelab/localization.hpp"
#include "framelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>

namespace framelab {

EpsRieszResult eps_riesz_check(const VectorFamily& F, double eps, double tol) {
    if (F.size() == 0) throw std::invalid_argument("eps_riesz_check: empty family");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps_riesz_check: eps must lie in (0, 1)");
    const RealVector sv = synthesis_singular_values(F);
    EpsRieszResult out;
    out.sigma_max2 = sv.maxCoeff() * sv.maxCoeff();
    out.sigma_min2 = sv.minCoeff() * sv.minCoeff();
    out.A = 0.5 * (out.sigma_max2 + out.sigma_min2);
    if (!(out.sigma_min2 > tol * out.sigma_max2)) return out;
    out.ok = out.sigma_max2 / out.sigma_min2 <= (1.0 + eps) / (1.0 - eps) * (1.0 + 1e-12);
    return out;
}

Decomposition decompose(const LocatedFamily& F, double eps, const DecomposeOptions& options) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("decompose: eps must lie in (0, 1)");
    F.validate();
    const std::size_t n = F.vectors.size();
    if (n == 0) throw std::invalid_argument("decompose: empty family");
    const GroupSpec& spec = F.index.spec;
    const double tol = options.tol;

    Decomposition dec;
    const RealVector norms = F.vectors.columns.colwise().squaredNorm().transpose();
    dec.M = norms.maxCoeff();
    dec.m = norms.minCoeff();
    if (!(dec.m > tol * dec.M)) throw PreconditionError("decompose: the family contains a zero vector");
    dec.delta = eps * dec.m;
    const double spread = dec.M - dec.m;
    dec.K = spread > 0.0 ? static_cast<std::size_t>(std::floor(2.0 * spread / dec.delta)) + 1 : 1;
    while (spread / static_cast<double>(dec.K) >= dec.delta / 2.0) ++dec.K;

    const Envelope s = self_envelope(F);
    const std::int64_t N_max = options.N_max > 0 ? options.N_max : 2 * s.support_extent() + 2;
    std::optional<std::int64_t> nd;
    for (std::int64_t N = 1; N <= N_max && !nd; ++N)
        if (s.tail_outside_half_open_box(N) < dec.delta / 2.0) nd = N;
    if (!nd) throw TruncationError("decompose: self-envelope tail never drops below delta / 2");
    dec.N_delta = *nd;

    const std::size_t d = spec.free_rank();
    using BoxKey = std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>;
    std::map<BoxKey, IdList> boxes;
    for (std::size_t i = 0; i < n; ++i) {
        const double ni = norms[static_cast<Eigen::Index>(i)];
        std::size_t cls = 0;
        if (spread > 0.0)
            cls = std::min(dec.K - 1, static_cast<std::size_t>(std::floor((ni - dec.m) / spread * static_cast<double>(dec.K))));
        const std::vector<std::int64_t> tile = half_open_tile(spec, F.index.locations[i], dec.N_delta);
        std::size_t grid = 0;
        for (std::size_t a = 0; a < d; ++a)
            if (((tile[a] % 2) + 2) % 2 == 1) grid |= std::size_t{1} << a;
        boxes[{cls, grid, tile}].push_back(i);
    }

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, IdList> parts;
    for (const auto& [key, ids] : boxes) {
        dec.L = std::max(dec.L, ids.size());
        for (std::size_t l = 0; l < ids.size(); ++l) parts[{std::get<0>(key), std::get<1>(key), l}].push_back(ids[l]);
    }
    dec.part_bound = dec.K * (std::size_t{1} << d) * dec.L;
    for (auto& [label, ids] : parts) {
        std::sort(ids.begin(), ids.end());
        dec.parts.push_back(ids);
        dec.labels.push_back({std::get<0>(label), std::get<1>(label), std::get<2>(label)});
    }

    dec.per_part.resize(dec.parts.size());
    parallel_for(dec.parts.size(), [&](std::size_t k) {
        const IdList& ids = dec.parts[k];
        const VectorFamily sub = subfamily(F.vectors, ids);
        PartCertificate& cert = dec.per_part[k];
        cert.riesz = eps_riesz_check(sub, eps, tol);
        Matrix off = gram(sub);
        off.diagonal().setZero();
        Eigen::SelfAdjointEigenSolver<Matrix> es(off, Eigen::EigenvaluesOnly);
        cert.offdiag_norm = es.eigenvalues().cwiseAbs().maxCoeff();
        IndexedSet where;
        where.spec = spec;
        for (auto i : ids) where.locations.push_back(F.index.locations[i]);
        cert.offdiag_bound = opnorm_bound_check(DominatedMatrix(off, where)).bound;
        cert.offdiag_ok = cert.offdiag_norm < dec.delta / 2.0;
    });
    dec.all_ok = dec.parts.size() <= dec.part_bound &&
                 std::all_of(dec.per_part.begin(), dec.per_part.end(),
                             [](const PartCertificate& c) { return c.riesz.ok && c.offdiag_ok; });
    return dec;
}

}  // namespace framelab
