#include "framelab/envelope_algebra.hpp"

#include "framelab/errors.hpp"
#include "framelab/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace framelab {

Envelope min_envelope_of(const Matrix& V, const IndexedSet& a) { return envelope_of_matrix(V, a, a, 1.0); }

bool dominates(const Envelope& r, const Matrix& M, const IndexedSet& a, double tol) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            const double bound = r.at(subtract(a.spec, a.locations[static_cast<std::size_t>(i)],
                                               a.locations[static_cast<std::size_t>(j)]))
                                     .value;
            if (std::abs(M(i, j)) > bound + tol) return false;
        }
    return true;
}

DominatedMatrix::DominatedMatrix(Matrix matrix, IndexedSet index, Envelope envelope, double tol)
    : matrix_(std::move(matrix)), index_(std::move(index)), envelope_(std::move(envelope)) {
    if (static_cast<std::size_t>(matrix_.rows()) != index_.size() || matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("DominatedMatrix: matrix must be square over the index set");
    check_summable(envelope_);
    const double scale = matrix_.size() ? std::max(1.0, matrix_.cwiseAbs().maxCoeff()) : 1.0;
    if (!dominates(envelope_, matrix_, index_, tol * scale))
        throw std::invalid_argument("DominatedMatrix: envelope does not dominate the matrix");
    K_ = std::max<std::size_t>(1, framelab::fiber_bound(index_));
}

DominatedMatrix::DominatedMatrix(Matrix matrix, IndexedSet index)
    : DominatedMatrix(matrix, index, min_envelope_of(matrix, index)) {}

OpnormBound opnorm_bound_check(const DominatedMatrix& V, double tol) {
    OpnormBound out;
    out.bound = static_cast<double>(V.fiber_bound()) * V.envelope().l1_norm();
    if (V.matrix().size() > 0) {
        Eigen::BDCSVD<Matrix> svd(V.matrix());
        out.actual = svd.singularValues()(0);
    }
    out.ok = out.actual <= out.bound + tol * std::max(1.0, out.bound);
    return out;
}

Envelope envelope_add(cplx c, const Envelope& r, const Envelope& s) { return combine(std::abs(c), r, s); }

Envelope envelope_multiply(const Envelope& r, const Envelope& s, std::size_t K) {
    if (K < 1) throw std::invalid_argument("envelope_multiply: K must be >= 1");
    return scaled(convolve(r, s), static_cast<double>(K));
}

Envelope polynomial_envelope(std::span<const cplx> coeffs, const Envelope& r, std::size_t K) {
    if (K < 1) throw std::invalid_argument("polynomial_envelope: K must be >= 1");
    check_summable(r);
    Envelope out;
    out.spec = r.spec;
    out.values[GroupElement::zero(r.spec)] = 0.0;
    Envelope power = Envelope::delta(r.spec);  // r^{*0}
    double kpow = 1.0 / static_cast<double>(K);  // K^{n-1} for n = 0 is unused
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n >= 1) {
            power = n == 1 ? r : convolve(power, r);
            kpow = n == 1 ? 1.0 : kpow * static_cast<double>(K);
        }
        const double weight = n == 0 ? std::abs(coeffs[0]) : kpow * std::abs(coeffs[n]);
        if (weight == 0.0) continue;
        out = combine(weight, power, out);
    }
    return out;
}

Matrix matrix_polynomial(std::span<const cplx> coeffs, const Matrix& V) {
    Matrix out = Matrix::Zero(V.rows(), V.cols());
    Matrix power = Matrix::Identity(V.rows(), V.cols());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n >= 1) power = power * V;
        out += coeffs[n] * power;
    }
    return out;
}

namespace {

// Ids whose free coordinates sit inside the central part of the index window.
std::vector<std::size_t> interior_ids(const IndexedSet& I, double margin) {
    const std::size_t d = I.spec.free_rank();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity()), hi(d, -std::numeric_limits<double>::infinity());
    for (const auto& loc : I.locations)
        for (std::size_t a = 0; a < d; ++a) {
            lo[a] = std::min(lo[a], static_cast<double>(loc.free()[a]));
            hi[a] = std::max(hi[a], static_cast<double>(loc.free()[a]));
        }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < I.size(); ++i) {
        bool inside = true;
        for (std::size_t a = 0; a < d && inside; ++a) {
            const double width = hi[a] - lo[a];
            const double k = static_cast<double>(I.locations[i].free()[a]);
            inside = k >= lo[a] + margin * width - 1e-9 && k <= hi[a] - margin * width + 1e-9;
        }
        if (inside) out.push_back(i);
    }
    return out;
}

}  // namespace

ProbeReport pseudoinverse_decay_probe(const DominatedMatrix& V, double lower, double upper,
                                      const ProbeOptions& options) {
    if (!(lower > 0 && lower <= upper)) throw std::invalid_argument("probe: need 0 < lower <= upper");
    if (!(options.margin >= 0 && options.margin < 0.5)) throw std::invalid_argument("probe: margin must lie in [0, 0.5)");
    const Matrix& M = V.matrix();
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.adjoint()).cwiseAbs().maxCoeff() > options.tol * scale)
        throw PreconditionError("probe: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    if (es.info() != Eigen::Success) throw std::runtime_error("probe: eigendecomposition failed");
    const RealVector& ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    const double cut = options.tol * std::max(top, 1e-300);

    ProbeReport rep;
    rep.fit_model = options.model == DecayModel::Exponential ? "exponential" : "l1_tail";
    rep.spectral_lower = lower;
    rep.spectral_upper = upper;
    rep.observed_min_nonzero = std::numeric_limits<double>::infinity();
    rep.observed_max = 0.0;
    const double slack = options.tol * std::max(1.0, upper);
    bool contained = true;
    RealVector inv = RealVector::Zero(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (std::abs(ev[k]) <= cut) continue;
        rep.observed_min_nonzero = std::min(rep.observed_min_nonzero, ev[k]);
        rep.observed_max = std::max(rep.observed_max, ev[k]);
        if (ev[k] < lower - slack || ev[k] > upper + slack) contained = false;
        inv[k] = 1.0 / ev[k];
    }
    rep.spectrum_contained = contained;
    if (!contained) throw PreconditionError("probe: nonzero spectrum leaves the declared interval");
    rep.pseudo_inverse = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();

    // envelope of V+ restricted to interior pairs
    const std::vector<std::size_t> ids = interior_ids(V.index(), options.margin);
    rep.interior_size = ids.size();
    IndexedSet sub;
    sub.spec = V.index().spec;
    Matrix block(static_cast<Eigen::Index>(ids.size()), static_cast<Eigen::Index>(ids.size()));
    for (std::size_t a = 0; a < ids.size(); ++a) {
        sub.locations.push_back(V.index().locations[ids[a]]);
        for (std::size_t b = 0; b < ids.size(); ++b)
            block(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                rep.pseudo_inverse(static_cast<Eigen::Index>(ids[a]), static_cast<Eigen::Index>(ids[b]));
    }
    rep.interior_envelope = min_envelope_of(block, sub);

    // log-linear least squares on (|k|, log r_k)
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t n = 0;
    double max_dist = 0.0;
    for (const auto& [k, v] : rep.interior_envelope.values) {
        const double dist = metric_norm(sub.spec, k);
        max_dist = std::max(max_dist, dist);
        if (dist > static_cast<double>(options.tail_offset)) rep.interior_l1_tail += v;
        if (v <= options.noise_floor) continue;
        const double y = std::log(v);
        sx += dist;
        sy += y;
        sxx += dist * dist;
        sxy += dist * y;
        syy += y * y;
        ++n;
    }
    rep.fit_points = n;
    if (n >= 2 && n * sxx - sx * sx > 0) {
        const double dn = static_cast<double>(n);
        const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
        const double icept = (sy - slope * sx) / dn;
        rep.rate = std::exp(slope);
        rep.amplitude = std::exp(icept);
        const double ss_tot = syy - sy * sy / dn;
        double ss_res = 0.0;
        for (const auto& [k, v] : rep.interior_envelope.values) {
            if (v <= options.noise_floor) continue;
            const double e = std::log(v) - (icept + slope * metric_norm(sub.spec, k));
            ss_res += e * e;
        }
        rep.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    } else if (n >= 1) {
        // all mass at a single distance: a delta envelope decays perfectly
        rep.amplitude = std::exp(sy / static_cast<double>(n));
        rep.rate = 0.0;
        rep.r_squared = 1.0;
    }

    for (double t = 0.0; t <= max_dist; t += 1.0) {
        double s = 0.0;
        for (const auto& [k, v] : rep.interior_envelope.values)
            if (metric_norm(sub.spec, k) > t) s += v;
        rep.tail_profile.emplace_back(t, s);
    }
    return rep;
}

}  // namespace framelab
