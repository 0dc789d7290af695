#include "framelab/frame_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace framelab {

VectorFamily subfamily(const VectorFamily& F, std::span<const std::size_t> ids) {
    Matrix m(F.columns.rows(), static_cast<Eigen::Index>(ids.size()));
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (ids[k] >= F.size()) throw std::out_of_range("subfamily: id out of range");
        m.col(static_cast<Eigen::Index>(k)) = F.columns.col(static_cast<Eigen::Index>(ids[k]));
    }
    return VectorFamily(std::move(m));
}

VectorFamily remove_ids(const VectorFamily& F, std::span<const std::size_t> ids) {
    std::unordered_set<std::size_t> drop(ids.begin(), ids.end());
    std::vector<std::size_t> keep;
    keep.reserve(F.size());
    for (std::size_t i = 0; i < F.size(); ++i)
        if (!drop.count(i)) keep.push_back(i);
    return subfamily(F, keep);
}

Matrix gram(const VectorFamily& F) {
    // (i, j) = f_j^H f_i
    return (F.columns.adjoint() * F.columns).transpose();
}

Matrix frame_operator(const VectorFamily& F) { return F.columns * F.columns.adjoint(); }

namespace {

struct Spectrum {
    RealVector values;
    Matrix vectors;
};

Spectrum hermitian_spectrum(const Matrix& S) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(S);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace

FrameBounds frame_bounds(const VectorFamily& F, double tol) {
    if (tol <= 0) throw std::invalid_argument("frame_bounds: tol must be positive");
    if (F.size() == 0 || F.columns.cwiseAbs().maxCoeff() == 0.0)
        throw std::domain_error("frame_bounds: family spans the zero space");
    const Spectrum sp = hermitian_spectrum(frame_operator(F));
    const double top = sp.values.maxCoeff();
    const double cut = tol * top;
    FrameBounds fb;
    fb.upper = top;
    fb.lower = top;
    for (Eigen::Index k = 0; k < sp.values.size(); ++k) {
        if (sp.values[k] > cut) {
            ++fb.span_rank;
            fb.lower = std::min(fb.lower, sp.values[k]);
        }
    }
    fb.is_frame_sequence = fb.lower > cut;
    return fb;
}

SpanDecomposition span_decomposition(const VectorFamily& F, double tol) {
    if (F.size() == 0 || F.columns.cwiseAbs().maxCoeff() == 0.0)
        throw std::domain_error("span_decomposition: family spans the zero space");
    const Spectrum sp = hermitian_spectrum(frame_operator(F));
    const double top = sp.values.maxCoeff();
    const double cut = tol * top;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < sp.values.size(); ++k) {
        const double v = sp.values[k];
        if (v > cut / 100.0 && v < cut * 100.0)
            throw std::domain_error("span_decomposition: ambiguous numerical rank");
        if (v > cut) kept.push_back(k);
    }
    SpanDecomposition out;
    out.threshold = cut;
    out.basis.resize(sp.vectors.rows(), static_cast<Eigen::Index>(kept.size()));
    out.eigenvalues.resize(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        out.basis.col(static_cast<Eigen::Index>(c)) = sp.vectors.col(kept[c]);
        out.eigenvalues[static_cast<Eigen::Index>(c)] = sp.values[kept[c]];
    }
    return out;
}

namespace {

Matrix spectral_power(const SpanDecomposition& sd, double exponent) {
    RealVector w = sd.eigenvalues.array().pow(exponent);
    return sd.basis * w.asDiagonal() * sd.basis.adjoint();
}

}  // namespace

VectorFamily canonical_dual(const VectorFamily& F, double tol) {
    const auto sd = span_decomposition(F, tol);
    return VectorFamily(spectral_power(sd, -1.0) * F.columns);
}

VectorFamily parseval(const VectorFamily& F, double tol) {
    const auto sd = span_decomposition(F, tol);
    return VectorFamily(spectral_power(sd, -0.5) * F.columns);
}

Matrix span_projector(const VectorFamily& F, double tol) {
    const auto sd = span_decomposition(F, tol);
    return sd.basis * sd.basis.adjoint();
}

Vector project_span(const VectorFamily& F, const Vector& f, double tol) {
    if (static_cast<std::size_t>(f.size()) != F.ambient_dim())
        throw std::invalid_argument("project_span: dimension mismatch");
    const auto sd = span_decomposition(F, tol);
    return sd.basis * (sd.basis.adjoint() * f);
}

RealVector self_dual_products(const VectorFamily& F, double tol) {
    const VectorFamily P = parseval(F, tol);
    return P.columns.colwise().squaredNorm().transpose();
}

RealVector synthesis_singular_values(const VectorFamily& F) {
    RealVector out = RealVector::Zero(static_cast<Eigen::Index>(F.size()));
    if (F.size() == 0) return out;
    Eigen::BDCSVD<Matrix> svd(F.columns);
    const RealVector s = svd.singularValues();
    out.head(s.size()) = s;
    return out;
}

RieszCheck riesz_check(const VectorFamily& F, double tol) {
    if (F.size() == 0) return {};
    const RealVector s = synthesis_singular_values(F);
    RieszCheck rc;
    rc.upper = s.maxCoeff() * s.maxCoeff();
    rc.lower = s.minCoeff() * s.minCoeff();
    rc.is_riesz = rc.upper > 0 && rc.lower > tol * rc.upper;
    return rc;
}

BesselDimCheck bessel_dim_bound_check(const VectorFamily& F, double tol) {
    if (F.size() == 0) throw std::invalid_argument("bessel_dim_bound_check: empty family");
    const RealVector norms = F.columns.colwise().squaredNorm().transpose();
    if (norms.minCoeff() == 0.0) throw std::invalid_argument("bessel_dim_bound_check: zero vector present");
    const FrameBounds fb = frame_bounds(F, tol);
    BesselDimCheck out;
    out.bessel_bound = fb.upper;
    out.required = norms.minCoeff() * static_cast<double>(F.size()) / static_cast<double>(fb.span_rank);
    out.holds = out.bessel_bound >= out.required * (1.0 - 1e-12);
    return out;
}

}  // namespace framelab
