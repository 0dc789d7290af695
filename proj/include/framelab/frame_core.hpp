#pragma once

// Finite frame linear algebra over C^n.
//
// Inner products are linear in the first argument: <x, y> = y^H x. With this
// convention the Gram matrix entry (i, j) is <f_i, f_j> and the frame
// operator is S = F F^H where F holds the vectors as columns.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace framelab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative eigenvalue threshold used for all rank decisions.
inline constexpr double kDefaultTol = 1e-10;

inline cplx inner(const Vector& x, const Vector& y) { return y.dot(x); }

/// A finite family of vectors in C^n stored column-wise; zero columns allowed.
struct VectorFamily {
    Matrix columns;

    VectorFamily() = default;
    explicit VectorFamily(Matrix m) : columns(std::move(m)) {}

    std::size_t ambient_dim() const { return static_cast<std::size_t>(columns.rows()); }
    std::size_t size() const { return static_cast<std::size_t>(columns.cols()); }
    Vector operator[](std::size_t i) const { return columns.col(static_cast<Eigen::Index>(i)); }
};

VectorFamily subfamily(const VectorFamily& F, std::span<const std::size_t> ids);
/// F with the listed ids removed (order of the rest preserved).
VectorFamily remove_ids(const VectorFamily& F, std::span<const std::size_t> ids);

/// [<f_i, f_j>]_{i,j}
Matrix gram(const VectorFamily& F);
/// S = sum f_i f_i^*
Matrix frame_operator(const VectorFamily& F);

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::size_t span_rank = 0;
    bool is_frame_sequence = false;
};

/// Optimal frame bounds on the numerical span: the extreme eigenvalues of S
/// above tol * lambda_max. Throws std::domain_error for an all-zero family.
FrameBounds frame_bounds(const VectorFamily& F, double tol = kDefaultTol);

/// Eigenpairs of the frame operator restricted to the numerical span.
struct SpanDecomposition {
    Matrix basis;              // n x r, orthonormal columns spanning span(F)
    RealVector eigenvalues;    // r eigenvalues of S, ascending
    double threshold = 0.0;    // absolute cut used
};

/// Throws std::domain_error for an empty span, or when an eigenvalue sits in
/// the ambiguous band (tol/100, 100 tol) * lambda_max so the rank is not
/// numerically well defined.
SpanDecomposition span_decomposition(const VectorFamily& F, double tol = kDefaultTol);

/// S^{-1} on span(F) applied to every vector.
VectorFamily canonical_dual(const VectorFamily& F, double tol = kDefaultTol);
/// S^{-1/2} on span(F) applied to every vector.
VectorFamily parseval(const VectorFamily& F, double tol = kDefaultTol);

/// Orthogonal projector onto span(F) as an n x n matrix.
Matrix span_projector(const VectorFamily& F, double tol = kDefaultTol);
Vector project_span(const VectorFamily& F, const Vector& f, double tol = kDefaultTol);

/// <f_i, f~_i> = ||S^{-1/2} f_i||^2 for every i.
RealVector self_dual_products(const VectorFamily& F, double tol = kDefaultTol);

/// Synthesis-matrix singular values of F (length = size(), zero padded).
RealVector synthesis_singular_values(const VectorFamily& F);

struct RieszCheck {
    bool is_riesz = false;
    double lower = 0.0;  // sigma_min^2
    double upper = 0.0;  // sigma_max^2
};

/// Riesz sequence iff sigma_min^2 > tol * sigma_max^2 (scale free).
RieszCheck riesz_check(const VectorFamily& F, double tol = kDefaultTol);

struct BesselDimCheck {
    double bessel_bound = 0.0;  // B = lambda_max(S)
    double required = 0.0;      // m M / N
    bool holds = false;
};

/// B >= m M / N with m = min ||f_i||^2, M = |F|, N = rank of the span.
/// Throws std::invalid_argument when a zero vector is present.
BesselDimCheck bessel_dim_bound_check(const VectorFamily& F, double tol = kDefaultTol);

}  // namespace framelab
