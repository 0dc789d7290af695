#include "framelab/constructions.hpp"
#include "framelab/frame_core.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace framelab;

namespace {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(n(rng), n(rng));
    return m;
}

Vector e(Eigen::Index n, Eigen::Index k) {
    Vector v = Vector::Zero(n);
    v[k] = 1.0;
    return v;
}

Matrix cols(std::initializer_list<Vector> vs) {
    Matrix m(vs.begin()->size(), static_cast<Eigen::Index>(vs.size()));
    Eigen::Index j = 0;
    for (const auto& v : vs) m.col(j++) = v;
    return m;
}

Matrix two_onbs(Eigen::Index n, std::uint64_t seed) {
    Matrix m(n, 2 * n);
    m << Matrix::Identity(n, n), random_unitary(static_cast<std::size_t>(n), seed);
    return m;
}

}  // namespace

TEST_CASE("gram examples and the two computation paths") {
    CHECK(gram(VectorFamily(Matrix::Identity(4, 4))).isApprox(Matrix::Identity(4, 4)));
    const Matrix g = gram(VectorFamily(cols({e(2, 0), e(2, 0)})));
    CHECK(g.isApprox(Matrix::Ones(2, 2)));

    const VectorFamily F(random_matrix(5, 9, 1));
    const Matrix G = gram(F);
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < F.size(); ++j)
            CHECK(std::abs(G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - inner(F[i], F[j])) < 1e-12);
    CHECK((G - G.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(G);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    // nonzero spectra of T T^* and T^* T agree
    Eigen::SelfAdjointEigenSolver<Matrix> es2(frame_operator(F));
    CHECK(std::abs(es.eigenvalues().maxCoeff() - es2.eigenvalues().maxCoeff()) < 1e-10);
}

TEST_CASE("frame_bounds examples") {
    const FrameBounds onb = frame_bounds(VectorFamily(Matrix::Identity(4, 4)));
    CHECK(onb.lower == doctest::Approx(1.0));
    CHECK(onb.upper == doctest::Approx(1.0));
    CHECK(onb.span_rank == 4);
    CHECK(onb.is_frame_sequence);

    const FrameBounds two = frame_bounds(VectorFamily(two_onbs(4, 3)));
    CHECK(two.lower == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.upper == doctest::Approx(2.0).epsilon(1e-12));

    const FrameBounds diag = frame_bounds(VectorFamily(cols({e(2, 0), e(2, 0), e(2, 1)})));
    CHECK(diag.lower == doctest::Approx(1.0));
    CHECK(diag.upper == doctest::Approx(2.0));

    const FrameBounds line = frame_bounds(VectorFamily(cols({e(3, 0), 2.0 * e(3, 0)})));
    CHECK(line.span_rank == 1);
    CHECK(line.lower == doctest::Approx(5.0));

    CHECK_THROWS_AS(frame_bounds(VectorFamily(Matrix::Zero(3, 2))), std::domain_error);
    CHECK_THROWS_AS(frame_bounds(VectorFamily(Matrix::Identity(2, 2)), 0.0), std::invalid_argument);
}

TEST_CASE("frame operator spectrum lies in [A, B] or at zero") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Matrix m = random_matrix(6, 4, seed);  // rank 4 in C^6
        const VectorFamily F(m);
        const FrameBounds fb = frame_bounds(F);
        Eigen::SelfAdjointEigenSolver<Matrix> es(frame_operator(F));
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const double v = es.eigenvalues()[k];
            const bool zero = std::abs(v) <= 1e-10 * fb.upper;
            CHECK((zero || (v >= fb.lower * (1 - 1e-12) && v <= fb.upper * (1 + 1e-12))));
        }
        CHECK(fb.span_rank == 4);
    }
}

TEST_CASE("canonical dual") {
    SUBCASE("union of M ONBs has dual f / M") {
        for (int M = 1; M <= 3; ++M) {
            std::vector<Matrix> bases;
            for (int c = 0; c < M; ++c) bases.push_back(random_unitary(6, 20 + static_cast<std::uint64_t>(c)));
            const LocatedFamily U = union_of_onbs(6, bases);
            const VectorFamily D = canonical_dual(U.vectors);
            CHECK((D.columns - U.vectors.columns / static_cast<double>(M)).norm() < 1e-12);
        }
    }
    SUBCASE("reconstruction for a random frame of C^8") {
        const VectorFamily F(random_matrix(8, 14, 7));
        const VectorFamily D = canonical_dual(F);
        const Vector f = random_matrix(8, 1, 8).col(0);
        Vector rec = Vector::Zero(8);
        for (std::size_t i = 0; i < F.size(); ++i) rec += inner(f, F[i]) * D[i];
        CHECK((rec - f).norm() < 1e-10);
        // dual of the dual is F
        CHECK((canonical_dual(D).columns - F.columns).norm() < 1e-9);
    }
    SUBCASE("Riesz sequences are biorthogonal to their duals") {
        const VectorFamily F(random_matrix(9, 5, 4));
        const VectorFamily D = canonical_dual(F);
        const Matrix cross = D.columns.adjoint() * F.columns;  // (j, i) = <f_i, f~_j>
        CHECK((cross - Matrix::Identity(5, 5)).norm() < 1e-10);
    }
    SUBCASE("ambiguous rank is refused") {
        Matrix m = Matrix::Identity(3, 3);
        m(2, 2) = 1e-5;  // eigenvalue 1e-10 = tol * lambda_max
        CHECK_THROWS_AS(canonical_dual(VectorFamily(m)), std::domain_error);
        m(2, 2) = 1e-9;
        CHECK_NOTHROW(canonical_dual(VectorFamily(m)));
    }
}

TEST_CASE("parseval frames") {
    CHECK((parseval(VectorFamily(Matrix::Identity(4, 4))).columns - Matrix::Identity(4, 4)).norm() < 1e-14);
    const Matrix u = two_onbs(5, 2);
    CHECK((parseval(VectorFamily(u)).columns - u / std::sqrt(2.0)).norm() < 1e-12);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const VectorFamily F(random_matrix(7, 5, seed));
        const VectorFamily P = parseval(F);
        const FrameBounds fb = frame_bounds(P);
        CHECK(std::abs(fb.lower - 1.0) < 1e-10);
        CHECK(std::abs(fb.upper - 1.0) < 1e-10);
        CHECK((frame_operator(P) - span_projector(F)).norm() < 1e-10);
    }
}

TEST_CASE("self dual products") {
    const VectorFamily F(random_matrix(6, 15, 12));
    const RealVector s = self_dual_products(F);
    const VectorFamily D = canonical_dual(F);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const cplx direct = inner(F[i], D[i]);
        CHECK(std::abs(direct.imag()) < 1e-12);
        CHECK(std::abs(direct.real() - s[static_cast<Eigen::Index>(i)]) < 1e-10);
        CHECK(s[static_cast<Eigen::Index>(i)] >= -1e-12);
        CHECK(s[static_cast<Eigen::Index>(i)] <= 1.0 + 1e-12);
    }
    // sum of <f_i, f~_i> is the dimension of the span
    CHECK(s.sum() == doctest::Approx(6.0).epsilon(1e-10));
    // Riesz sequences have <f_i, f~_i> = 1
    const RealVector r = self_dual_products(VectorFamily(random_matrix(9, 4, 2)));
    for (Eigen::Index i = 0; i < r.size(); ++i) CHECK(std::abs(r[i] - 1.0) < 1e-10);
}

TEST_CASE("removing one vector from a Parseval frame leaves lower bound 1 - ||f_j||^2") {
    const VectorFamily P = parseval(VectorFamily(random_matrix(5, 11, 31)));
    for (std::size_t j = 0; j < P.size(); ++j) {
        const std::size_t ids[] = {j};
        const FrameBounds fb = frame_bounds(remove_ids(P, ids));
        CHECK(std::abs(fb.lower - (1.0 - P[j].squaredNorm())) < 1e-10);
    }
}

TEST_CASE("project_span") {
    const VectorFamily F(cols({e(2, 0)}));
    Vector f(2);
    f << 3.0, 4.0;
    const Vector p = project_span(F, f);
    CHECK(std::abs(p[0] - cplx(3.0)) < 1e-14);
    CHECK(std::abs(p[1]) < 1e-14);
    CHECK((project_span(F, e(2, 0)) - e(2, 0)).norm() < 1e-14);

    const VectorFamily R(random_matrix(8, 3, 5));
    const Matrix P = span_projector(R);
    CHECK((P * P - P).norm() < 1e-12);
    CHECK((P - P.adjoint()).norm() < 1e-12);
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
        const Vector g = random_matrix(8, 1, seed).col(0);
        const Vector pg = project_span(R, g);
        CHECK(std::abs(inner(g - pg, pg)) < 1e-12 * g.squaredNorm());
        // frame expansion reproduces the projection
        const VectorFamily D = canonical_dual(R);
        Vector expansion = Vector::Zero(8);
        for (std::size_t i = 0; i < R.size(); ++i) expansion += inner(g, R[i]) * D[i];
        CHECK((expansion - pg).norm() < 1e-10);
    }
    CHECK_THROWS_AS(project_span(R, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("riesz_check examples") {
    const RieszCheck a = riesz_check(VectorFamily(cols({e(2, 0), 2.0 * e(2, 1)})));
    CHECK(a.is_riesz);
    CHECK(a.lower == doctest::Approx(1.0));
    CHECK(a.upper == doctest::Approx(4.0));
    CHECK_FALSE(riesz_check(VectorFamily(cols({e(2, 0), e(2, 0)}))).is_riesz);
    CHECK_FALSE(riesz_check(VectorFamily(two_onbs(4, 6))).is_riesz);
    CHECK(riesz_check(VectorFamily(random_matrix(6, 6, 3))).is_riesz);
}

TEST_CASE("Bessel bound versus dimension count") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n(0.0, 1.0);
    auto unit_family = [&](Eigen::Index dim, Eigen::Index count) {
        Matrix m(dim, count);
        for (Eigen::Index j = 0; j < count; ++j) {
            for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = cplx(n(rng), n(rng));
            m.col(j).normalize();
        }
        return VectorFamily(m);
    };
    const BesselDimCheck ten = bessel_dim_bound_check(unit_family(2, 10));
    CHECK(ten.holds);
    CHECK(ten.required == doctest::Approx(5.0));
    CHECK(ten.bessel_bound >= 5.0 - 1e-12);

    const BesselDimCheck onb = bessel_dim_bound_check(VectorFamily(Matrix::Identity(4, 4)));
    CHECK(onb.holds);
    CHECK(onb.bessel_bound == doctest::Approx(1.0));

    const VectorFamily fifty = unit_family(5, 50);
    const BesselDimCheck f = bessel_dim_bound_check(fifty);
    CHECK(f.holds);
    Eigen::SelfAdjointEigenSolver<Matrix> es(frame_operator(fifty));
    CHECK(es.eigenvalues().maxCoeff() >= 10.0);
    CHECK(f.bessel_bound == doctest::Approx(es.eigenvalues().maxCoeff()));

    CHECK_THROWS_AS(bessel_dim_bound_check(VectorFamily(cols({e(2, 0), Vector::Zero(2)}))), std::invalid_argument);
}

TEST_CASE("subfamily and remove_ids") {
    const VectorFamily F(random_matrix(3, 5, 2));
    const std::size_t ids[] = {4, 1};
    const VectorFamily S = subfamily(F, ids);
    CHECK(S.columns.col(0) == F.columns.col(4));
    CHECK(S.columns.col(1) == F.columns.col(1));
    const VectorFamily R = remove_ids(F, ids);
    REQUIRE(R.size() == 3);
    CHECK(R.columns.col(2) == F.columns.col(3));
    const std::size_t bad[] = {5};
    CHECK_THROWS_AS(subfamily(F, bad), std::out_of_range);
}
