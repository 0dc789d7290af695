#include "framelab/constructions.hpp"
#include "framelab/errors.hpp"
#include "framelab/riesz_decomp.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

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

Matrix hermitian_sqrt(const Matrix& G) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(G);
    return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

LocatedFamily tridiagonal_family(Eigen::Index n, double off) {
    Matrix G = Matrix::Identity(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) G(i, i + 1) = G(i + 1, i) = off;
    LocatedFamily F;
    F.vectors = VectorFamily(hermitian_sqrt(G));
    F.index = IndexedSet::line(0, n - 1);
    return F;
}

void check_partition(const Decomposition& d, std::size_t n) {
    std::multiset<std::size_t> seen;
    for (const auto& p : d.parts) seen.insert(p.begin(), p.end());
    CHECK(seen.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(seen.count(i) == 1);
    CHECK(d.parts.size() <= d.part_bound);
    CHECK(d.labels.size() == d.parts.size());
}

void check_separation(const Decomposition& d, const LocatedFamily& F) {
    const auto& spec = F.index.spec;
    for (const auto& p : d.parts)
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = x + 1; y < p.size(); ++y)
                CHECK_FALSE(in_half_open_box(spec, subtract(spec, F.index.locations[p[x]], F.index.locations[p[y]]),
                                             d.N_delta));
}

}  // namespace

TEST_CASE("eps-Riesz examples") {
    const EpsRieszResult onb = eps_riesz_check(VectorFamily(random_unitary(5, 1)), 0.01);
    CHECK(onb.ok);
    CHECK(onb.A == doctest::Approx(1.0));

    Matrix dup = Matrix::Zero(2, 2);
    dup(0, 0) = dup(0, 1) = 1.0;
    CHECK_FALSE(eps_riesz_check(VectorFamily(dup), 0.5).ok);

    for (double delta : {0.01, 0.05, 0.1, 0.2}) {
        Matrix m = Matrix::Identity(2, 2);
        m(1, 1) = 1.0 + delta;
        for (double eps : {0.02, 0.05, 0.1, 0.2}) {
            const bool expect = (1 + delta) * (1 + delta) <= (1 + eps) / (1 - eps);
            CHECK(eps_riesz_check(VectorFamily(m), eps).ok == expect);
        }
    }
    CHECK_THROWS_AS(eps_riesz_check(VectorFamily(Matrix::Identity(2, 2)), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eps_riesz_check(VectorFamily(Matrix(2, 0)), 0.5), std::invalid_argument);
}

TEST_CASE("eps-Riesz certificates bound the synthesis operator") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Matrix m = random_matrix(40, 3, seed) / std::sqrt(80.0);
        const EpsRieszResult r = eps_riesz_check(VectorFamily(m), 0.5);
        if (!r.ok) continue;
        const RealVector s = synthesis_singular_values(VectorFamily(m));
        CHECK(s.minCoeff() * s.minCoeff() >= (1 - 0.5) * r.A * (1 - 1e-12));
        CHECK(s.maxCoeff() * s.maxCoeff() <= (1 + 0.5) * r.A * (1 + 1e-12));
    }
}

TEST_CASE("decomposing an orthonormal basis") {
    LocatedFamily F;
    F.vectors = VectorFamily(random_unitary(16, 3));
    F.index = IndexedSet::line(0, 15);
    const Decomposition d = decompose(F, 0.2);
    CHECK(d.K == 1);
    CHECK(d.N_delta == 1);
    CHECK(d.L == 1);
    CHECK(d.parts.size() >= 1);
    CHECK(d.all_ok);
    check_partition(d, 16);
}

TEST_CASE("two bases at the same points split into Riesz parts") {
    const std::vector<Matrix> ids{Matrix::Identity(24, 24), Matrix::Identity(24, 24)};
    const Decomposition same = decompose(union_of_onbs(24, ids), 0.1);
    CHECK(same.N_delta == 1);
    CHECK(same.L == 2);
    CHECK(same.parts.size() == 4);  // two copies times two parity grids
    CHECK(same.all_ok);

    for (double eps : {0.1, 0.25}) {
        std::vector<Matrix> bases{random_unitary(24, 1), random_unitary(24, 2)};
        const LocatedFamily U = union_of_onbs(24, bases);
        const Decomposition d = decompose(U, eps);
        CHECK(d.parts.size() >= 2);
        check_partition(d, 48);
        check_separation(d, U);
        for (std::size_t k = 0; k < d.parts.size(); ++k) {
            CHECK(d.per_part[k].riesz.ok);
            CHECK(d.per_part[k].offdiag_ok);
            CHECK(d.per_part[k].offdiag_norm <= d.per_part[k].offdiag_bound + 1e-12);
            const RealVector s = synthesis_singular_values(subfamily(U.vectors, d.parts[k]));
            CHECK(s.maxCoeff() * s.maxCoeff() / (s.minCoeff() * s.minCoeff()) <= (1 + eps) / (1 - eps));
        }
        CHECK(d.all_ok);
    }
}

TEST_CASE("equal-norm tridiagonal Gram") {
    const LocatedFamily F = tridiagonal_family(64, 0.125);
    const Decomposition d = decompose(F, 0.3);
    CHECK(d.K == 1);
    CHECK(d.m == doctest::Approx(1.0));
    CHECK(d.delta == doctest::Approx(0.3));
    CHECK(d.N_delta == 2);  // tail outside [-1, 1) is the single 1/8 at offset 1
    check_partition(d, 64);
    check_separation(d, F);
    for (const auto& c : d.per_part) {
        CHECK(c.riesz.ok);
        CHECK(c.riesz.A == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(c.offdiag_norm < 1e-10);
    }
    CHECK(d.all_ok);
    CHECK(d.parts.size() <= d.part_bound);
}

TEST_CASE("norm classes") {
    SyntheticOptions opt;
    opt.window = 40;
    opt.decay = 0.3;
    opt.seed = 5;
    SyntheticModel m = synthetic_localized_frame(opt);
    // spread the norms over [1, 2]
    for (Eigen::Index j = 0; j < m.frame.vectors.columns.cols(); ++j)
        m.frame.vectors.columns.col(j) *= std::sqrt(1.0 + static_cast<double>(j % 5) / 4.0);
    const Decomposition d = decompose(m.frame, 0.25);
    CHECK((d.M - d.m) / static_cast<double>(d.K) < d.delta / 2.0);
    CHECK(d.K >= 2);
    std::set<std::size_t> classes;
    for (const auto& l : d.labels) classes.insert(l.norm_class);
    CHECK(classes.size() <= d.K);
    check_partition(d, m.frame.vectors.size());
    for (std::size_t k = 0; k < d.parts.size(); ++k) {
        double lo = 1e300, hi = 0.0;
        for (auto i : d.parts[k]) {
            lo = std::min(lo, m.frame.vectors[i].squaredNorm());
            hi = std::max(hi, m.frame.vectors[i].squaredNorm());
        }
        CHECK(hi - lo < d.delta / 2.0);
    }
    CHECK(d.all_ok);
}

TEST_CASE("decompose errors") {
    LocatedFamily F = tridiagonal_family(8, 0.125);
    CHECK_THROWS_AS(decompose(F, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(decompose(F, 1.0), std::invalid_argument);
    F.vectors.columns.col(3).setZero();
    CHECK_THROWS_AS(decompose(F, 0.5), PreconditionError);
    const LocatedFamily T = tridiagonal_family(8, 0.125);
    CHECK_THROWS_AS(decompose(T, 0.25, DecomposeOptions{1, kDefaultTol}), TruncationError);
}
