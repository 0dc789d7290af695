#include "framelab/constructions.hpp"
#include "framelab/errors.hpp"
#include "framelab/localization.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace framelab;

namespace {

Vector random_window(std::int64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Vector w(n);
    for (auto& x : w) x = cplx(g(rng), g(rng));
    return w;
}

Matrix translation(std::int64_t n, std::int64_t a) {
    Matrix T = Matrix::Zero(n, n);
    for (std::int64_t t = 0; t < n; ++t) T((t + a) % n, t) = 1.0;
    return T;
}

Matrix modulation(std::int64_t n, std::int64_t b) {
    Matrix M = Matrix::Zero(n, n);
    for (std::int64_t t = 0; t < n; ++t)
        M(t, t) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((b * t) % n) / static_cast<double>(n));
    return M;
}

}  // namespace

TEST_CASE("gaussian window") {
    const Vector g = gaussian_window(16);
    CHECK(g.norm() == doctest::Approx(1.0));
    CHECK(g[0].real() > g[1].real());
    CHECK(std::abs(g[1] - g[15]) < 1e-15);  // even on Z_n
    CHECK(g.imag().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("finite Gabor examples") {
    const LocatedFamily G = finite_gabor(GaborSpec{8, 2, 2, gaussian_window(8)});
    CHECK(G.vectors.size() == 16);
    CHECK(G.index.spec.torsion == std::vector<std::int64_t>{4, 4});
    CHECK(G.index.locations[5] == GroupElement(G.index.spec, {}, {1, 1}));
    const VectorFamily D = canonical_dual(G.vectors);
    CHECK(std::abs(inner(G.vectors[0], D[0]) - cplx(0.5)) < 1e-12);

    // column formula
    const Vector w = random_window(12, 4);
    const LocatedFamily H = finite_gabor(GaborSpec{12, 3, 4, w});
    const std::int64_t k = 2, m = 1, id = k * 3 + m;
    for (std::int64_t t = 0; t < 12; ++t) {
        const cplx expect = std::polar(1.0, 2.0 * std::numbers::pi * 4.0 * m * t / 12.0) * w[((t - 3 * k) % 12 + 12) % 12];
        CHECK(std::abs(H.vectors.columns(t, id) - expect) < 1e-12);
    }

    const LocatedFamily B = finite_gabor(GaborSpec{6, 2, 3, gaussian_window(6)});
    REQUIRE(B.vectors.size() == 6);
    const RieszCheck rc = riesz_check(B.vectors);
    if (rc.is_riesz) {
        const RealVector s = self_dual_products(B.vectors);
        for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(1.0).epsilon(1e-10));
    }

    const LocatedFamily one = finite_gabor(GaborSpec{5, 5, 5, gaussian_window(5)});
    CHECK(one.vectors.size() == 1);
    CHECK(riesz_check(one.vectors).is_riesz);
}

TEST_CASE("finite Gabor errors") {
    CHECK_THROWS_AS(finite_gabor(GaborSpec{8, 3, 2, gaussian_window(8)}), std::invalid_argument);
    CHECK_THROWS_AS(finite_gabor(GaborSpec{8, 2, 2, gaussian_window(6)}), std::invalid_argument);
    CHECK_THROWS_AS(finite_gabor(GaborSpec{8, 2, 2, Vector::Zero(8)}), std::invalid_argument);
    Vector delta = Vector::Zero(4);
    delta[0] = 1.0;
    // translates by 2 of a point mass only reach two coordinates
    CHECK_THROWS_AS(finite_gabor(GaborSpec{4, 2, 1, delta}), PreconditionError);
}

TEST_CASE("Gabor frame operator commutes with the lattice shifts") {
    for (auto [n, a, b] : {std::tuple{12, 2, 3}, std::tuple{12, 3, 2}, std::tuple{16, 4, 2}, std::tuple{10, 2, 5}}) {
        const LocatedFamily G = finite_gabor(GaborSpec{n, a, b, random_window(n, static_cast<std::uint64_t>(n + a))});
        const Matrix S = frame_operator(G.vectors);
        const Matrix T = translation(n, a), M = modulation(n, b);
        CHECK((S * T - T * S).norm() < 1e-10 * S.norm());
        CHECK((S * M - M * S).norm() < 1e-10 * S.norm());
    }
}

TEST_CASE("finite Wexler-Raz: the mean of <f_i, f~_i> is ab/n") {
    for (auto [n, a, b] : {std::tuple{8, 2, 2}, std::tuple{12, 2, 3}, std::tuple{12, 4, 3}, std::tuple{16, 4, 2},
                           std::tuple{18, 3, 3}, std::tuple{12, 2, 2}}) {
        for (const Vector& w : {gaussian_window(n), random_window(n, static_cast<std::uint64_t>(3 * n + b))}) {
            const LocatedFamily G = finite_gabor(GaborSpec{n, a, b, w});
            const RealVector s = self_dual_products(G.vectors);
            const double ab_n = static_cast<double>(a * b) / static_cast<double>(n);
            CHECK(std::abs(s.mean() - ab_n) < 1e-8);
            // every TF shift has the same value
            CHECK(s.maxCoeff() - s.minCoeff() < 1e-8);
        }
    }
}

TEST_CASE("random unitaries") {
    const Matrix U = random_unitary(10, 3);
    CHECK((U.adjoint() * U - Matrix::Identity(10, 10)).norm() < 1e-12);
    CHECK(U == random_unitary(10, 3));
    CHECK(U != random_unitary(10, 4));
}

TEST_CASE("unions of orthonormal bases") {
    const std::vector<Matrix> one{random_unitary(6, 1)};
    const LocatedFamily O = union_of_onbs(6, one);
    CHECK(riesz_check(O.vectors).is_riesz);
    CHECK(O.index.locations[4] == GroupElement::on_line(O.index.spec, 4));

    const std::vector<Matrix> ids{Matrix::Identity(5, 5), Matrix::Identity(5, 5)};
    const LocatedFamily I = union_of_onbs(5, ids);
    const RealVector s = self_dual_products(I.vectors);
    for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(0.5));
    CHECK(I.index.locations[7] == GroupElement::on_line(I.index.spec, 2));

    for (std::size_t M = 1; M <= 4; ++M) {
        std::vector<Matrix> bases;
        for (std::size_t c = 0; c < M; ++c) bases.push_back(random_unitary(8, 100 + c));
        const FrameBounds fb = frame_bounds(union_of_onbs(8, bases).vectors);
        CHECK(fb.lower == doctest::Approx(static_cast<double>(M)).epsilon(1e-12));
        CHECK(fb.upper == doctest::Approx(static_cast<double>(M)).epsilon(1e-12));
    }

    std::vector<Matrix> bad{Matrix::Identity(4, 4)};
    bad[0](0, 0) = 2.0;
    CHECK_THROWS_AS(union_of_onbs(4, bad), std::invalid_argument);
    CHECK_THROWS_AS(union_of_onbs(4, ids), std::invalid_argument);
}

TEST_CASE("jittered lattices") {
    const IndexedSet base = IndexedSet::line(-100, 100);
    const std::vector<double> zero(base.size(), 0.0);
    CHECK(jittered_lattice(base, zero, 0.5).locations == base.locations);

    std::vector<double> wiggle;
    for (const auto& g : base.locations) wiggle.push_back(0.3 * std::sin(static_cast<double>(g.free()[0])));
    const IndexedSet J = jittered_lattice(base, wiggle, 0.5);
    const auto centers = interior_points(base.spec, *base.support, 40);
    const std::int64_t Ns[] = {40};
    const DensityProfile p = density_profile(J, centers, Ns);
    CHECK(p.lower_estimate() == 1.0);
    CHECK(p.upper_estimate() == 1.0);

    IndexedSet twice = base;
    twice.locations.insert(twice.locations.end(), base.locations.begin(), base.locations.end());
    CHECK(density_profile(twice, centers, Ns).lower_estimate() == 2.0);

    CHECK_THROWS_AS(jittered_lattice(base, std::vector<double>(base.size(), 0.6), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jittered_lattice(base, std::vector<double>(3, 0.0), 0.5), std::invalid_argument);
    IndexedSet plane;
    plane.spec = GroupSpec::integers(2);
    CHECK_THROWS_AS(jittered_lattice(plane, std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST_CASE("synthetic localized frames") {
    SUBCASE("no decay gives copies of the basis") {
        SyntheticOptions opt;
        opt.window = 16;
        opt.decay = 0.0;
        const SyntheticModel m = synthetic_localized_frame(opt);
        Matrix expect(16, 32);
        expect << Matrix::Identity(16, 16), Matrix::Identity(16, 16);
        CHECK(m.frame.vectors.columns == expect);
        const Envelope r = localization_envelope(m.frame, m.reference);
        CHECK(r.l1_norm() == 1.0);
    }
    SUBCASE("decay 0.5 on a 64-point window") {
        SyntheticOptions opt;
        const SyntheticModel m = synthetic_localized_frame(opt);
        CHECK(m.frame.vectors.size() == 128);
        const Envelope r = localization_envelope(m.frame, m.reference);
        CHECK(std::isfinite(r.l1_norm()));
        for (const auto& [k, v] : r.values) {
            const double bound = k.free()[0] == 0 ? 1.0 : 0.125 * std::pow(0.5, std::abs(k.free()[0]));
            CHECK(v <= bound + 1e-15);
        }
        CHECK(m.bounds.is_frame_sequence);
        CHECK(m.bounds.span_rank == 64);
    }
    SUBCASE("one copy is a Riesz basis") {
        SyntheticOptions opt;
        opt.redundancy = 1;
        opt.decay = 0.7;
        const SyntheticModel m = synthetic_localized_frame(opt);
        const RieszCheck rc = riesz_check(m.frame.vectors);
        CHECK(rc.is_riesz);
        CHECK(rc.lower > 0.1);
    }
    SUBCASE("deterministic in the seed") {
        SyntheticOptions opt;
        opt.window = 20;
        const Matrix a = synthetic_localized_frame(opt).frame.vectors.columns;
        CHECK(a == synthetic_localized_frame(opt).frame.vectors.columns);
        opt.seed = 2;
        CHECK(a != synthetic_localized_frame(opt).frame.vectors.columns);
    }
    SUBCASE("jitter moves only the odd points of later copies") {
        SyntheticOptions opt;
        opt.window = 10;
        opt.jitter = 0.35;
        const SyntheticModel m = synthetic_localized_frame(opt);
        for (std::int64_t j = 0; j < 10; ++j) {
            CHECK(m.frame.index.locations[static_cast<std::size_t>(j)].free()[0] == j);
            CHECK(m.frame.index.locations[static_cast<std::size_t>(10 + j)].free()[0] == j + (j % 2));
        }
    }
    SUBCASE("bad options") {
        SyntheticOptions opt;
        opt.decay = 1.0;
        CHECK_THROWS_AS(synthetic_localized_frame(opt), std::invalid_argument);
        opt = {};
        opt.redundancy = 0;
        CHECK_THROWS_AS(synthetic_localized_frame(opt), std::invalid_argument);
        opt = {};
        opt.jitter = 0.5;
        CHECK_THROWS_AS(synthetic_localized_frame(opt), std::invalid_argument);
    }
}
