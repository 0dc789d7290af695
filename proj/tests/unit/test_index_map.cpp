#include "framelab/errors.hpp"
#include "framelab/index_map.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace framelab;

namespace {

IndexedSet on_z(std::vector<std::int64_t> ks) {
    IndexedSet I;
    I.spec = GroupSpec::integers(1);
    for (auto k : ks) I.locations.push_back(GroupElement::on_line(I.spec, k));
    return I;
}

GroupElement at(std::int64_t k) { return GroupElement::on_line(GroupSpec::integers(1), k); }

}  // namespace

TEST_CASE("preimage_box examples") {
    const IndexedSet I = on_z({0, 0, 1});  // x, y, z
    CHECK(preimage_box(I, at(0), 1) == IdList{0, 1});
    CHECK(preimage_box(I, at(0), 2) == IdList{0, 1, 2});
    CHECK(preimage_box(on_z({}), at(0), 5).empty());
    CHECK(preimage_count(I, at(0), 2) == 3);
}

TEST_CASE("fiber_bound and the annulus bound") {
    const IndexedSet I = on_z({0, 0, 1});
    CHECK(fiber_bound(I) == 2);
    std::vector<std::int64_t> ks(100);
    for (int k = 0; k < 100; ++k) ks[static_cast<std::size_t>(k)] = k;
    CHECK(fiber_bound(on_z(ks)) == 1);
    const std::vector<GroupElement> E{at(0), at(1)};
    CHECK(preimage_size(I, E) == 3);
    CHECK(preimage_size(I, E) <= fiber_bound(I) * E.size());

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> u(-15, 15);
    std::vector<std::int64_t> random_locs(200);
    for (auto& k : random_locs) k = u(rng);
    const IndexedSet R = on_z(random_locs);
    const std::size_t K = fiber_bound(R);
    for (int t = 0; t < 200; ++t) {
        std::vector<GroupElement> Es;
        std::set<GroupElement> distinct;
        for (int s = 0; s < 1 + t % 12; ++s) {
            Es.push_back(at(u(rng)));
            distinct.insert(Es.back());
        }
        CHECK(preimage_size(R, Es) <= K * distinct.size());
    }
}

TEST_CASE("preimage counts are monotone in N and shift with the locations") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> u(-30, 30);
    std::vector<std::int64_t> ks(80);
    for (auto& k : ks) k = u(rng);
    const IndexedSet I = on_z(ks);
    std::vector<std::int64_t> shifted = ks;
    for (auto& k : shifted) k += 7;
    const IndexedSet J = on_z(shifted);
    for (std::int64_t c = -10; c <= 10; ++c) {
        std::size_t prev = 0;
        for (std::int64_t N = 0; N < 30; ++N) {
            const std::size_t n = preimage_count(I, at(c), N);
            CHECK(n >= prev);
            prev = n;
            CHECK(preimage_count(J, at(c + 7), N) == n);
            CHECK(preimage_box(J, at(c + 7), N) == preimage_box(I, at(c), N));
        }
    }
}

TEST_CASE("density of the identity map on a window is 1") {
    IndexedSet I = IndexedSet::line(-100, 100);
    std::vector<GroupElement> centers;
    for (std::int64_t c = -50; c <= 50; ++c) centers.push_back(at(c));
    const std::int64_t Ns[] = {5, 10, 20};
    const DensityProfile p = density_profile(I, centers, Ns);
    for (const auto& cell : p.cells) {
        CHECK(cell.valid);
        CHECK(cell.ratio == 1.0);
    }
    CHECK(p.lower_estimate() == 1.0);
    CHECK(p.upper_estimate() == 1.0);
}

TEST_CASE("duplicated points have density 2; disjoint unions add") {
    IndexedSet A = IndexedSet::line(0, 60);
    IndexedSet B = A;
    IndexedSet both = A;
    both.locations.insert(both.locations.end(), B.locations.begin(), B.locations.end());
    const auto centers = valid_centers(both, 12);
    const std::int64_t Ns[] = {2, 6, 12};
    const DensityProfile pa = density_profile(A, centers, Ns);
    const DensityProfile pb = density_profile(B, centers, Ns);
    const DensityProfile pab = density_profile(both, centers, Ns);
    for (std::size_t k = 0; k < pab.cells.size(); ++k) {
        CHECK(pab.cells[k].ratio == doctest::Approx(pa.cells[k].ratio + pb.cells[k].ratio).epsilon(1e-15));
        CHECK(pab.cells[k].ratio == 2.0);
    }
    // a sparser second component
    IndexedSet evens = on_z({});
    evens.support = Window::interval(0, 60);
    for (std::int64_t k = 0; k <= 60; k += 2) evens.locations.push_back(at(k));
    IndexedSet mix = A;
    mix.locations.insert(mix.locations.end(), evens.locations.begin(), evens.locations.end());
    const DensityProfile pe = density_profile(evens, centers, Ns);
    const DensityProfile pm = density_profile(mix, centers, Ns);
    for (std::size_t k = 0; k < pm.cells.size(); ++k)
        CHECK(pm.cells[k].ratio == doctest::Approx(pa.cells[k].ratio + pe.cells[k].ratio).epsilon(1e-15));
    CHECK(pm.lower_estimate() <= pm.upper_estimate());
}

TEST_CASE("roundoff of k + 0.3 sin k has density 1") {
    IndexedSet I = IndexedSet::line(-200, 200);
    for (auto& g : I.locations) {
        const double k = static_cast<double>(g.free()[0]);
        g = GroupElement::on_line(I.spec, std::llround(k + 0.3 * std::sin(k)));
    }
    const auto centers = valid_centers(I, 20);
    const std::int64_t Ns[] = {20};
    const DensityProfile p = density_profile(I, centers, Ns);
    for (const auto& cell : p.cells) CHECK(cell.ratio == 1.0);
}

TEST_CASE("cells touching the window are invalid; no valid cell is an error") {
    IndexedSet I = IndexedSet::line(0, 9);
    const std::vector<GroupElement> centers{at(0), at(5)};
    const std::int64_t Ns[] = {2, 8};
    const DensityProfile p = density_profile(I, centers, Ns);
    CHECK_FALSE(p.cells[0].valid);
    CHECK(p.cells[1].valid);
    CHECK(std::isnan(p.inf_ratio[1]) == false);
    const std::int64_t big[] = {40};
    CHECK_THROWS_AS(density_profile(I, centers, big), TruncationError);
    CHECK_THROWS_AS(density_profile(I, std::vector<GroupElement>{}, big), std::invalid_argument);
}

TEST_CASE("valid centers without a window are the image points") {
    const IndexedSet I = on_z({3, 1, 3});
    const auto c = valid_centers(I, 100);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == at(1));
    CHECK(c[1] == at(3));
}

TEST_CASE("embed_fibers pads deficient fibers") {
    const IndexedSet I = on_z({0, 0, 1});
    VectorFamily F(Matrix::Identity(3, 3));
    const FiberEmbedding e = embed_fibers(I, F);
    CHECK(e.K == 2);
    REQUIRE(e.family.vectors.size() == 4);
    CHECK(e.source[0] == std::optional<std::size_t>(0));
    CHECK(e.source[1] == std::optional<std::size_t>(1));
    CHECK(e.source[2] == std::optional<std::size_t>(2));
    CHECK_FALSE(e.source[3].has_value());
    CHECK(e.family.vectors.columns.col(3).norm() == 0.0);
    CHECK(fiber_bound(e.family.index) == 2);
    // frame operator unchanged by zero padding
    CHECK((frame_operator(e.family.vectors) - frame_operator(F)).norm() == 0.0);

    const FiberEmbedding inj = embed_fibers(IndexedSet::line(0, 2), F);
    CHECK(inj.K == 1);
    CHECK(inj.family.vectors.columns == F.columns);

    IndexedSet twice = IndexedSet::line(0, 3);
    const auto once = twice.locations;
    twice.locations.insert(twice.locations.end(), once.begin(), once.end());
    const FiberEmbedding two = embed_fibers(twice, VectorFamily(Matrix::Identity(4, 8)));
    CHECK(two.K == 2);
    for (const auto& s : two.source) CHECK(s.has_value());
}
