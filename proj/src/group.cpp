#include "framelab/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace framelab {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return -floor_div(-num, den); }

std::int64_t reduce(std::int64_t m, std::int64_t n) {
    std::int64_t r = m % n;
    return r < 0 ? r + n : r;
}

}  // namespace

GroupSpec GroupSpec::integers(std::size_t d) {
    return GroupSpec{std::vector<Rational>(d, Rational(1)), {}};
}

std::int64_t GroupSpec::torsion_order() const {
    std::int64_t order = 1;
    for (auto n : torsion) order *= n;
    return order;
}

void GroupSpec::validate() const {
    if (scales.empty() && torsion.empty())
        throw std::invalid_argument("GroupSpec: group has no factors");
    for (const auto& a : scales)
        if (a <= 0) throw std::invalid_argument("GroupSpec: scales must be positive");
    for (auto n : torsion)
        if (n < 1) throw std::invalid_argument("GroupSpec: torsion sizes must be >= 1");
}

GroupElement::GroupElement(const GroupSpec& spec, std::vector<std::int64_t> free_coords,
                           std::vector<std::int64_t> torsion_residues)
    : free_(std::move(free_coords)), torsion_(std::move(torsion_residues)) {
    if (torsion_.empty() && spec.torsion_rank() > 0) torsion_.assign(spec.torsion_rank(), 0);
    if (free_.size() != spec.free_rank() || torsion_.size() != spec.torsion_rank())
        throw std::invalid_argument("GroupElement: dimension mismatch with group");
    for (std::size_t j = 0; j < torsion_.size(); ++j) torsion_[j] = reduce(torsion_[j], spec.torsion[j]);
}

GroupElement GroupElement::zero(const GroupSpec& spec) {
    return GroupElement(spec, std::vector<std::int64_t>(spec.free_rank(), 0),
                        std::vector<std::int64_t>(spec.torsion_rank(), 0));
}

GroupElement GroupElement::on_line(const GroupSpec& spec, std::int64_t k) {
    return GroupElement(spec, {k}, {});
}

void check_element(const GroupSpec& spec, const GroupElement& g) {
    if (g.free().size() != spec.free_rank() || g.torsion().size() != spec.torsion_rank())
        throw std::invalid_argument("group element does not match group dimensions");
}

GroupElement add(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
    check_element(spec, g);
    check_element(spec, h);
    std::vector<std::int64_t> f(g.free().size()), t(g.torsion().size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = g.free()[i] + h.free()[i];
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = g.torsion()[j] + h.torsion()[j];
    return GroupElement(spec, std::move(f), std::move(t));
}

GroupElement negate(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    std::vector<std::int64_t> f(g.free().size()), t(g.torsion().size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = -g.free()[i];
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = -g.torsion()[j];
    return GroupElement(spec, std::move(f), std::move(t));
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
    return add(spec, g, negate(spec, h));
}

double metric_norm(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    double norm = 0.0;
    for (std::size_t i = 0; i < spec.free_rank(); ++i) {
        const auto& a = spec.scales[i];
        double v = std::abs(static_cast<double>(a.numerator()) * static_cast<double>(g.free()[i]) /
                            static_cast<double>(a.denominator()));
        norm = std::max(norm, v);
    }
    for (auto m : g.torsion())
        if (m != 0) norm = std::max(norm, 1.0);
    return norm;
}

bool in_box(const GroupSpec& spec, const GroupElement& offset, std::int64_t N) {
    // |p/q * k| <= N/2  <=>  2 |p k| <= N q
    for (std::size_t i = 0; i < spec.free_rank(); ++i) {
        const auto& a = spec.scales[i];
        if (2 * std::abs(a.numerator() * offset.free()[i]) > N * a.denominator()) return false;
    }
    if (N < 2)
        for (auto m : offset.torsion())
            if (m != 0) return false;
    return true;
}

bool in_half_open_box(const GroupSpec& spec, const GroupElement& offset, std::int64_t N) {
    // -N/2 <= p/q k < N/2  <=>  -N q <= 2 p k < N q
    for (std::size_t i = 0; i < spec.free_rank(); ++i) {
        const auto& a = spec.scales[i];
        std::int64_t twice = 2 * a.numerator() * offset.free()[i];
        std::int64_t lim = N * a.denominator();
        if (twice < -lim || twice >= lim) return false;
    }
    return true;
}

std::int64_t min_box_size(const GroupSpec& spec, const GroupElement& offset) {
    std::int64_t n = 0;
    for (std::size_t i = 0; i < spec.free_rank(); ++i) {
        const auto& a = spec.scales[i];
        n = std::max(n, ceil_div(2 * std::abs(a.numerator() * offset.free()[i]), a.denominator()));
    }
    for (auto m : offset.torsion())
        if (m != 0) n = std::max<std::int64_t>(n, 2);
    return n;
}

std::int64_t free_radius(const GroupSpec& spec, std::size_t axis, std::int64_t N) {
    const auto& a = spec.scales.at(axis);
    return floor_div(N * a.denominator(), 2 * a.numerator());
}

std::vector<GroupElement> box(const GroupSpec& spec, const GroupElement& center, std::int64_t N) {
    check_element(spec, center);
    if (N < 1) throw std::invalid_argument("box: N must be >= 1");
    const std::size_t d = spec.free_rank();
    const std::size_t e = spec.torsion_rank();

    std::vector<std::int64_t> radius(d);
    for (std::size_t i = 0; i < d; ++i) radius[i] = free_radius(spec, i, N);

    // Odometer over free offsets then torsion residues.
    std::vector<std::int64_t> free_off(d), tor(e, 0);
    for (std::size_t i = 0; i < d; ++i) free_off[i] = -radius[i];
    const bool all_torsion = N >= 2;

    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(box_cardinality(spec, N)));
    while (true) {
        std::vector<std::int64_t> f(d), t(e);
        for (std::size_t i = 0; i < d; ++i) f[i] = center.free()[i] + free_off[i];
        for (std::size_t j = 0; j < e; ++j) t[j] = all_torsion ? tor[j] : center.torsion()[j];
        out.emplace_back(spec, std::move(f), std::move(t));

        // advance torsion first (innermost), then free coordinates
        bool carried = true;
        if (all_torsion) {
            for (std::size_t j = e; j-- > 0;) {
                if (++tor[j] < spec.torsion[j]) {
                    carried = false;
                    break;
                }
                tor[j] = 0;
            }
        }
        if (!carried) continue;
        std::size_t i = d;
        while (i-- > 0) {
            if (++free_off[i] <= radius[i]) break;
            free_off[i] = -radius[i];
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

std::int64_t box_cardinality(const GroupSpec& spec, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("box_cardinality: N must be >= 1");
    std::int64_t count = 1;
    for (std::size_t i = 0; i < spec.free_rank(); ++i) count *= 2 * free_radius(spec, i, N) + 1;
    if (N >= 2) count *= spec.torsion_order();
    return count;
}

Asymptotics asymptotic_constant(const GroupSpec& spec) {
    spec.validate();
    if (spec.free_rank() == 0) return {static_cast<double>(spec.torsion_order()), 0};
    double c = static_cast<double>(spec.torsion_order());
    for (const auto& a : spec.scales)
        c *= static_cast<double>(a.denominator()) / static_cast<double>(a.numerator());
    return {c, static_cast<int>(spec.free_rank())};
}

std::vector<std::int64_t> half_open_tile(const GroupSpec& spec, const GroupElement& g, std::int64_t N) {
    // floor((p/q k + N/2) / N) = floor((2 p k + q N) / (2 q N))
    std::vector<std::int64_t> tile(spec.free_rank());
    for (std::size_t i = 0; i < tile.size(); ++i) {
        const auto& a = spec.scales[i];
        tile[i] = floor_div(2 * a.numerator() * g.free()[i] + a.denominator() * N, 2 * a.denominator() * N);
    }
    return tile;
}

bool Window::contains(const GroupElement& g) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (g.free()[i] < lo[i] || g.free()[i] > hi[i]) return false;
    return true;
}

bool box_inside(const GroupSpec& spec, const Window& window, const GroupElement& center, std::int64_t N) {
    if (window.lo.size() != spec.free_rank() || window.hi.size() != spec.free_rank())
        throw std::invalid_argument("window does not match group dimensions");
    for (std::size_t i = 0; i < spec.free_rank(); ++i) {
        std::int64_t r = free_radius(spec, i, N);
        if (center.free()[i] - r < window.lo[i] || center.free()[i] + r > window.hi[i]) return false;
    }
    return true;
}

std::vector<GroupElement> interior_points(const GroupSpec& spec, const Window& window, std::int64_t N) {
    const std::size_t d = spec.free_rank();
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t r = free_radius(spec, i, N);
        lo[i] = window.lo[i] + r;
        hi[i] = window.hi[i] - r;
        if (lo[i] > hi[i]) return {};
    }
    std::vector<GroupElement> out;
    std::vector<std::int64_t> cur = lo;
    while (true) {
        out.emplace_back(spec, cur, std::vector<std::int64_t>(spec.torsion_rank(), 0));
        std::size_t i = d;
        while (i-- > 0) {
            if (++cur[i] <= hi[i]) break;
            cur[i] = lo[i];
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

}  // namespace framelab
