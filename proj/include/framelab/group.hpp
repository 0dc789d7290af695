#pragma once

// The index universe: groups of the form
//
//     G = a_1 Z x ... x a_d Z x Z_{n_1} x ... x Z_{n_e}
//
// with the sup-metric |g| = max(|a_i k_i|, delta(m_j)), delta(m) = 0 iff m == 0.
// Scales are exact rationals so that box membership is decided in integer
// arithmetic and density counts are bit-stable.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace framelab {

using Rational = boost::rational<std::int64_t>;

struct GroupSpec {
    std::vector<Rational> scales;        // a_1 .. a_d, all > 0
    std::vector<std::int64_t> torsion;   // n_1 .. n_e, all >= 1

    /// Z^d with unit scales.
    static GroupSpec integers(std::size_t d = 1);

    std::size_t free_rank() const { return scales.size(); }
    std::size_t torsion_rank() const { return torsion.size(); }
    std::int64_t torsion_order() const;

    /// Throws std::invalid_argument when a scale is not positive, a torsion
    /// size is < 1, or the group is empty (d + e == 0).
    void validate() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// An element stored by integer coordinates: the free part holds k_i with the
/// actual coordinate a_i * k_i; the torsion part holds residues in [0, n_j).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(const GroupSpec& spec, std::vector<std::int64_t> free_coords,
                 std::vector<std::int64_t> torsion_residues = {});

    static GroupElement zero(const GroupSpec& spec);
    /// Shorthand for the 1-d free group: element k of a Z.
    static GroupElement on_line(const GroupSpec& spec, std::int64_t k);

    const std::vector<std::int64_t>& free() const { return free_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;

private:
    std::vector<std::int64_t> free_;
    std::vector<std::int64_t> torsion_;
};

/// Throws std::invalid_argument if g has the wrong shape for spec.
void check_element(const GroupSpec& spec, const GroupElement& g);

GroupElement add(const GroupSpec& spec, const GroupElement& g, const GroupElement& h);
GroupElement subtract(const GroupSpec& spec, const GroupElement& g, const GroupElement& h);
GroupElement negate(const GroupSpec& spec, const GroupElement& g);

/// |g| = sup(|a_i k_i|, delta(m_j)).
double metric_norm(const GroupSpec& spec, const GroupElement& g);

/// Exact test of |offset| <= N/2, i.e. offset in S_N(0).
bool in_box(const GroupSpec& spec, const GroupElement& offset, std::int64_t N);

/// Exact test of offset in B_N(0) = [-N/2, N/2)^d x H (half-open free part,
/// whole torsion part).
bool in_half_open_box(const GroupSpec& spec, const GroupElement& offset, std::int64_t N);

/// Smallest N >= 0 with offset in S_N(0); N = 0 means offset == 0.
std::int64_t min_box_size(const GroupSpec& spec, const GroupElement& offset);

/// Index radius of S_N along free axis i: floor(N / (2 a_i)).
std::int64_t free_radius(const GroupSpec& spec, std::size_t axis, std::int64_t N);

/// S_N(center) = { k : |k - center| <= N/2 }, enumerated in lexicographic order.
std::vector<GroupElement> box(const GroupSpec& spec, const GroupElement& center, std::int64_t N);

/// |S_N(j)|, independent of j.
std::int64_t box_cardinality(const GroupSpec& spec, std::int64_t N);

struct Asymptotics {
    double constant;
    int exponent;
};

/// lim |S_N| / N^d = C with C = prod(n_j) / prod(a_i). For a pure torsion group
/// |S_N| is eventually constant and the result is (prod n_j, 0).
Asymptotics asymptotic_constant(const GroupSpec& spec);

/// Tile index of the free part under the tiling of R^d by translates
/// [tN - N/2, tN + N/2) of the half-open box, i.e. floor((a_i k_i + N/2) / N).
std::vector<std::int64_t> half_open_tile(const GroupSpec& spec, const GroupElement& g, std::int64_t N);

/// Finite truncation region on the free coordinates (inclusive integer ranges
/// of the k_i); the torsion part is always whole.
struct Window {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    static Window interval(std::int64_t lo, std::int64_t hi) { return {{lo}, {hi}}; }
    bool contains(const GroupElement& g) const;
    friend bool operator==(const Window&, const Window&) = default;
};

/// True when S_N(center) lies entirely inside the window.
bool box_inside(const GroupSpec& spec, const Window& window, const GroupElement& center, std::int64_t N);

/// All elements of the window whose box S_N lies inside it (torsion residue 0).
std::vector<GroupElement> interior_points(const GroupSpec& spec, const Window& window, std::int64_t N);

}  // namespace framelab
