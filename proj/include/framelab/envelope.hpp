#pragma once

// Nonnegative sequences over offsets in G that dominate matrix entries. Only
// offsets realised by the data are stored; lookups elsewhere return 0 with a
// flag.

#include "framelab/group.hpp"

#include <map>

namespace framelab {

struct Envelope {
    GroupSpec spec;
    std::map<GroupElement, double> values;
    double p = 1.0;

    struct Lookup {
        double value = 0.0;
        bool realized = false;
    };

    Lookup at(const GroupElement& offset) const;
    /// (sum r_k^p)^{1/p}
    double norm() const;
    double l1_norm() const;
    /// sum of r_k over offsets k outside S_N(0)
    double tail_outside_box(std::int64_t N) const;
    /// sum of r_k over offsets k outside B_N(0) = [-N/2, N/2)^d x H
    double tail_outside_half_open_box(std::int64_t N) const;
    /// Largest min_box_size over stored offsets with a nonzero value.
    std::int64_t support_extent() const;

    /// delta_0 with value c.
    static Envelope delta(const GroupSpec& spec, double c = 1.0);
};

/// r~(k) = r(-k)
Envelope reflect(const Envelope& r);
/// (r * s)(n) = sum_m r(n - m) s(m) over the stored supports.
Envelope convolve(const Envelope& r, const Envelope& s);
/// |c| r + s, pointwise on the union of supports.
Envelope combine(double c, const Envelope& r, const Envelope& s);
/// factor * r
Envelope scaled(const Envelope& r, double factor);

/// Throws std::invalid_argument if any value is negative or not finite.
void check_summable(const Envelope& r);

}  // namespace framelab
