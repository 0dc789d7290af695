#include "framelab/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace framelab {

Envelope::Lookup Envelope::at(const GroupElement& offset) const {
    auto it = values.find(offset);
    if (it == values.end()) return {0.0, false};
    return {it->second, true};
}

double Envelope::norm() const {
    double s = 0.0;
    for (const auto& [k, v] : values) s += std::pow(v, p);
    return std::pow(s, 1.0 / p);
}

double Envelope::l1_norm() const {
    double s = 0.0;
    for (const auto& [k, v] : values) s += v;
    return s;
}

double Envelope::tail_outside_box(std::int64_t N) const {
    double s = 0.0;
    for (const auto& [k, v] : values)
        if (!in_box(spec, k, N)) s += v;
    return s;
}

double Envelope::tail_outside_half_open_box(std::int64_t N) const {
    double s = 0.0;
    for (const auto& [k, v] : values)
        if (!in_half_open_box(spec, k, N)) s += v;
    return s;
}

std::int64_t Envelope::support_extent() const {
    std::int64_t n = 0;
    for (const auto& [k, v] : values)
        if (v > 0) n = std::max(n, min_box_size(spec, k));
    return n;
}

Envelope Envelope::delta(const GroupSpec& spec, double c) {
    Envelope e;
    e.spec = spec;
    e.values[GroupElement::zero(spec)] = c;
    return e;
}

void check_summable(const Envelope& r) {
    for (const auto& [k, v] : r.values)
        if (!std::isfinite(v) || v < 0) throw std::invalid_argument("envelope values must be finite and nonnegative");
}

Envelope reflect(const Envelope& r) {
    Envelope out;
    out.spec = r.spec;
    out.p = r.p;
    for (const auto& [k, v] : r.values) out.values[negate(r.spec, k)] = v;
    return out;
}

Envelope convolve(const Envelope& r, const Envelope& s) {
    if (!(r.spec == s.spec)) throw std::invalid_argument("convolve: envelopes over different groups");
    check_summable(r);
    check_summable(s);
    Envelope out;
    out.spec = r.spec;
    out.p = 1.0;
    for (const auto& [kr, vr] : r.values)
        for (const auto& [ks, vs] : s.values) out.values[add(r.spec, kr, ks)] += vr * vs;
    return out;
}

Envelope combine(double c, const Envelope& r, const Envelope& s) {
    if (!(r.spec == s.spec)) throw std::invalid_argument("combine: envelopes over different groups");
    check_summable(r);
    check_summable(s);
    Envelope out;
    out.spec = r.spec;
    out.p = 1.0;
    for (const auto& [k, v] : r.values) out.values[k] += std::abs(c) * v;
    for (const auto& [k, v] : s.values) out.values[k] += v;
    return out;
}

Envelope scaled(const Envelope& r, double factor) {
    Envelope out = r;
    for (auto& [k, v] : out.values) v *= factor;
    return out;
}

}  // namespace framelab
