#pragma once

// Decay and approximation diagnostics of a family F (map a) against a
// reference family E indexed by points of G.
//
// Offset conventions:
//   localization_envelope  r_k = sup_i |<f_i, e_{k + a(i)}>|  (k = loc(e_j) - a(i))
//   self_envelope          r_k = max_{a(i) - a(j) = k} |<f_i, f_j>|
// All "for every eps there is N_eps" statements are turned into tail
// functions of N plus a search for the least N that reaches eps.

#include "framelab/envelope.hpp"
#include "framelab/index_map.hpp"

#include <optional>

namespace framelab {

/// [<f_i, e_j>]_{i in I, j in E}
Matrix cross_gram(const VectorFamily& F, const VectorFamily& E);

/// Tightest envelope of an arbitrary matrix: value at offset
/// k = row_loc(i) - col_loc(j) is the max |M_ij| over pairs with that offset.
Envelope envelope_of_matrix(const Matrix& M, const IndexedSet& rows, const IndexedSet& cols, double p = 1.0);

/// Minimal l^p envelope of F against E. Throws TruncationError for an empty window.
Envelope localization_envelope(const LocatedFamily& F, const LocatedFamily& E, double p = 1.0);

struct DecayRadius {
    bool achieved = false;
    std::int64_t radius = 0;                 // least N with every worst tail < eps
    std::vector<double> worst_tail;          // worst_tail[N - 1] for N = 1..N_max
    std::size_t lines_checked = 0;           // valid columns (or rows)
    double worst_tail_at_max() const { return worst_tail.empty() ? 0.0 : worst_tail.back(); }
};

/// Column tails sum_{i not in I_N(j)} |<f_i, e_j>|^p for the reference
/// elements j whose box S_{N_max} lies inside F's support window.
DecayRadius column_decay_radius(const LocatedFamily& F, const LocatedFamily& E, double eps, double p,
                                std::int64_t N_max);

/// Row tails sum_{j not in S_N(a(i))} |<f_i, e_j>|^p for the ids i whose box
/// S_{N_max}(a(i)) lies inside E's support window.
DecayRadius row_decay_radius(const LocatedFamily& F, const LocatedFamily& E, double eps, double p,
                             std::int64_t N_max);

struct DeficitReport {
    std::int64_t N = 0;
    std::vector<std::size_t> ids;   // reference ids (HAP) or F ids (dual HAP)
    std::vector<double> values;
    double sup = 0.0;
};

/// dist(e_j, span{f~_i : i in I_N(j)}) by least squares, for valid j.
/// Throws PreconditionError naming the first e_j outside span(F).
DeficitReport weak_hap_deficit(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N,
                               double tol = kDefaultTol);

/// ||e_j - sum_{i in I_N(j)} <e_j, f_i> f~_i|| for valid j.
DeficitReport strong_hap_deficit(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N,
                                 double tol = kDefaultTol);

struct DualDeficits {
    DeficitReport weak;
    DeficitReport strong;
};

/// Dual HAP deficits: dist(f_i, span{e~_j : j in S_N(a(i))}) and
/// ||f_i - sum_{j in S_N(a(i))} <f_i, e_j> e~_j||, for ids i whose box lies
/// inside E's support window.
DualDeficits dual_hap_deficits(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N,
                               double tol = kDefaultTol);

Envelope self_envelope(const LocatedFamily& F, double p = 1.0);

/// Envelope of |<f_i, f~_j>|; equals the self envelope of the canonical
/// Parseval frame.
Envelope dual_pair_envelope(const LocatedFamily& F, double p = 1.0, double tol = kDefaultTol);

/// r * s~. If |<f_i, e_k>| <= r_{k - a(i)} and |<f_i, e~_k>| <= s_{k - a(i)}
/// then |<f_i, f_j>| <= (r * s~)_{a(j) - a(i)}.
Envelope convolution_bound(const Envelope& r, const Envelope& s);

}  // namespace framelab
