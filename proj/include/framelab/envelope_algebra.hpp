#pragma once

// Matrices over I x I dominated entrywise by an l^1 envelope of the offset
// a(i) - a(j): norm bounds, envelope arithmetic for sums, products and
// polynomials, and an empirical probe of the off-diagonal decay of the
// pseudo-inverse of a frame Gram matrix.

#include "framelab/envelope.hpp"
#include "framelab/index_map.hpp"

#include <optional>
#include <string>

namespace framelab {

/// A matrix V with |v_ij| <= r_{a(i) - a(j)} on all pairs.
class DominatedMatrix {
public:
    /// Throws std::invalid_argument if the shapes disagree or some entry
    /// exceeds the envelope by more than tol (relative to the largest entry).
    DominatedMatrix(Matrix matrix, IndexedSet index, Envelope envelope, double tol = 1e-12);
    /// Uses the tightest envelope of the matrix.
    DominatedMatrix(Matrix matrix, IndexedSet index);

    const Matrix& matrix() const { return matrix_; }
    const IndexedSet& index() const { return index_; }
    const Envelope& envelope() const { return envelope_; }
    std::size_t fiber_bound() const { return K_; }

private:
    Matrix matrix_;
    IndexedSet index_;
    Envelope envelope_;
    std::size_t K_ = 1;
};

/// Tightest associated sequence of V under the map a.
Envelope min_envelope_of(const Matrix& V, const IndexedSet& a);

struct OpnormBound {
    double bound = 0.0;    // K ||r||_1
    double actual = 0.0;   // largest singular value
    bool ok = false;
};

OpnormBound opnorm_bound_check(const DominatedMatrix& V, double tol = 1e-10);

/// |c| r + s
Envelope envelope_add(cplx c, const Envelope& r, const Envelope& s);
/// K (r * s)
Envelope envelope_multiply(const Envelope& r, const Envelope& s, std::size_t K);
/// |c_0| delta + |c_1| r + K |c_2| r*r + ... + K^{n-1} |c_n| r^{*n}
Envelope polynomial_envelope(std::span<const cplx> coeffs, const Envelope& r, std::size_t K);
/// p(V) for the same coefficients.
Matrix matrix_polynomial(std::span<const cplx> coeffs, const Matrix& V);

/// True when |M_ij| <= r_{a(i) - a(j)} + tol for every pair (missing offsets
/// count as 0).
bool dominates(const Envelope& r, const Matrix& M, const IndexedSet& a, double tol = 1e-12);

enum class DecayModel { Exponential, L1Tail };

struct ProbeOptions {
    DecayModel model = DecayModel::Exponential;
    double margin = 0.25;          // fraction of the window dropped on each side
    double noise_floor = 1e-14;    // envelope values below are ignored in the fit
    std::int64_t tail_offset = 30; // interior l^1 tail is summed beyond this |k|
    double tol = 1e-10;            // rank and spectral-containment tolerance
};

struct ProbeReport {
    std::string fit_model;
    // exponential model |V+_k| ~ c * rate^{|k|}
    double amplitude = 0.0;
    double rate = 0.0;
    double r_squared = 0.0;
    std::size_t fit_points = 0;
    double interior_l1_tail = 0.0;        // sum of interior envelope beyond tail_offset
    std::vector<std::pair<double, double>> tail_profile;  // (t, sum_{|k| > t})
    double spectral_lower = 0.0;          // requested interval
    double spectral_upper = 0.0;
    double observed_min_nonzero = 0.0;
    double observed_max = 0.0;
    bool spectrum_contained = false;
    std::size_t interior_size = 0;
    Matrix pseudo_inverse;
    Envelope interior_envelope;
};

/// Computes V^+ through the Hermitian eigendecomposition, extracts the
/// tightest envelope of V^+ on the interior of the index window and fits the
/// requested decay model. Throws PreconditionError if V is not Hermitian or
/// its nonzero spectrum leaves [lower - tol, upper + tol].
ProbeReport pseudoinverse_decay_probe(const DominatedMatrix& V, double lower, double upper,
                                      const ProbeOptions& options = {});

}  // namespace framelab
