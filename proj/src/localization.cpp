#include "framelab/localization.hpp"

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace framelab {

Matrix cross_gram(const VectorFamily& F, const VectorFamily& E) {
    if (F.ambient_dim() != E.ambient_dim()) throw std::invalid_argument("cross_gram: ambient dimensions differ");
    // (i, j) = e_j^H f_i
    return (E.columns.adjoint() * F.columns).transpose();
}

namespace {

// Distinct locations of an index set and the position of every id among them.
struct LocationTable {
    std::vector<GroupElement> points;
    std::vector<std::size_t> slot;
};

LocationTable tabulate(const IndexedSet& I) {
    std::map<GroupElement, std::size_t> pos;
    LocationTable t;
    t.slot.reserve(I.size());
    for (const auto& loc : I.locations) {
        auto [it, inserted] = pos.try_emplace(loc, t.points.size());
        if (inserted) t.points.push_back(loc);
        t.slot.push_back(it->second);
    }
    return t;
}

}  // namespace

Envelope envelope_of_matrix(const Matrix& M, const IndexedSet& rows, const IndexedSet& cols, double p) {
    if (static_cast<std::size_t>(M.rows()) != rows.size() || static_cast<std::size_t>(M.cols()) != cols.size())
        throw std::invalid_argument("envelope_of_matrix: shape does not match index sets");
    if (!(rows.spec == cols.spec)) throw std::invalid_argument("envelope_of_matrix: index sets over different groups");
    const LocationTable rt = tabulate(rows), ct = tabulate(cols);
    Eigen::MatrixXd best = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rt.points.size()),
                                                 static_cast<Eigen::Index>(ct.points.size()));
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            double& b = best(static_cast<Eigen::Index>(rt.slot[static_cast<std::size_t>(i)]),
                             static_cast<Eigen::Index>(ct.slot[static_cast<std::size_t>(j)]));
            b = std::max(b, std::abs(M(i, j)));
        }
    Envelope env;
    env.spec = rows.spec;
    env.p = p;
    for (std::size_t a = 0; a < rt.points.size(); ++a)
        for (std::size_t b = 0; b < ct.points.size(); ++b) {
            double& slot = env.values[subtract(rows.spec, rt.points[a], ct.points[b])];
            slot = std::max(slot, best(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
        }
    return env;
}

Envelope localization_envelope(const LocatedFamily& F, const LocatedFamily& E, double p) {
    F.validate();
    E.validate();
    if (F.vectors.size() == 0 || E.vectors.size() == 0)
        throw TruncationError("localization_envelope: empty window");
    // transpose so that the offset is loc(e_j) - a(i)
    return envelope_of_matrix(cross_gram(F.vectors, E.vectors).transpose(), E.index, F.index, p);
}

namespace {

// Per line, tail(N) = sum of weights whose min_box_size exceeds N.
std::vector<double> tail_profile(const std::vector<std::pair<std::int64_t, double>>& entries, std::int64_t N_max) {
    std::vector<double> bucket(static_cast<std::size_t>(N_max) + 2, 0.0);
    for (const auto& [n, w] : entries) bucket[static_cast<std::size_t>(std::min(n, N_max + 1))] += w;
    std::vector<double> tail(static_cast<std::size_t>(N_max), 0.0);
    double acc = bucket[static_cast<std::size_t>(N_max) + 1];
    for (std::int64_t N = N_max; N >= 1; --N) {
        tail[static_cast<std::size_t>(N - 1)] = acc;
        acc += bucket[static_cast<std::size_t>(N)];
    }
    return tail;
}

DecayRadius finish_radius(std::vector<std::vector<double>> tails, double eps, std::int64_t N_max) {
    if (tails.empty()) throw TruncationError("decay radius: no line is valid inside the window");
    DecayRadius out;
    out.lines_checked = tails.size();
    out.worst_tail.assign(static_cast<std::size_t>(N_max), 0.0);
    for (const auto& t : tails)
        for (std::size_t n = 0; n < t.size(); ++n) out.worst_tail[n] = std::max(out.worst_tail[n], t[n]);
    for (std::int64_t N = 1; N <= N_max; ++N)
        if (out.worst_tail[static_cast<std::size_t>(N - 1)] < eps) {
            out.achieved = true;
            out.radius = N;
            break;
        }
    return out;
}

void check_decay_args(double eps, double p, std::int64_t N_max) {
    if (eps <= 0) throw std::invalid_argument("decay radius: eps must be positive");
    if (p <= 0) throw std::invalid_argument("decay radius: p must be positive");
    if (N_max < 1) throw std::invalid_argument("decay radius: N_max must be >= 1");
}

}  // namespace

DecayRadius column_decay_radius(const LocatedFamily& F, const LocatedFamily& E, double eps, double p,
                                std::int64_t N_max) {
    check_decay_args(eps, p, N_max);
    F.validate();
    E.validate();
    const Matrix X = cross_gram(F.vectors, E.vectors);
    const auto& spec = F.index.spec;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < E.index.size(); ++j)
        if (cell_valid(F.index, E.index.locations[j], N_max)) cols.push_back(j);
    std::vector<std::vector<double>> tails(cols.size());
    parallel_for(cols.size(), [&](std::size_t k) {
        const std::size_t j = cols[k];
        std::vector<std::pair<std::int64_t, double>> entries;
        entries.reserve(F.index.size());
        for (std::size_t i = 0; i < F.index.size(); ++i)
            entries.emplace_back(min_box_size(spec, subtract(spec, F.index.locations[i], E.index.locations[j])),
                                 std::pow(std::abs(X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), p));
        tails[k] = tail_profile(entries, N_max);
    });
    return finish_radius(std::move(tails), eps, N_max);
}

DecayRadius row_decay_radius(const LocatedFamily& F, const LocatedFamily& E, double eps, double p,
                             std::int64_t N_max) {
    check_decay_args(eps, p, N_max);
    F.validate();
    E.validate();
    const Matrix X = cross_gram(F.vectors, E.vectors);
    const auto& spec = F.index.spec;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < F.index.size(); ++i)
        if (cell_valid(E.index, F.index.locations[i], N_max)) rows.push_back(i);
    std::vector<std::vector<double>> tails(rows.size());
    parallel_for(rows.size(), [&](std::size_t k) {
        const std::size_t i = rows[k];
        std::vector<std::pair<std::int64_t, double>> entries;
        entries.reserve(E.index.size());
        for (std::size_t j = 0; j < E.index.size(); ++j)
            entries.emplace_back(min_box_size(spec, subtract(spec, E.index.locations[j], F.index.locations[i])),
                                 std::pow(std::abs(X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), p));
        tails[k] = tail_profile(entries, N_max);
    });
    return finish_radius(std::move(tails), eps, N_max);
}

namespace {

double least_squares_distance(const Matrix& C, const Vector& target) {
    if (C.cols() == 0) return target.norm();
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(C);
    const Vector x = cod.solve(target);
    return (target - C * x).norm();
}

void require_span_contains(const VectorFamily& big, const VectorFamily& small, const char* what, double tol) {
    const Matrix P = span_projector(big, tol);
    const double slack = std::sqrt(tol);
    for (std::size_t j = 0; j < small.size(); ++j) {
        const Vector v = small[j];
        if ((v - P * v).norm() > slack * std::max(1.0, v.norm()))
            throw PreconditionError(std::string(what) + ": element " + std::to_string(j) +
                                    " lies outside the span of the approximating family");
    }
}

Matrix gather(const Matrix& M, const IdList& ids) {
    Matrix out(M.rows(), static_cast<Eigen::Index>(ids.size()));
    for (std::size_t k = 0; k < ids.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = M.col(static_cast<Eigen::Index>(ids[k]));
    return out;
}

void finish_sup(DeficitReport& r) {
    r.sup = 0.0;
    for (double v : r.values) r.sup = std::max(r.sup, v);
}

enum class Coefficients { LeastSquares, Canonical };

DeficitReport hap_deficit(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N, double tol,
                          Coefficients mode) {
    F.validate();
    E.validate();
    require_span_contains(F.vectors, E.vectors, "HAP", tol);
    const VectorFamily dual = canonical_dual(F.vectors, tol);
    DeficitReport rep;
    rep.N = N;
    for (std::size_t j = 0; j < E.index.size(); ++j)
        if (cell_valid(F.index, E.index.locations[j], N)) rep.ids.push_back(j);
    if (rep.ids.empty()) throw TruncationError("HAP deficit: no valid reference element in the window");
    rep.values.resize(rep.ids.size());
    parallel_for(rep.ids.size(), [&](std::size_t k) {
        const std::size_t j = rep.ids[k];
        const Vector e = E.vectors[j];
        const IdList near = preimage_box(F.index, E.index.locations[j], N);
        const Matrix C = gather(dual.columns, near);
        if (mode == Coefficients::LeastSquares) {
            rep.values[k] = least_squares_distance(C, e);
        } else {
            const Vector coeff = gather(F.vectors.columns, near).adjoint() * e;  // <e_j, f_i>
            rep.values[k] = (e - C * coeff).norm();
        }
    });
    finish_sup(rep);
    return rep;
}

}  // namespace

DeficitReport weak_hap_deficit(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N, double tol) {
    return hap_deficit(F, E, N, tol, Coefficients::LeastSquares);
}

DeficitReport strong_hap_deficit(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N, double tol) {
    return hap_deficit(F, E, N, tol, Coefficients::Canonical);
}

DualDeficits dual_hap_deficits(const LocatedFamily& F, const LocatedFamily& E, std::int64_t N, double tol) {
    F.validate();
    E.validate();
    if (!frame_bounds(E.vectors, tol).is_frame_sequence)
        throw PreconditionError("dual HAP: reference family is not a frame sequence");
    require_span_contains(E.vectors, F.vectors, "dual HAP", tol);
    const VectorFamily dual = canonical_dual(E.vectors, tol);
    DualDeficits out;
    out.weak.N = out.strong.N = N;
    for (std::size_t i = 0; i < F.index.size(); ++i)
        if (cell_valid(E.index, F.index.locations[i], N)) out.weak.ids.push_back(i);
    if (out.weak.ids.empty()) throw TruncationError("dual HAP deficit: no valid element in the window");
    out.strong.ids = out.weak.ids;
    out.weak.values.resize(out.weak.ids.size());
    out.strong.values.resize(out.weak.ids.size());
    parallel_for(out.weak.ids.size(), [&](std::size_t k) {
        const std::size_t i = out.weak.ids[k];
        const Vector f = F.vectors[i];
        const IdList near = preimage_box(E.index, F.index.locations[i], N);
        const Matrix C = gather(dual.columns, near);
        out.weak.values[k] = least_squares_distance(C, f);
        const Vector coeff = gather(E.vectors.columns, near).adjoint() * f;  // <f_i, e_j>
        out.strong.values[k] = (f - C * coeff).norm();
    });
    finish_sup(out.weak);
    finish_sup(out.strong);
    return out;
}

Envelope self_envelope(const LocatedFamily& F, double p) {
    F.validate();
    return envelope_of_matrix(gram(F.vectors), F.index, F.index, p);
}

Envelope dual_pair_envelope(const LocatedFamily& F, double p, double tol) {
    F.validate();
    if (!frame_bounds(F.vectors, tol).is_frame_sequence)
        throw PreconditionError("dual_pair_envelope: not a frame sequence");
    const VectorFamily dual = canonical_dual(F.vectors, tol);
    return envelope_of_matrix(cross_gram(F.vectors, dual), F.index, F.index, p);
}

Envelope convolution_bound(const Envelope& r, const Envelope& s) { return convolve(r, reflect(s)); }

}  // namespace framelab
