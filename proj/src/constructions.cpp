#include "framelab/constructions.hpp"

#include "framelab/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace framelab {

void GaborSpec::validate() const {
    if (n < 1) throw std::invalid_argument("gabor: n must be >= 1");
    if (a < 1 || n % a != 0) throw std::invalid_argument("gabor: a must divide n");
    if (b < 1 || n % b != 0) throw std::invalid_argument("gabor: b must divide n");
    if (window.size() != n) throw std::invalid_argument("gabor: window length must equal n");
    if (window.norm() == 0.0) throw std::invalid_argument("gabor: window is zero");
}

Vector gaussian_window(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("gaussian_window: n must be >= 1");
    Vector g = Vector::Zero(n);
    const double dn = static_cast<double>(n);
    for (std::int64_t t = 0; t < n; ++t)
        for (std::int64_t p = -3; p <= 3; ++p) {
            const double x = static_cast<double>(t + p * n);
            g[t] += std::exp(-std::numbers::pi * x * x / dn);
        }
    return g / g.norm();
}

LocatedFamily finite_gabor(const GaborSpec& spec, double tol) {
    spec.validate();
    const std::int64_t n = spec.n, na = n / spec.a, nb = n / spec.b;
    LocatedFamily out;
    out.index.spec.torsion = {na, nb};
    out.vectors.columns.resize(n, na * nb);
    for (std::int64_t k = 0; k < na; ++k)
        for (std::int64_t m = 0; m < nb; ++m) {
            const std::int64_t id = k * nb + m;
            for (std::int64_t t = 0; t < n; ++t) {
                const double phase = 2.0 * std::numbers::pi * static_cast<double>((spec.b * m * t) % n) / static_cast<double>(n);
                const std::int64_t s = ((t - spec.a * k) % n + n) % n;
                out.vectors.columns(t, id) = std::polar(1.0, phase) * spec.window[s];
            }
            out.index.locations.emplace_back(out.index.spec, std::vector<std::int64_t>{},
                                             std::vector<std::int64_t>{k, m});
        }
    if (na * nb >= n) {
        const FrameBounds fb = frame_bounds(out.vectors, tol);
        if (fb.span_rank < static_cast<std::size_t>(n))
            throw PreconditionError("gabor: window generates a degenerate system (rank " +
                                    std::to_string(fb.span_rank) + " < " + std::to_string(n) + ")");
    }
    return out;
}

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) z(i, j) = cplx(normal(rng), normal(rng));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < d; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

LocatedFamily union_of_onbs(std::size_t dim, std::span<const Matrix> unitaries, double tol) {
    if (dim < 1) throw std::invalid_argument("union_of_onbs: dim must be >= 1");
    if (unitaries.empty()) throw std::invalid_argument("union_of_onbs: need at least one basis");
    const auto d = static_cast<Eigen::Index>(dim);
    LocatedFamily out;
    out.index = IndexedSet::line(0, d - 1);
    out.index.locations.clear();
    out.vectors.columns.resize(d, d * static_cast<Eigen::Index>(unitaries.size()));
    for (std::size_t c = 0; c < unitaries.size(); ++c) {
        const Matrix& U = unitaries[c];
        if (U.rows() != d || U.cols() != d) throw std::invalid_argument("union_of_onbs: unitary has the wrong size");
        if ((U.adjoint() * U - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("union_of_onbs: basis " + std::to_string(c) + " is not unitary");
        out.vectors.columns.middleCols(static_cast<Eigen::Index>(c) * d, d) = U;
        for (Eigen::Index j = 0; j < d; ++j) out.index.locations.push_back(GroupElement::on_line(out.index.spec, j));
    }
    return out;
}

IndexedSet jittered_lattice(const IndexedSet& base, std::span<const double> jitter, double bound) {
    if (base.spec.free_rank() != 1 || base.spec.torsion_rank() != 0)
        throw std::invalid_argument("jittered_lattice: needs a single free axis");
    if (jitter.size() != base.size()) throw std::invalid_argument("jittered_lattice: one jitter value per id");
    IndexedSet out = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!(std::abs(jitter[i]) < bound))
            throw std::invalid_argument("jittered_lattice: jitter exceeds the declared bound");
        const double moved = static_cast<double>(base.locations[i].free()[0]) + jitter[i];
        out.locations[i] = GroupElement::on_line(base.spec, std::llround(moved));
    }
    return out;
}

SyntheticModel synthetic_localized_frame(const SyntheticOptions& options) {
    const double lambda = options.decay;
    if (options.window < 1) throw std::invalid_argument("synthetic: window must be >= 1");
    if (!(lambda >= 0.0 && lambda < 1.0)) throw std::invalid_argument("synthetic: decay must lie in [0, 1)");
    if (options.redundancy < 1) throw std::invalid_argument("synthetic: redundancy must be >= 1");
    if (!(std::abs(options.jitter) < 0.5)) throw std::invalid_argument("synthetic: jitter amplitude must be < 0.5");

    const std::int64_t W = options.window;
    const auto R = static_cast<std::int64_t>(options.redundancy);
    const double kappa = (1.0 - lambda) / 4.0;
    std::int64_t reach = 0;
    if (lambda > 0.0) reach = std::min<std::int64_t>(W, static_cast<std::int64_t>(std::ceil(std::log(1e-16) / std::log(lambda))));

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    SyntheticModel model;
    model.frame.index = IndexedSet::line(0, W - 1);
    model.frame.index.locations.clear();
    model.frame.vectors.columns = Matrix::Zero(W, W * R);
    std::vector<double> jitter;
    for (std::int64_t c = 0; c < R; ++c)
        for (std::int64_t j = 0; j < W; ++j) {
            const Eigen::Index id = c * W + j;
            model.frame.vectors.columns(j, id) = 1.0;
            for (std::int64_t k = -reach; k <= reach; ++k) {
                if (k == 0 || j + k < 0 || j + k >= W) continue;
                const double theta =
                    options.randomize ? unif(rng) : std::cos(static_cast<double>(c * k + c));
                model.frame.vectors.columns(j + k, id) = kappa * std::pow(lambda, std::abs(k)) * theta;
            }
            model.frame.index.locations.push_back(GroupElement::on_line(model.frame.index.spec, j));
            jitter.push_back(c == 0 ? 0.0 : options.jitter * (1.0 - std::cos(std::numbers::pi * static_cast<double>(j))));
        }
    if (options.jitter != 0.0) model.frame.index = jittered_lattice(model.frame.index, jitter, 1.0);

    model.reference.index = IndexedSet::line(0, W - 1);
    model.reference.vectors = VectorFamily(Matrix::Identity(W, W));
    model.bounds = frame_bounds(model.frame.vectors);
    if (!model.bounds.is_frame_sequence || model.bounds.span_rank != static_cast<std::size_t>(W))
        throw std::domain_error("synthetic: construction is not a frame (bounds " + std::to_string(model.bounds.lower) +
                                ", " + std::to_string(model.bounds.upper) + ")");
    return model;
}

}  // namespace framelab
