#include "framelab/scenarios.hpp"

#include "framelab/constructions.hpp"
#include "framelab/envelope_algebra.hpp"
#include "framelab/errors.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/removal.hpp"
#include "framelab/riesz_decomp.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace framelab {

namespace {

class Recorder {
public:
    explicit Recorder(std::vector<Check>& out) : out_(out) {}

    void le(std::string label, double value, double threshold) { add(std::move(label), value, threshold, "<=", value <= threshold, threshold - value); }
    void lt(std::string label, double value, double threshold) { add(std::move(label), value, threshold, "<", value < threshold, threshold - value); }
    void ge(std::string label, double value, double threshold) { add(std::move(label), value, threshold, ">=", value >= threshold, value - threshold); }
    void gt(std::string label, double value, double threshold) { add(std::move(label), value, threshold, ">", value > threshold, value - threshold); }
    void eq(std::string label, double value, double expected) {
        add(std::move(label), value, expected, "==", value == expected, value == expected ? 0.0 : -std::abs(value - expected));
    }
    void truth(std::string label, bool ok) { add(std::move(label), ok ? 1.0 : 0.0, 1.0, "==", ok, ok ? 0.0 : -1.0); }

private:
    void add(std::string label, double value, double threshold, const char* rel, bool ok, double margin) {
        if (std::isnan(value)) ok = false;
        out_.push_back({std::move(label), value, threshold, rel, ok, margin});
    }
    std::vector<Check>& out_;
};

using Body = std::function<void(Recorder&, double tol)>;

struct Entry {
    std::string name;
    std::string summary;
    double default_tol;
    double time_limit;  // seconds, 0 for none
    Body body;
};

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (std::int64_t k = lo; k <= hi; ++k) v.push_back(k);
    return v;
}

std::vector<GroupElement> line_points(std::int64_t lo, std::int64_t hi) {
    const GroupSpec z = GroupSpec::integers(1);
    std::vector<GroupElement> v;
    for (std::int64_t k = lo; k <= hi; ++k) v.push_back(GroupElement::on_line(z, k));
    return v;
}

LocatedFamily identity_located(const Matrix& columns) {
    LocatedFamily F;
    F.vectors = VectorFamily(columns);
    F.index = IndexedSet::line(0, columns.cols() - 1);
    return F;
}

Matrix random_gaussian(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = cplx(normal(rng), normal(rng));
    return m;
}

// Orthonormal basis of 2x2 rotations acting on the pairs (2j, 2j + 1).
Matrix paired_rotation(std::size_t dim, double angle) {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix U = Matrix::Identity(d, d);
    for (Eigen::Index j = 0; j + 1 < d; j += 2) {
        U(j, j) = std::cos(angle);
        U(j + 1, j) = std::sin(angle);
        U(j, j + 1) = -std::sin(angle);
        U(j + 1, j + 1) = std::cos(angle);
    }
    return U;
}

// Worst |average - target| over the valid cells of a measure profile.
double worst_deviation(const MeasureProfile& prof, double target) {
    double worst = 0.0;
    for (const auto& c : prof.cells)
        if (c.valid) worst = std::max(worst, std::abs(c.average - cplx(target, 0.0)));
    return worst;
}

void riesz_measure(Recorder& rec, double tol) {
    const std::int64_t n = 16;
    const auto centers = line_points(0, n - 1);
    const auto Ns = range(1, 8);
    const LocatedFamily onb = identity_located(Matrix::Identity(n, n));
    rec.le("onb: max |cell average - 1|", worst_deviation(relative_measure_profile(onb, nullptr, centers, Ns), 1.0), tol);
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const LocatedFamily F = identity_located(random_gaussian(n, seed));
        if (!riesz_check(F.vectors).is_riesz) throw std::runtime_error("random Riesz basis fixture is singular");
        worst = std::max(worst, worst_deviation(relative_measure_profile(F, nullptr, centers, Ns), 1.0));
    }
    rec.le("10 random Riesz bases: max |cell average - 1|", worst, tol);
}

void union_measure(Recorder& rec, double tol) {
    const std::size_t n = 16;
    const auto centers = line_points(0, static_cast<std::int64_t>(n) - 1);
    const auto Ns = range(1, 8);
    for (std::size_t M = 2; M <= 4; ++M) {
        std::vector<Matrix> us;
        for (std::size_t c = 0; c < M; ++c) us.push_back(random_unitary(n, 100 * M + c));
        const LocatedFamily F = union_of_onbs(n, us);
        const double dev = worst_deviation(relative_measure_profile(F, nullptr, centers, Ns), 1.0 / static_cast<double>(M));
        rec.le("M=" + std::to_string(M) + ": max |cell average - 1/M|", dev, tol);
    }
}

void wexler_raz(Recorder& rec, double tol) {
    const GaborSpec spec{24, 2, 3, gaussian_window(24)};
    const LocatedFamily G = finite_gabor(spec);
    const VectorFamily dual = canonical_dual(G.vectors, 1e-12);
    const double target = static_cast<double>(spec.a * spec.b) / static_cast<double>(spec.n);
    const cplx gg = inner(G.vectors[0], dual[0]);
    rec.le("|<g, g~> - ab/n|", std::abs(gg - target), tol);
    const RealVector q = self_dual_products(G.vectors, 1e-12);
    rec.le("|mean <f_i, f~_i> - ab/n|", std::abs(q.mean() - target), tol);
    rec.le("max_i |<f_i, f~_i> - ab/n|", (q.array() - target).abs().maxCoeff(), tol);
    const FrameBounds fb = frame_bounds(G.vectors);
    rec.truth("system spans C^24", fb.span_rank == 24);
}

void density_residual(Recorder& rec, double tol) {
    SyntheticOptions opt;
    opt.window = 256;
    opt.decay = 0.5;
    opt.redundancy = 2;
    opt.randomize = false;
    opt.jitter = 0.35;
    const SyntheticModel model = synthetic_localized_frame(opt);
    const auto centers = line_points(48, 207);
    const std::int64_t Ns[] = {8, 32};
    const auto cells = density_measure_residual(model.frame, model.reference, centers, Ns);
    std::map<GroupElement, double> at8, at32;
    for (const auto& c : cells) (c.N == 8 ? at8 : at32)[c.center] = c.residual;
    double worst32 = 0.0, worst_gap = std::numeric_limits<double>::infinity();
    std::size_t compared = 0;
    for (const auto& [c, r32] : at32) {
        worst32 = std::max(worst32, r32);
        const auto it = at8.find(c);
        if (it == at8.end()) continue;
        worst_gap = std::min(worst_gap, it->second - r32);
        ++compared;
    }
    rec.eq("interior centers with both scales", static_cast<double>(compared), static_cast<double>(centers.size()));
    rec.lt("max residual at N=32", worst32, tol);
    rec.gt("min (residual N=8 - residual N=32)", worst_gap, 0.0);
}

void abstract_density(Recorder& rec, double tol) {
    const std::size_t n = 32;
    const Matrix I = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const std::vector<Matrix> us{I, I};
    const LocatedFamily F = union_of_onbs(n, us);
    const LocatedFamily E = identity_located(I);
    const auto centers = line_points(0, static_cast<std::int64_t>(n) - 1);
    const auto Ns = range(1, 16);
    const auto cells = density_measure_residual(F, E, centers, Ns);
    double dev_d = 0, dev_r = 0, dev_s = 0, dev_prod = 0;
    for (const auto& c : cells) {
        dev_d = std::max(dev_d, std::abs(c.d - 2.0));
        dev_r = std::max(dev_r, std::abs(c.r - 0.5));
        dev_s = std::max(dev_s, std::abs(c.s - 1.0));
        dev_prod = std::max(dev_prod, std::abs(c.d * c.r - c.s));
    }
    rec.gt("cells checked", static_cast<double>(cells.size()), 0.0);
    rec.eq("max |density - 2|", dev_d, 0.0);
    rec.le("max |measure - 1/2|", dev_r, tol);
    rec.le("max |s_N - 1|", dev_s, tol);
    rec.le("max |d_N r_N - s_N|", dev_prod, tol);
}

std::vector<VectorFamily> random_parseval_frames(std::size_t count, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<std::size_t> extra(1, 2 * dim);
    std::vector<VectorFamily> out;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t m = dim + extra(rng);
        Matrix F(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(m));
        for (Eigen::Index j = 0; j < F.cols(); ++j)
            for (Eigen::Index i = 0; i < F.rows(); ++i) F(i, j) = cplx(normal(rng), normal(rng));
        out.push_back(parseval(VectorFamily(F)));
    }
    return out;
}

void frameremove_single(Recorder& rec, double tol) {
    double worst = 0.0;
    std::size_t removals = 0;
    for (const auto& F : random_parseval_frames(50, 12, 2024)) {
        for (std::size_t j = 0; j < F.size(); ++j) {
            const std::size_t J[] = {j};
            const RemovalReport rep = remove_and_bounds(F, J);
            worst = std::max(worst, std::abs(rep.remainder_lower - (1.0 - F[j].squaredNorm())));
            ++removals;
        }
    }
    rec.gt("single removals", static_cast<double>(removals), 0.0);
    rec.le("max |remainder lower bound - (1 - ||f_j||^2)|", worst, tol);
}

void frameremove_random(Recorder& rec, double) {
    std::mt19937_64 rng(77);
    std::size_t frames_kept = 0, spans_lost = 0, counterexamples = 0;
    double worst_formula = 0.0, worst_lower = 0.0;
    for (const auto& F : random_parseval_frames(50, 12, 4048)) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::size_t> ids(F.size());
            for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
            std::shuffle(ids.begin(), ids.end(), rng);
            std::uniform_int_distribution<std::size_t> size(0, F.size());
            ids.resize(size(rng));
            std::sort(ids.begin(), ids.end());
            const RhoReport rho = removal_rho_report(F, ids);
            worst_formula = std::max(worst_formula, rho.discrepancy);
            const RemovalReport rep = remove_and_bounds(F, ids);
            if (!rep.consistent) ++counterexamples;
            if (std::abs(rep.rho - 1.0) > kRhoBand) {
                if (rep.status == RemovalStatus::RemainderIsFrame) {
                    ++frames_kept;
                    worst_lower = std::max(worst_lower, rep.predicted_lower - rep.remainder_lower);
                }
            }
            if (rep.status == RemovalStatus::SpanReduced) ++spans_lost;
        }
    }
    rec.eq("counterexamples outside the band", static_cast<double>(counterexamples), 0.0);
    rec.gt("removals keeping a frame", static_cast<double>(frames_kept), 0.0);
    rec.gt("removals losing the span", static_cast<double>(spans_lost), 0.0);
    rec.le("max discrepancy between the three rho formulas", worst_formula, 1e-8);
    rec.le("max (A (1 - rho) - actual lower bound)", worst_lower, 1e-8);
}

void matrix_decay(Recorder& rec, double tol) {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> pickK(1, 3);
    std::uniform_int_distribution<std::int64_t> pickW(8, 40);
    std::size_t violations = 0, built = 0;
    double worst_ratio = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t K = static_cast<std::size_t>(pickK(rng));
        const std::int64_t W = pickW(rng);
        IndexedSet I;
        I.spec = GroupSpec::integers(1);
        for (std::int64_t k = 0; k < W; ++k) {
            const std::size_t copies = t % 2 == 0 ? K : 1 + static_cast<std::size_t>(unif(rng) * static_cast<double>(K));
            for (std::size_t c = 0; c < std::min(copies, K); ++c) I.locations.push_back(GroupElement::on_line(I.spec, k));
        }
        Envelope r;
        r.spec = I.spec;
        const double lambda = 0.1 + 0.8 * unif(rng);
        for (std::int64_t k = -(W - 1); k <= W - 1; ++k)
            r.values[GroupElement::on_line(I.spec, k)] = (0.5 + unif(rng)) * std::pow(lambda, static_cast<double>(std::abs(k)));
        const auto n = static_cast<Eigen::Index>(I.size());
        Matrix V(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i) {
                const double bound = r.at(subtract(I.spec, I.locations[static_cast<std::size_t>(i)],
                                                   I.locations[static_cast<std::size_t>(j)])).value;
                V(i, j) = std::polar(bound * unif(rng), 2.0 * std::numbers::pi * unif(rng));
            }
        const DominatedMatrix dm(V, I, r);
        const OpnormBound given = opnorm_bound_check(dm, tol);
        const OpnormBound tight = opnorm_bound_check(DominatedMatrix(V, I), tol);
        built += 2;
        if (!given.ok) ++violations;
        if (!tight.ok) ++violations;
        worst_ratio = std::max({worst_ratio, given.actual / given.bound, tight.actual / tight.bound});
    }
    rec.eq("dominated matrices checked", static_cast<double>(built), 400.0);
    rec.eq("violations of ||V|| <= K ||r||_1", static_cast<double>(violations), 0.0);
    rec.le("max ||V|| / (K ||r||_1)", worst_ratio, 1.0 + tol);
}

LocatedFamily tridiagonal_gram_family(std::int64_t n, double off) {
    Matrix G = Matrix::Identity(n, n);
    for (std::int64_t j = 0; j + 1 < n; ++j) G(j, j + 1) = G(j + 1, j) = off;
    Eigen::SelfAdjointEigenSolver<Matrix> es(G);
    const Matrix root = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    return identity_located(root);
}

void eps_riesz(Recorder& rec, double) {
    const std::size_t dim = 256;
    const std::vector<Matrix> bases{Matrix::Identity(256, 256), paired_rotation(dim, std::numbers::pi / 5.0)};
    const std::vector<std::pair<std::string, LocatedFamily>> fixtures{
        {"two ONBs", union_of_onbs(dim, bases)}, {"tridiagonal gram", tridiagonal_gram_family(256, 0.125)}};
    for (const auto& [label, F] : fixtures) {
        for (double eps : {0.1, 0.25}) {
            const Decomposition dec = decompose(F, eps);
            const std::string tag = label + " eps=" + (eps == 0.1 ? std::string("0.1") : std::string("0.25"));
            std::vector<int> seen(F.vectors.size(), 0);
            for (const auto& part : dec.parts)
                for (auto i : part) ++seen[i];
            const bool partition = std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
            std::size_t failed = 0;
            double worst_off = 0.0;
            for (const auto& c : dec.per_part) {
                if (!c.riesz.ok) ++failed;
                worst_off = std::max(worst_off, c.offdiag_norm);
            }
            rec.truth(tag + ": exact partition", partition);
            rec.eq(tag + ": parts failing eps-Riesz", static_cast<double>(failed), 0.0);
            rec.le(tag + ": part count vs K 2^d L", static_cast<double>(dec.parts.size()), static_cast<double>(dec.part_bound));
            rec.lt(tag + ": max off-diagonal norm vs delta/2", worst_off, dec.delta / 2.0);
        }
    }
}

SyntheticModel removal_model() {
    SyntheticOptions opt;
    opt.window = 96;
    opt.decay = 0.2;
    opt.redundancy = 2;
    opt.seed = 9;
    return synthetic_localized_frame(opt);
}

void positive_removal(Recorder& rec, double tol) {
    const double alpha = 0.6, eps = 0.1;
    const SyntheticModel model = removal_model();
    const PositiveRemoval out = positive_density_removal(model.frame, alpha, eps);
    const RemovalCertificate& c = out.certificate;
    const IdList Ja = j_alpha(model.frame.vectors, alpha);
    const bool subset = std::includes(Ja.begin(), Ja.end(), out.J.begin(), out.J.end());
    rec.gt("|J|", static_cast<double>(out.J.size()), 0.0);
    rec.truth("J inside J_alpha", subset);
    rec.le("|tiled density - 1/|S_2N(0)||", std::abs(c.tiled_density - c.certified_density), 1e-15);
    rec.le("rho(J)", c.rho, alpha + eps);
    rec.ge("remainder lower bound - A (1 - alpha - eps)", c.actual_lower - c.A * (1.0 - alpha - eps), -tol);
    rec.gt("min separation of selected points - N_eps / 2", c.min_separation - static_cast<double>(c.N_eps) / 2.0, 0.0);
    rec.le("diagonal part", c.diag_norm, alpha + 1e-10);
    rec.lt("off-diagonal part vs eps", c.offdiag_norm, eps);
}

void pinv_decay(Recorder& rec, double) {
    const std::int64_t n = 200;
    Matrix V = Matrix::Identity(n, n);
    for (std::int64_t j = 0; j + 1 < n; ++j) V(j, j + 1) = V(j + 1, j) = 0.25;
    const DominatedMatrix dm(V, IndexedSet::line(0, n - 1));
    const ProbeReport rep = pseudoinverse_decay_probe(dm, 0.5, 1.5);
    rec.ge("exponential fit R^2", rep.r_squared, 0.99);
    rec.lt("interior l1 tail beyond offset 30", rep.interior_l1_tail, 1e-6);
    rec.le("|fitted rate - (2 - sqrt 3)|", std::abs(rep.rate - (2.0 - std::sqrt(3.0))), 5e-3);
    rec.truth("spectrum inside [A, B]", rep.spectrum_contained);
}

std::string format_alpha(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", alpha);
    return buf;
}

void jalpha_cells(Recorder& rec, const std::string& tag, const LocatedFamily& F, double alpha, std::int64_t N,
                  std::int64_t first_center) {
    const JalphaReport rep = jalpha_inequality_check(F, alpha, line_points(first_center, first_center + 19), N);
    rec.eq(tag + ": cells", static_cast<double>(rep.cells.size()), 20.0);
    rec.ge(tag + ": min margin", rep.min_margin, 0.0);
}

void jalpha(Recorder& rec, double) {
    const std::size_t dim = 32;
    for (std::size_t M = 2; M <= 4; ++M) {
        std::vector<Matrix> us;
        for (std::size_t c = 0; c < M; ++c) us.push_back(random_unitary(dim, 500 + 10 * M + c));
        const LocatedFamily F = union_of_onbs(dim, us);
        const double measure = 1.0 / static_cast<double>(M);
        for (double alpha : {measure + 0.1, 0.9})
            jalpha_cells(rec, "M=" + std::to_string(M) + " alpha=" + format_alpha(alpha), F, alpha, 4, 2);
    }
    const SyntheticModel model = removal_model();
    for (double alpha : {0.6, 0.9}) jalpha_cells(rec, "synthetic alpha=" + format_alpha(alpha), model.frame, alpha, 8, 10);
}

void necessary_density(Recorder& rec, double) {
    struct Fixture {
        std::string label;
        LocatedFamily frame;
        LocatedFamily reference;
    };
    std::vector<Fixture> fixtures;
    for (std::size_t R = 1; R <= 3; ++R) {
        SyntheticOptions opt;
        opt.window = 96;
        opt.redundancy = R;
        opt.decay = 0.4;
        opt.seed = 40 + R;
        SyntheticModel m = synthetic_localized_frame(opt);
        fixtures.push_back({"synthetic R=" + std::to_string(R), m.frame, m.reference});
    }
    {
        SyntheticOptions opt;
        opt.window = 96;
        opt.randomize = false;
        opt.jitter = 0.35;
        SyntheticModel m = synthetic_localized_frame(opt);
        fixtures.push_back({"jittered synthetic", m.frame, m.reference});
    }
    {
        SyntheticModel m = removal_model();
        const PositiveRemoval pr = positive_density_removal(m.frame, 0.6, 0.1);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, k = 0; i < m.frame.vectors.size(); ++i) {
            if (k < pr.J.size() && pr.J[k] == i) {
                ++k;
                continue;
            }
            keep.push_back(i);
        }
        LocatedFamily rest;
        rest.vectors = subfamily(m.frame.vectors, keep);
        rest.index.spec = m.frame.index.spec;
        rest.index.support = m.frame.index.support;
        for (auto i : keep) rest.index.locations.push_back(m.frame.index.locations[i]);
        fixtures.push_back({"remainder after removal", rest, m.reference});
    }
    {
        const std::size_t dim = 96;
        const std::vector<Matrix> bases{Matrix::Identity(96, 96), paired_rotation(dim, 0.3)};
        fixtures.push_back({"two localized ONBs", union_of_onbs(dim, bases), identity_located(Matrix::Identity(96, 96))});
        fixtures.push_back({"one ONB", identity_located(Matrix::Identity(96, 96)), identity_located(Matrix::Identity(96, 96))});
    }
    const std::int64_t Ns[] = {4, 8, 16, 32};
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& f : fixtures) {
        if (!frame_bounds(f.frame.vectors).is_frame_sequence || !riesz_check(f.reference.vectors).is_riesz)
            throw std::runtime_error(f.label + ": fixture is not a frame against a Riesz reference");
        const auto centers = valid_centers(f.frame.index, 32);
        const double est = density_profile(f.frame.index, centers, Ns).lower_estimate();
        rec.ge(f.label + ": interior lower density", est, 0.95);
        lowest = std::min(lowest, est);
    }
    rec.ge("lowest estimate over all fixtures", lowest, 0.95);
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {"riesz-measure", "every measure cell of an ONB or a random Riesz basis of C^16 equals 1", 1e-10, 1.0, riesz_measure},
        {"union-measure", "unions of M = 2, 3, 4 ONBs of C^16 have every measure cell equal to 1/M", 1e-10, 1.0, union_measure},
        {"wexler-raz", "finite Gabor system n=24, a=2, b=3: <g, g~> = ab/n", 1e-8, 5.0, wexler_raz},
        {"density-residual", "jittered redundancy-2 model on 256 points: |s_N - d_N r_N| shrinks from N=8 to N=32 and is < 0.05",
         0.05, 30.0, density_residual},
        {"abstract-density", "double ONB against an ONB: measure 1/2, density 2, d_N r_N = s_N = 1", 1e-10, 0.0,
         abstract_density},
        {"frameremove",
         "random Parseval frames in C^12: single removals give lower bound 1 - ||f_j||^2; random J obey frame <=> rho < 1",
         1e-8, 0.0,
         [](Recorder& rec, double tol) {
             frameremove_single(rec, tol);
             frameremove_random(rec, tol);
         }},
        {"frameremove-single", "single removals from random Parseval frames in C^12", 1e-8, 0.0, frameremove_single},
        {"frameremove-random", "random removals obey frame <=> rho < 1 outside the band around 1", 1e-8, 0.0,
         frameremove_random},
        {"matrix-decay", "200 random dominated matrices with fibers K = 1, 2, 3 satisfy ||V|| <= K ||r||_1", 1e-10, 0.0,
         matrix_decay},
        {"eps-riesz", "decompose splits two ONBs and a tridiagonal-Gram family into eps-Riesz parts", 1e-10, 60.0, eps_riesz},
        {"positive-removal", "redundancy-2 model, alpha=0.6, eps=0.1: certified density, rho <= 0.7, lower bound >= 0.3 A",
         1e-8, 0.0, positive_removal},
        {"pinv-decay", "pseudo-inverse of the (1/4, 1, 1/4) Toeplitz matrix on 200 points decays exponentially", 1e-10,
         0.0, pinv_decay},
        {"jalpha", "J_alpha density inequalities hold cell by cell on unions of ONBs and the redundancy-2 model", 1e-10,
         0.0, jalpha},
        {"necessary-density", "localized frames against Riesz references have interior lower density >= 0.95", 1e-10,
         0.0, necessary_density},
    };
    return entries;
}

}  // namespace

std::vector<ScenarioInfo> list_scenarios() {
    std::vector<ScenarioInfo> out;
    for (const auto& e : registry()) out.push_back({e.name, e.summary});
    return out;
}

std::vector<std::string> acceptance_scenarios() {
    return {"riesz-measure", "union-measure",  "wexler-raz", "density-residual", "abstract-density", "frameremove",
            "matrix-decay",  "eps-riesz",      "positive-removal", "pinv-decay", "jalpha", "necessary-density"};
}

ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& options) {
    const auto& entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.name == name; });
    if (it == entries.end()) throw std::invalid_argument("unknown scenario '" + name + "'");
    ScenarioResult res;
    res.name = it->name;
    res.summary = it->summary;
    Recorder rec(res.checks);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->body(rec, options.tol.value_or(it->default_tol));
    } catch (const std::exception& e) {
        rec.truth(std::string("completed without error: ") + e.what(), false);
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (it->time_limit > 0) rec.lt("runtime seconds", res.seconds, it->time_limit);
    res.passed = !res.checks.empty() &&
                 std::all_of(res.checks.begin(), res.checks.end(), [](const Check& c) { return c.ok; });
    return res;
}

}  // namespace framelab
