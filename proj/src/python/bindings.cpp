#include "framelab/constructions.hpp"
#include "framelab/envelope_algebra.hpp"
#include "framelab/errors.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/removal.hpp"
#include "framelab/riesz_decomp.hpp"
#include "framelab/scenarios.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace framelab;

namespace {

// Families on a Z-window: vectors as columns, one integer location per column.
LocatedFamily on_line(const Matrix& columns, const std::vector<std::int64_t>& locations, std::int64_t lo, std::int64_t hi) {
    LocatedFamily F;
    F.vectors = VectorFamily(columns);
    F.index = IndexedSet::line(lo, hi);
    F.index.locations.clear();
    for (auto k : locations) F.index.locations.push_back(GroupElement::on_line(F.index.spec, k));
    F.validate();
    return F;
}

std::vector<GroupElement> points(const std::vector<std::int64_t>& ks) {
    const GroupSpec z = GroupSpec::integers(1);
    std::vector<GroupElement> out;
    for (auto k : ks) out.push_back(GroupElement::on_line(z, k));
    return out;
}

std::vector<std::int64_t> line_locations(const IndexedSet& I) {
    std::vector<std::int64_t> out;
    for (const auto& g : I.locations) out.push_back(g.free().empty() ? 0 : g.free()[0]);
    return out;
}

py::dict scenario_dict(const ScenarioResult& r) {
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict d;
        d["label"] = c.label;
        d["value"] = c.value;
        d["relation"] = c.relation;
        d["threshold"] = c.threshold;
        d["margin"] = c.margin;
        d["ok"] = c.ok;
        checks.append(d);
    }
    py::dict out;
    out["name"] = r.name;
    out["passed"] = r.passed;
    out["seconds"] = r.seconds;
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Frame density, measure, removal and Riesz decomposition on finite windows";

    py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<FrameBounds>(m, "FrameBounds")
        .def_readonly("lower", &FrameBounds::lower)
        .def_readonly("upper", &FrameBounds::upper)
        .def_readonly("span_rank", &FrameBounds::span_rank)
        .def_readonly("is_frame_sequence", &FrameBounds::is_frame_sequence)
        .def("__repr__", [](const FrameBounds& b) {
            return "FrameBounds(lower=" + std::to_string(b.lower) + ", upper=" + std::to_string(b.upper) +
                   ", span_rank=" + std::to_string(b.span_rank) + ")";
        });

    py::class_<RieszCheck>(m, "RieszCheck")
        .def_readonly("is_riesz", &RieszCheck::is_riesz)
        .def_readonly("lower", &RieszCheck::lower)
        .def_readonly("upper", &RieszCheck::upper);

    m.def("gram", [](const Matrix& F) { return gram(VectorFamily(F)); }, py::arg("F"));
    m.def("frame_operator", [](const Matrix& F) { return frame_operator(VectorFamily(F)); }, py::arg("F"));
    m.def("frame_bounds", [](const Matrix& F, double tol) { return frame_bounds(VectorFamily(F), tol); },
          py::arg("F"), py::arg("tol") = kDefaultTol);
    m.def("canonical_dual", [](const Matrix& F, double tol) { return canonical_dual(VectorFamily(F), tol).columns; },
          py::arg("F"), py::arg("tol") = kDefaultTol);
    m.def("parseval", [](const Matrix& F, double tol) { return parseval(VectorFamily(F), tol).columns; },
          py::arg("F"), py::arg("tol") = kDefaultTol);
    m.def("self_dual_products", [](const Matrix& F, double tol) { return self_dual_products(VectorFamily(F), tol); },
          py::arg("F"), py::arg("tol") = kDefaultTol);
    m.def("riesz_check", [](const Matrix& F, double tol) { return riesz_check(VectorFamily(F), tol); },
          py::arg("F"), py::arg("tol") = kDefaultTol);

    m.def("gaussian_window", &gaussian_window, py::arg("n"));
    m.def(
        "finite_gabor",
        [](std::int64_t n, std::int64_t a, std::int64_t b, std::optional<Vector> window) {
            const LocatedFamily G = finite_gabor(GaborSpec{n, a, b, window ? *window : gaussian_window(n)});
            std::vector<std::pair<std::int64_t, std::int64_t>> locs;
            for (const auto& g : G.index.locations) locs.emplace_back(g.torsion()[0], g.torsion()[1]);
            return py::make_tuple(G.vectors.columns, locs);
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("window") = py::none(),
        "Columns e^{2 pi i b m t / n} g(t - a k) and their (k, m) labels.");
    m.def("random_unitary", &random_unitary, py::arg("dim"), py::arg("seed"));
    m.def(
        "union_of_onbs",
        [](const std::vector<Matrix>& bases) {
            if (bases.empty()) throw std::invalid_argument("need at least one basis");
            const LocatedFamily F = union_of_onbs(static_cast<std::size_t>(bases[0].rows()), bases);
            return py::make_tuple(F.vectors.columns, line_locations(F.index));
        },
        py::arg("bases"));
    m.def(
        "synthetic_localized_frame",
        [](std::int64_t window, double decay, std::size_t redundancy, std::uint64_t seed, bool randomize, double jitter) {
            SyntheticOptions opt{window, decay, redundancy, seed, randomize, jitter};
            const SyntheticModel model = synthetic_localized_frame(opt);
            return py::make_tuple(model.frame.vectors.columns, line_locations(model.frame.index));
        },
        py::arg("window") = 64, py::arg("decay") = 0.5, py::arg("redundancy") = 2, py::arg("seed") = 1,
        py::arg("randomize") = true, py::arg("jitter") = 0.0);

    m.def(
        "density_profile",
        [](const std::vector<std::int64_t>& locations, std::int64_t lo, std::int64_t hi,
           const std::vector<std::int64_t>& centers, const std::vector<std::int64_t>& N_values) {
            IndexedSet I = IndexedSet::line(lo, hi);
            I.locations = points(locations);
            const DensityProfile p = density_profile(I, points(centers), N_values);
            return py::make_tuple(p.inf_ratio, p.sup_ratio);
        },
        py::arg("locations"), py::arg("lo"), py::arg("hi"), py::arg("centers"), py::arg("N_values"),
        "(inf, sup) of |I_N(c)| / |S_N(c)| per N for a family on the window [lo, hi] of Z.");
    m.def(
        "measure_profile",
        [](const Matrix& F, const std::vector<std::int64_t>& locations, std::int64_t lo, std::int64_t hi,
           const std::vector<std::int64_t>& centers, const std::vector<std::int64_t>& N_values, double tol) {
            const MeasureProfile p = relative_measure_profile(on_line(F, locations, lo, hi), nullptr, points(centers), N_values, tol);
            return py::make_tuple(p.inf_real, p.sup_real);
        },
        py::arg("F"), py::arg("locations"), py::arg("lo"), py::arg("hi"), py::arg("centers"), py::arg("N_values"),
        py::arg("tol") = kDefaultTol);

    m.def("removal_rho", [](const Matrix& F, const IdList& J, double tol) { return removal_rho(VectorFamily(F), J, tol); },
          py::arg("F"), py::arg("J"), py::arg("tol") = kDefaultTol);
    m.def(
        "remove_and_bounds",
        [](const Matrix& F, const IdList& J, double tol) {
            const RemovalReport r = remove_and_bounds(VectorFamily(F), J, tol);
            py::dict d;
            d["rho"] = r.rho;
            d["A"] = r.A;
            d["B"] = r.B;
            d["predicted_lower"] = r.predicted_lower;
            d["remainder_lower"] = r.remainder_lower;
            d["remainder_upper"] = r.remainder_upper;
            d["status"] = to_string(r.status);
            return d;
        },
        py::arg("F"), py::arg("J"), py::arg("tol") = kDefaultTol);
    m.def(
        "positive_density_removal",
        [](const Matrix& F, const std::vector<std::int64_t>& locations, std::int64_t lo, std::int64_t hi, double alpha,
           double eps) {
            const PositiveRemoval r = positive_density_removal(on_line(F, locations, lo, hi), alpha, eps);
            const RemovalCertificate& c = r.certificate;
            py::dict d;
            d["N_eps"] = c.N_eps;
            d["N0"] = c.N0;
            d["N"] = c.N;
            d["rho"] = c.rho;
            d["certified_density"] = c.certified_density;
            d["predicted_lower"] = c.predicted_lower;
            d["actual_lower"] = c.actual_lower;
            return py::make_tuple(r.J, d);
        },
        py::arg("F"), py::arg("locations"), py::arg("lo"), py::arg("hi"), py::arg("alpha"), py::arg("eps"));

    m.def(
        "eps_riesz_check",
        [](const Matrix& F, double eps) {
            const EpsRieszResult r = eps_riesz_check(VectorFamily(F), eps);
            return py::make_tuple(r.ok, r.A);
        },
        py::arg("F"), py::arg("eps"));
    m.def(
        "decompose",
        [](const Matrix& F, const std::vector<std::int64_t>& locations, std::int64_t lo, std::int64_t hi, double eps) {
            const Decomposition d = decompose(on_line(F, locations, lo, hi), eps);
            py::dict out;
            out["K"] = d.K;
            out["N_delta"] = d.N_delta;
            out["L"] = d.L;
            out["part_bound"] = d.part_bound;
            out["parts"] = d.parts;
            out["all_ok"] = d.all_ok;
            return out;
        },
        py::arg("F"), py::arg("locations"), py::arg("lo"), py::arg("hi"), py::arg("eps"));

    m.def(
        "pinv_decay_rate",
        [](const Matrix& V, double lower, double upper) {
            const std::int64_t n = V.rows();
            const ProbeReport r = pseudoinverse_decay_probe(DominatedMatrix(V, IndexedSet::line(0, n - 1)), lower, upper);
            return py::make_tuple(r.rate, r.r_squared, r.interior_l1_tail);
        },
        py::arg("V"), py::arg("lower"), py::arg("upper"),
        "(rate, R^2, interior tail) of the exponential fit to the pseudo-inverse of a Hermitian matrix on a line.");

    m.def("list_scenarios", []() {
        std::vector<std::string> names;
        for (const auto& s : list_scenarios()) names.push_back(s.name);
        return names;
    });
    m.def(
        "run_scenario",
        [](const std::string& name, std::optional<double> tol) {
            ScenarioResult r;
            {
                py::gil_scoped_release release;
                r = run_scenario(name, ScenarioOptions{tol});
            }
            return scenario_dict(r);
        },
        py::arg("name"), py::arg("tol") = py::none());
}
