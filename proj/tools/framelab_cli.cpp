// framelab command line: construct model families, analyze them, run the
// verification scenarios.

#include "framelab/constructions.hpp"
#include "framelab/errors.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/scenarios.hpp"
#include "framelab/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>

namespace fs = std::filesystem;
using namespace framelab;

namespace {

// Raised for configs and specs that do not match the schema.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw SchemaError(std::string("field '") + key + "' has the wrong type");
    }
}

template <class T>
T require(const json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return get_or<T>(j, key, T{});
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw SchemaError("unknown field '" + k + "' in " + where);
}

LocatedFamily identity_reference(std::int64_t dim) {
    LocatedFamily E;
    E.vectors = VectorFamily(Matrix::Identity(dim, dim));
    E.index = IndexedSet::line(0, dim - 1);
    return E;
}

FamilyFile build_family(const json& cfg) {
    check_keys(cfg, {"generator", "seed", "params", "name"}, "config");
    const auto generator = require<std::string>(cfg, "generator");
    const auto seed = get_or<std::uint64_t>(cfg, "seed", 1);
    const json params = cfg.contains("params") ? cfg.at("params") : json::object();
    FamilyFile out;
    if (generator == "finite_gabor") {
        check_keys(params, {"n", "a", "b", "window"}, "params");
        GaborSpec spec;
        spec.n = require<std::int64_t>(params, "n");
        spec.a = require<std::int64_t>(params, "a");
        spec.b = require<std::int64_t>(params, "b");
        if (spec.n < 1 || spec.a < 1 || spec.b < 1 || spec.n % spec.a || spec.n % spec.b)
            throw SchemaError("finite_gabor: a and b must be positive divisors of n");
        const json w = params.contains("window") ? params.at("window") : json("gaussian");
        if (w.is_string()) {
            if (w.get<std::string>() != "gaussian") throw SchemaError("finite_gabor: window must be \"gaussian\" or a list");
            spec.window = gaussian_window(spec.n);
        } else {
            spec.window = vector_family_from_json(json{{"ambient_dim", spec.n}, {"count", 1}, {"data", w}}).columns.col(0);
        }
        out.frame = finite_gabor(spec);
    } else if (generator == "union_of_onbs") {
        check_keys(params, {"dim", "M", "bases"}, "params");
        const auto dim = require<std::int64_t>(params, "dim");
        const auto M = require<std::int64_t>(params, "M");
        const auto bases = get_or<std::string>(params, "bases", "random");
        if (dim < 1 || M < 1) throw SchemaError("union_of_onbs: dim and M must be >= 1");
        if (bases != "random" && bases != "identity") throw SchemaError("union_of_onbs: bases must be random or identity");
        std::vector<Matrix> us;
        for (std::int64_t c = 0; c < M; ++c)
            us.push_back(bases == "identity" ? Matrix::Identity(dim, dim)
                                             : random_unitary(static_cast<std::size_t>(dim), seed + static_cast<std::uint64_t>(c)));
        out.frame = union_of_onbs(static_cast<std::size_t>(dim), us);
        out.reference = identity_reference(dim);
    } else if (generator == "synthetic_localized") {
        check_keys(params, {"window", "decay", "redundancy", "randomize", "jitter"}, "params");
        SyntheticOptions opt;
        opt.window = get_or<std::int64_t>(params, "window", opt.window);
        opt.decay = get_or<double>(params, "decay", opt.decay);
        opt.redundancy = get_or<std::size_t>(params, "redundancy", opt.redundancy);
        opt.randomize = get_or<bool>(params, "randomize", opt.randomize);
        opt.jitter = get_or<double>(params, "jitter", opt.jitter);
        opt.seed = seed;
        SyntheticModel model = synthetic_localized_frame(opt);
        out.frame = std::move(model.frame);
        out.reference = std::move(model.reference);
    } else {
        throw SchemaError("unknown generator '" + generator + "'");
    }
    return out;
}

json bounds_json(const FrameBounds& fb) {
    return json{{"lower", fb.lower}, {"upper", fb.upper}, {"span_rank", fb.span_rank}, {"is_frame_sequence", fb.is_frame_sequence}};
}

int cmd_construct(const fs::path& config, const fs::path& out) {
    const json cfg = read_json(config);
    const FamilyFile fam = build_family(cfg);
    fs::create_directories(out);
    const std::string name = get_or<std::string>(cfg, "name", "family");
    write_json(out / (name + ".json"), to_json(fam));
    json summary{{"generator", cfg.at("generator")},
                 {"seed", get_or<std::uint64_t>(cfg, "seed", 1)},
                 {"ambient_dim", fam.frame.vectors.ambient_dim()},
                 {"count", fam.frame.vectors.size()},
                 {"frame_bounds", bounds_json(frame_bounds(fam.frame.vectors))},
                 {"has_reference", fam.reference.has_value()}};
    write_json(out / (name + ".summary.json"), summary);
    std::cout << "wrote " << (out / (name + ".json")).string() << "\n";
    return 0;
}

std::string element_label(const GroupElement& g) {
    std::string s;
    for (auto k : g.free()) s += (s.empty() ? "" : " ") + std::to_string(k);
    for (auto m : g.torsion()) s += (s.empty() ? "" : " ") + std::to_string(m);
    return s;
}

std::vector<GroupElement> parse_centers(const json& spec, const IndexedSet& I, std::int64_t N_max) {
    const json c = spec.contains("centers") ? spec.at("centers") : json("interior");
    if (c.is_string()) {
        const std::string mode = c.get<std::string>();
        if (mode == "interior") return valid_centers(I, N_max);
        if (mode == "all") {
            std::set<GroupElement> pts(I.locations.begin(), I.locations.end());
            return {pts.begin(), pts.end()};
        }
        throw SchemaError("centers must be \"interior\", \"all\" or a list of points");
    }
    std::vector<GroupElement> out;
    for (const auto& g : c) out.push_back(element_from_json(I.spec, g));
    return out;
}

void write_measure(const MeasureProfile& prof, const fs::path& path) {
    CsvWriter csv({"N", "center", "count", "average_re", "average_im", "valid"});
    for (const auto& c : prof.cells)
        csv.row({std::to_string(c.N), element_label(c.center), std::to_string(c.count), format_double(c.average.real()),
                 format_double(c.average.imag()), c.valid ? "1" : "0"});
    csv.save(path);
}

json estimates(const std::vector<std::int64_t>& Ns, const std::vector<double>& lo, const std::vector<double>& hi) {
    json rows = json::array();
    for (std::size_t k = 0; k < Ns.size(); ++k)
        rows.push_back(json{{"N", Ns[k]}, {"inf", format_double(lo[k])}, {"sup", format_double(hi[k])}});
    return rows;
}

void write_envelope(const Envelope& r, const fs::path& path) {
    CsvWriter csv({"offset", "value"});
    for (const auto& [k, v] : r.values) csv.row({element_label(k), format_double(v)});
    csv.save(path);
}

int cmd_analyze(const fs::path& family_path, const fs::path& spec_path, const fs::path& out) {
    const FamilyFile fam = read_family_file(family_path);
    const json spec = read_json(spec_path);
    check_keys(spec, {"N_values", "centers", "quantities", "hap_N", "p", "alpha", "tol"}, "analysis spec");
    const auto Ns = require<std::vector<std::int64_t>>(spec, "N_values");
    if (Ns.empty() || !std::is_sorted(Ns.begin(), Ns.end()) || Ns.front() < 0)
        throw SchemaError("N_values must be a nonempty increasing list of N >= 0");
    const auto quantities = require<std::vector<std::string>>(spec, "quantities");
    const double p = get_or<double>(spec, "p", 1.0);
    const double tol = get_or<double>(spec, "tol", kDefaultTol);
    const LocatedFamily& F = fam.frame;
    const LocatedFamily* E = fam.reference ? &*fam.reference : nullptr;
    if (E && !(E->index.spec == F.index.spec))
        throw SchemaError("frame and reference are indexed by different groups");
    if (E && F.index.support.has_value() != E->index.support.has_value())
        throw SchemaError("frame and reference windows are incompatible");
    const std::vector<GroupElement> centers = parse_centers(spec, F.index, Ns.back());
    if (centers.empty()) throw TruncationError("no center admits a box of the largest N inside the window");

    fs::create_directories(out);
    json report{{"family", family_path.filename().string()}, {"centers", centers.size()}, {"N_values", Ns}};
    auto need_reference = [&](const std::string& q) {
        if (!E) throw SchemaError("quantity '" + q + "' needs a reference family");
    };
    for (const auto& q : quantities) {
        if (q == "frame_bounds") {
            report["frame_bounds"] = bounds_json(frame_bounds(F.vectors, tol));
        } else if (q == "density") {
            const DensityProfile prof = density_profile(F.index, centers, Ns);
            CsvWriter csv({"N", "center", "count", "ratio", "valid"});
            for (const auto& c : prof.cells)
                csv.row({std::to_string(c.N), element_label(c.center), std::to_string(c.count), format_double(c.ratio),
                         c.valid ? "1" : "0"});
            csv.save(out / "density.csv");
            report["density"] = estimates(prof.N_values, prof.inf_ratio, prof.sup_ratio);
        } else if (q == "measure") {
            const MeasureProfile prof = relative_measure_profile(F, nullptr, centers, Ns, tol);
            write_measure(prof, out / "measure.csv");
            report["measure"] = estimates(prof.N_values, prof.inf_real, prof.sup_real);
        } else if (q == "relative_measure") {
            need_reference(q);
            const MeasureProfile prof = relative_measure_profile(F, E, centers, Ns, tol);
            write_measure(prof, out / "relative_measure.csv");
            report["relative_measure"] = estimates(prof.N_values, prof.inf_real, prof.sup_real);
        } else if (q == "dual_measure") {
            need_reference(q);
            const MeasureProfile prof = dual_side_measure_profile(F, *E, centers, Ns, tol);
            write_measure(prof, out / "dual_measure.csv");
            report["dual_measure"] = estimates(prof.N_values, prof.inf_real, prof.sup_real);
        } else if (q == "residual") {
            need_reference(q);
            CsvWriter csv({"N", "center", "s_re", "s_im", "d", "r_re", "r_im", "residual"});
            for (const auto& c : density_measure_residual(F, *E, centers, Ns, tol))
                csv.row({std::to_string(c.N), element_label(c.center), format_double(c.s.real()), format_double(c.s.imag()),
                         format_double(c.d), format_double(c.r.real()), format_double(c.r.imag()), format_double(c.residual)});
            csv.save(out / "residual.csv");
        } else if (q == "localization") {
            need_reference(q);
            const Envelope r = localization_envelope(F, *E, p);
            write_envelope(r, out / "localization_envelope.csv");
            report["localization"] = json{{"norm", format_double(r.norm())}, {"extent", r.support_extent()}};
        } else if (q == "self_envelope") {
            const Envelope r = self_envelope(F, p);
            write_envelope(r, out / "self_envelope.csv");
            report["self_envelope"] = json{{"norm", format_double(r.norm())}, {"extent", r.support_extent()}};
        } else if (q == "hap") {
            need_reference(q);
            const auto N = get_or<std::int64_t>(spec, "hap_N", Ns.back());
            const DeficitReport weak = weak_hap_deficit(F, *E, N, tol);
            const DeficitReport strong = strong_hap_deficit(F, *E, N, tol);
            CsvWriter csv({"reference_id", "weak", "strong"});
            for (std::size_t k = 0; k < weak.ids.size(); ++k)
                csv.row({std::to_string(weak.ids[k]), format_double(weak.values[k]), format_double(strong.values[k])});
            csv.save(out / "hap.csv");
            report["hap"] = json{{"N", N}, {"weak_sup", format_double(weak.sup)}, {"strong_sup", format_double(strong.sup)}};
        } else if (q == "jalpha") {
            const double alpha = require<double>(spec, "alpha");
            const JalphaReport rep = jalpha_inequality_check(F, alpha, centers, Ns.back(), tol);
            CsvWriter csv({"center", "measure", "density", "density_j", "lower_bound", "upper_bound", "ok"});
            for (const auto& c : rep.cells)
                csv.row({element_label(c.center), format_double(c.measure), format_double(c.density), format_double(c.density_j),
                         format_double(c.lower_bound), format_double(c.upper_bound), c.ok ? "1" : "0"});
            csv.save(out / "jalpha.csv");
            report["jalpha"] = json{{"alpha", alpha}, {"N", rep.N}, {"min_margin", format_double(rep.min_margin)}, {"all_ok", rep.all_ok}};
        } else {
            throw SchemaError("unknown quantity '" + q + "'");
        }
    }
    write_json(out / "report.json", report);
    std::cout << "wrote " << (out / "report.json").string() << "\n";
    return 0;
}

json result_json(const ScenarioResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"label", c.label}, {"value", c.value}, {"relation", c.relation}, {"threshold", c.threshold},
                              {"margin", c.margin}, {"ok", c.ok}});
    return json{{"scenario", r.name}, {"summary", r.summary}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", checks}};
}

int cmd_verify(const std::string& name, std::optional<double> tol, const std::string& report) {
    ScenarioOptions opt;
    opt.tol = tol;
    const ScenarioResult r = run_scenario(name, opt);
    for (const auto& c : r.checks)
        std::printf("  [%s] %s: %s %s %s (margin %s)\n", c.ok ? "ok" : "FAIL", c.label.c_str(), format_double(c.value).c_str(),
                    c.relation.c_str(), format_double(c.threshold).c_str(), format_double(c.margin).c_str());
    std::printf("%s %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    if (!report.empty()) write_json(report, result_json(r));
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framelab: density, measure and removal diagnostics for localized frames"};
    app.require_subcommand(1);

    fs::path config, out, family, spec;
    auto* construct = app.add_subcommand("construct", "build a model family from a JSON config");
    construct->add_option("--config", config, "generator config")->required()->check(CLI::ExistingFile);
    construct->add_option("--out", out, "output directory")->required();

    auto* analyze = app.add_subcommand("analyze", "compute profiles and envelopes of a family");
    analyze->add_option("--family", family, "family file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--spec", spec, "analysis spec")->required()->check(CLI::ExistingFile);
    analyze->add_option("--out", out, "output directory")->required();

    std::string scenario, report;
    std::optional<double> tol;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "run a named verification scenario");
    verify->add_option("--scenario", scenario, "scenario name");
    verify->add_option("--tol", tol, "override the scenario tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--report", report, "write the margin report as JSON");
    verify->add_flag("--list", list, "list the registered scenarios");

    CLI11_PARSE(app, argc, argv);
    try {
        if (construct->parsed()) return cmd_construct(config, out);
        if (analyze->parsed()) return cmd_analyze(family, spec, out);
        if (list) {
            for (const auto& s : list_scenarios()) std::printf("%-20s %s\n", s.name.c_str(), s.summary.c_str());
            return 0;
        }
        if (scenario.empty()) throw SchemaError("verify needs --scenario or --list");
        return cmd_verify(scenario, tol, report);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
