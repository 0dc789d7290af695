#include "framelab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace framelab {

namespace {

json rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational scale '" + s + "'");
        }
    }
    throw std::invalid_argument("scale must be an integer or a \"p/q\" string");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const GroupSpec& spec) {
    json scales = json::array();
    for (const auto& a : spec.scales) scales.push_back(rational_to_json(a));
    return json{{"scales", scales}, {"torsion", spec.torsion}};
}

GroupSpec group_spec_from_json(const json& j) {
    GroupSpec spec;
    for (const auto& a : field(j, "scales")) spec.scales.push_back(rational_from_json(a));
    if (j.contains("torsion")) spec.torsion = j.at("torsion").get<std::vector<std::int64_t>>();
    spec.validate();
    return spec;
}

json to_json(const GroupElement& g) {
    json out = json::array();
    for (auto k : g.free()) out.push_back(k);
    for (auto m : g.torsion()) out.push_back(m);
    return out;
}

GroupElement element_from_json(const GroupSpec& spec, const json& j) {
    const auto coords = j.get<std::vector<std::int64_t>>();
    const std::size_t d = spec.free_rank();
    if (coords.size() != d + spec.torsion_rank()) throw std::invalid_argument("group element has the wrong length");
    return GroupElement(spec, {coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(d)},
                        {coords.begin() + static_cast<std::ptrdiff_t>(d), coords.end()});
}

json to_json(const Window& w) { return json{{"lo", w.lo}, {"hi", w.hi}}; }

Window window_from_json(const json& j) {
    Window w{field(j, "lo").get<std::vector<std::int64_t>>(), field(j, "hi").get<std::vector<std::int64_t>>()};
    if (w.lo.size() != w.hi.size()) throw std::invalid_argument("window lo/hi lengths differ");
    for (std::size_t a = 0; a < w.lo.size(); ++a)
        if (w.lo[a] > w.hi[a]) throw std::invalid_argument("window has lo > hi");
    return w;
}

json to_json(const IndexedSet& I) {
    json locs = json::array();
    for (const auto& g : I.locations) locs.push_back(to_json(g));
    json out{{"group", to_json(I.spec)}, {"locations", locs}};
    out["window"] = I.support ? to_json(*I.support) : json(nullptr);
    return out;
}

IndexedSet indexed_set_from_json(const json& j) {
    IndexedSet I;
    I.spec = group_spec_from_json(field(j, "group"));
    for (const auto& g : field(j, "locations")) I.locations.push_back(element_from_json(I.spec, g));
    if (j.contains("window") && !j.at("window").is_null()) {
        I.support = window_from_json(j.at("window"));
        if (I.support->lo.size() != I.spec.free_rank()) throw std::invalid_argument("window rank differs from the group");
    }
    return I;
}

json to_json(const VectorFamily& F) {
    json data = json::array();
    for (Eigen::Index c = 0; c < F.columns.cols(); ++c)
        for (Eigen::Index r = 0; r < F.columns.rows(); ++r)
            data.push_back(json::array({F.columns(r, c).real(), F.columns(r, c).imag()}));
    return json{{"ambient_dim", F.ambient_dim()}, {"count", F.size()}, {"data", data}};
}

VectorFamily vector_family_from_json(const json& j) {
    const auto n = field(j, "ambient_dim").get<Eigen::Index>();
    const auto m = field(j, "count").get<Eigen::Index>();
    const json& data = field(j, "data");
    if (n < 0 || m < 0 || data.size() != static_cast<std::size_t>(n * m))
        throw std::invalid_argument("family data length differs from ambient_dim * count");
    Matrix cols(n, m);
    std::size_t k = 0;
    for (Eigen::Index c = 0; c < m; ++c)
        for (Eigen::Index r = 0; r < n; ++r, ++k) {
            const json& z = data[k];
            if (z.is_number()) cols(r, c) = z.get<double>();
            else if (z.is_array() && z.size() == 2) cols(r, c) = cplx(z[0].get<double>(), z[1].get<double>());
            else throw std::invalid_argument("family entries must be numbers or [re, im] pairs");
        }
    return VectorFamily(std::move(cols));
}

json to_json(const LocatedFamily& F) { return json{{"vectors", to_json(F.vectors)}, {"index", to_json(F.index)}}; }

LocatedFamily located_family_from_json(const json& j) {
    LocatedFamily F{vector_family_from_json(field(j, "vectors")), indexed_set_from_json(field(j, "index"))};
    F.validate();
    return F;
}

json to_json(const Envelope& r) {
    json entries = json::array();
    for (const auto& [k, v] : r.values) entries.push_back(json{{"offset", to_json(k)}, {"value", v}});
    return json{{"group", to_json(r.spec)}, {"p", r.p}, {"entries", entries}};
}

json to_json(const FamilyFile& f) {
    json out{{"format", "framelab.family"}, {"version", 1}, {"frame", to_json(f.frame)}};
    out["reference"] = f.reference ? to_json(*f.reference) : json(nullptr);
    return out;
}

FamilyFile family_file_from_json(const json& j) {
    FamilyFile f;
    f.frame = located_family_from_json(field(j, "frame"));
    if (j.contains("reference") && !j.at("reference").is_null()) {
        f.reference = located_family_from_json(j.at("reference"));
        if (f.reference->vectors.ambient_dim() != f.frame.vectors.ambient_dim())
            throw std::invalid_argument("frame and reference live in different dimensions");
    }
    return f;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

FamilyFile read_family_file(const std::filesystem::path& path) { return family_file_from_json(read_json(path)); }

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::logic_error("csv row width differs from the header");
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) text_ += ',';
        text_ += cells[k];
    }
    text_ += '\n';
}

void CsvWriter::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text_;
}

}  // namespace framelab
