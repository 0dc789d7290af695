#pragma once

// JSON round trips for groups, index sets and families, and the fixed CSV
// number format (17 significant digits).

#include "framelab/envelope.hpp"
#include "framelab/index_map.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace framelab {

using json = nlohmann::ordered_json;

/// Scales are written as integers when integral and as "p/q" strings otherwise.
json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);

/// Free coordinates followed by torsion residues.
json to_json(const GroupElement& g);
GroupElement element_from_json(const GroupSpec& spec, const json& j);

json to_json(const Window& w);
Window window_from_json(const json& j);

json to_json(const IndexedSet& I);
IndexedSet indexed_set_from_json(const json& j);

/// {ambient_dim, count, data}: data holds [re, im] pairs column by column.
json to_json(const VectorFamily& F);
VectorFamily vector_family_from_json(const json& j);

json to_json(const LocatedFamily& F);
LocatedFamily located_family_from_json(const json& j);

json to_json(const Envelope& r);

/// A family file: the frame and an optional reference family.
struct FamilyFile {
    LocatedFamily frame;
    std::optional<LocatedFamily> reference;
};

json to_json(const FamilyFile& f);
FamilyFile family_file_from_json(const json& j);

FamilyFile read_family_file(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);
json read_json(const std::filesystem::path& path);

/// %.17g; NaN and infinities are written as nan, inf, -inf.
std::string format_double(double x);

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    std::string str() const { return text_; }
    void save(const std::filesystem::path& path) const;

private:
    std::size_t width_;
    std::string text_;
};

}  // namespace framelab
