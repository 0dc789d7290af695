#include "framelab/constructions.hpp"
#include "framelab/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

using namespace framelab;

TEST_CASE("group specs round trip, rational scales as strings") {
    const GroupSpec s{{Rational(1), Rational(3, 2)}, {4}};
    const json j = to_json(s);
    CHECK(j["scales"][0] == 1);
    CHECK(j["scales"][1] == "3/2");
    CHECK(group_spec_from_json(j) == s);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"scales": ["1/0"], "torsion": []})")), std::invalid_argument);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"scales": [1.5], "torsion": []})")), std::invalid_argument);
    CHECK_THROWS_AS(group_spec_from_json(json::parse(R"({"torsion": []})")), std::invalid_argument);
}

TEST_CASE("elements and windows") {
    const GroupSpec s{{Rational(1)}, {3}};
    const GroupElement g(s, {-4}, {2});
    CHECK(to_json(g) == json::array({-4, 2}));
    CHECK(element_from_json(s, to_json(g)) == g);
    CHECK_THROWS_AS(element_from_json(s, json::array({1})), std::invalid_argument);
    const Window w = Window::interval(-3, 9);
    CHECK(window_from_json(to_json(w)) == w);
    CHECK_THROWS_AS(window_from_json(json::parse(R"({"lo": [4], "hi": [1]})")), std::invalid_argument);
}

TEST_CASE("families round trip bit for bit") {
    SyntheticOptions opt;
    opt.window = 12;
    opt.jitter = 0.3;
    const SyntheticModel m = synthetic_localized_frame(opt);
    const FamilyFile f{m.frame, m.reference};
    const json j = to_json(f);
    CHECK(j["format"] == "framelab.family");
    const FamilyFile back = family_file_from_json(json::parse(j.dump()));
    CHECK(back.frame.vectors.columns == m.frame.vectors.columns);
    CHECK(back.frame.index.locations == m.frame.index.locations);
    CHECK(back.frame.index.support == m.frame.index.support);
    REQUIRE(back.reference.has_value());
    CHECK(back.reference->vectors.columns == m.reference.vectors.columns);
    CHECK(to_json(back).dump() == j.dump());

    const LocatedFamily G = finite_gabor(GaborSpec{6, 2, 3, gaussian_window(6)});
    const LocatedFamily g2 = located_family_from_json(to_json(G));
    CHECK(g2.vectors.columns == G.vectors.columns);
    CHECK(g2.index.spec == G.index.spec);
    CHECK_FALSE(g2.index.support.has_value());
}

TEST_CASE("real entries are accepted and bad data rejected") {
    const json j = json::parse(R"({"ambient_dim": 2, "count": 1, "data": [1.5, [0, 2]]})");
    const VectorFamily F = vector_family_from_json(j);
    CHECK(F.columns(0, 0) == cplx(1.5));
    CHECK(F.columns(1, 0) == cplx(0, 2));
    CHECK_THROWS_AS(vector_family_from_json(json::parse(R"({"ambient_dim": 2, "count": 2, "data": [1]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(vector_family_from_json(json::parse(R"({"ambient_dim": 1, "count": 1, "data": ["x"]})")),
                    std::invalid_argument);
    json fam = to_json(LocatedFamily{VectorFamily(Matrix::Identity(2, 2)), IndexedSet::line(0, 2)});
    CHECK_THROWS_AS(located_family_from_json(fam), std::invalid_argument);
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "framelab_serialize_test";
    std::filesystem::create_directories(dir);
    const LocatedFamily U{VectorFamily(random_unitary(3, 1)), IndexedSet::line(0, 2)};
    write_json(dir / "f.json", to_json(FamilyFile{U, std::nullopt}));
    const FamilyFile f = read_family_file(dir / "f.json");
    CHECK(f.frame.vectors.columns == U.vectors.columns);
    CHECK_FALSE(f.reference.has_value());
    {
        std::ofstream out(dir / "bad.json");
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_json(dir / "bad.json"), std::invalid_argument);
    CHECK_THROWS_AS(read_json(dir / "missing.json"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("number format keeps 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-300) == "-2.5e-300");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double x : {1.0 / 3.0, std::sqrt(2.0), 6.02214076e23, -1e-17})
        CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("csv writer") {
    CsvWriter w({"N", "value"});
    w.row({"1", format_double(0.5)});
    CHECK(w.str() == "N,value\n1,0.5\n");
    CHECK_THROWS_AS(w.row({"1"}), std::logic_error);
}

TEST_CASE("envelopes serialize with offsets") {
    Envelope r = Envelope::delta(GroupSpec::integers(1), 0.25);
    const json j = to_json(r);
    CHECK(j["entries"].size() == 1);
    CHECK(j["entries"][0]["offset"] == json::array({0}));
    CHECK(j["entries"][0]["value"] == 0.25);
}
