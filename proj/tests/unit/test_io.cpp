/// @file test_io.cpp
/// @brief JSON document parsing, serialization, and the round-trip identity.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/fixtures.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

const std::filesystem::path kFixtureDir = TORIC_FIXTURE_DIR;

} // namespace

TEST_CASE("parse a minimal document") {
    const QuiverDocument doc = parse_document(R"({"n": 3, "arcs": [[1, 2], [2, 3]]})");
    CHECK(doc.quiver == Quiver(3, {{1, 2}, {2, 3}}));
    CHECK(doc.labels.empty());
    CHECK_FALSE(doc.rotation.has_value());
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_document("not json"), input_error);
    CHECK_THROWS_AS(parse_document("{}"), input_error);
    CHECK_THROWS_AS(parse_document(R"({"n": 2})"), input_error);
    CHECK_THROWS_AS(parse_document(R"({"n": 2, "arcs": [[1, 2], [2, 1]]})"), input_error);
    CHECK_THROWS_AS(parse_document(R"({"n": 3, "arcs": [[1, 2], [2, 3], [3, 1]]})"),
                    input_error); // directed cycle
    CHECK_THROWS_AS(parse_document(R"({"n": 2, "arcs": [[1, 2]], "labels": ["a"]})"),
                    input_error); // wrong label count
    CHECK_THROWS_AS(parse_document(R"({"n": 2, "arcs": [[1, 2]], "outer": [1, 2]})"),
                    input_error); // outer without rotation
    CHECK_THROWS_AS(parse_document(R"({"n": 2, "arcs": [[1, 2]], "rotation": [[2]]})"),
                    input_error); // wrong rotation size
}

TEST_CASE("serialize then parse is the identity") {
    QuiverDocument doc;
    doc.quiver = fixtures::planar_poset();
    doc.labels = {"a", "b", "c", "d", "e", "f"};
    doc.rotation = fixtures::planar_poset_rotation();
    doc.outer = fixtures::planar_poset_outer();
    doc.regions = fixtures::planar_poset_regions();

    const QuiverDocument round = parse_document(serialize_document(doc));
    CHECK(round == doc);

    // Twice more through the loop stays fixed byte for byte.
    CHECK(serialize_document(round) == serialize_document(doc));
}

TEST_CASE("every shipped fixture file parses and round-trips") {
    size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtureDir)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        CAPTURE(entry.path().filename().string());
        std::ifstream in(entry.path());
        std::stringstream buffer;
        buffer << in.rdbuf();
        const QuiverDocument doc = parse_document(buffer.str());
        CHECK(doc.quiver.vertex_count() >= 1);
        CHECK(parse_document(serialize_document(doc)) == doc);
    }
    CHECK(seen >= 14); // the shipped corpus
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
    CHECK(load_document((kFixtureDir / "diamond.json").string()).quiver == fixtures::diamond());
    CHECK(load_document((kFixtureDir / "branching_quiver.json").string()).quiver ==
          fixtures::branching_quiver());
    CHECK(load_document((kFixtureDir / "bowtie.json").string()).quiver == fixtures::bowtie());

    const QuiverDocument planar = load_document((kFixtureDir / "planar_poset.json").string());
    CHECK(planar.quiver == fixtures::planar_poset());
    CHECK(planar.rotation == fixtures::planar_poset_rotation());
    CHECK(planar.outer == fixtures::planar_poset_outer());
    CHECK(planar.regions == fixtures::planar_poset_regions());
}

TEST_CASE("load_document reports missing files as input errors") {
    CHECK_THROWS_AS(load_document((kFixtureDir / "no_such_file.json").string()), input_error);
}
