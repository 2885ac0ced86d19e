/// @file test_planar.cpp
/// @brief Rotation systems, face tracing, bounded regions, and the strong
/// planarity check.

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/fixtures.hpp"
#include "toric/greene.hpp"
#include "toric/planar.hpp"

using namespace toric;

TEST_CASE("face tracing satisfies Euler's relation on the planar fixture") {
    const BoundedAugmentation aug = augment_with_bounds(fixtures::planar_poset());
    const Graph g = aug.quiver.underlying_graph();
    const FaceTrace trace = faces(g, fixtures::planar_poset_rotation());
    // Connected plane graph: V - E + F = 2.
    const int v = g.vertex_count();
    const int e = static_cast<int>(g.edges().size());
    CHECK(v - e + static_cast<int>(trace.walks.size()) == 2);
    // Every directed edge lies on exactly one face.
    CHECK(trace.face_of.size() == 2 * g.edges().size());
}

TEST_CASE("augmentation adjoins a global bottom and top") {
    const BoundedAugmentation aug = augment_with_bounds(fixtures::planar_poset());
    CHECK(aug.zero == 7);
    CHECK(aug.one == 8);
    CHECK(aug.quiver.vertex_count() == 8);
    const auto src = sources(aug.quiver);
    const auto snk = sinks(aug.quiver);
    CHECK(src == std::vector<int>{7});
    CHECK(snk == std::vector<int>{8});
}

TEST_CASE("bounded regions of the planar fixture") {
    const BoundedAugmentation aug = augment_with_bounds(fixtures::planar_poset());
    const FaceTrace trace =
        faces(aug.quiver.underlying_graph(), fixtures::planar_poset_rotation());
    const int outer_face = trace.face_of.at(fixtures::planar_poset_outer());
    const auto regions = bounded_regions(aug.quiver, fixtures::planar_poset_rotation(),
                                         outer_face);
    REQUIRE(regions.size() == 3);
    // Exactly one region is original (no augmented vertex on its boundary).
    int original = 0;
    for (const BoundedRegion& r : regions) {
        bool touches_bounds = false;
        for (int v : r.delta) touches_bounds = touches_bounds || v >= 7;
        if (!touches_bounds) {
            ++original;
            CHECK(r.min_v == 1);
            CHECK(r.max_v == 6);
        }
    }
    CHECK(original == 1);
}

TEST_CASE("strongly planar check accepts the planar fixture") {
    const StronglyPlanarReport report = strongly_planar_check(
        fixtures::planar_poset(), fixtures::planar_poset_rotation(),
        fixtures::planar_poset_outer());
    CHECK(report.pass);
    REQUIRE(report.regions.size() == 1);
    CHECK(report.regions.front().min_v == 1);
    CHECK(report.regions.front().max_v == 6);
}

TEST_CASE("strongly planar check rejects the bow-tie embedding") {
    const StronglyPlanarReport report = strongly_planar_check(
        fixtures::bowtie(), fixtures::bowtie_rotation(), fixtures::bowtie_outer());
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.reason.empty());
}

TEST_CASE("no embedding rescues the bow-tie") {
    CHECK_FALSE(find_strongly_planar_rotation(fixtures::bowtie()).has_value());
}

TEST_CASE("an embedding witness exists for the diamond") {
    const auto witness = find_strongly_planar_rotation(fixtures::diamond());
    REQUIRE(witness.has_value());
    const StronglyPlanarReport report =
        strongly_planar_check(fixtures::diamond(), witness->first, witness->second);
    CHECK(report.pass);
    REQUIRE(report.regions.size() == 1);
    // The diamond's own square is its only bounded region.
    CHECK(report.regions.front().min_v == 1);
    CHECK(report.regions.front().max_v == 4);
    const RationalFunction product =
        greene_strongly_planar(fixtures::diamond(), report.regions);
    CHECK(rf_equal(product, psi_poset(fixtures::diamond())));
}

TEST_CASE("rotation systems validate against the graph") {
    const Graph g = fixtures::diamond().underlying_graph();
    RotationSystem bad{{{2, 3}, {1}, {1}, {2}}}; // vertex 4 misses neighbor 3
    CHECK_THROWS_AS(faces(g, bad), input_error);
}
