/// @file test_quiver.cpp
/// @brief Graphs, quivers, flips, and ordinary linear extensions.

#include <algorithm>
#include <set>

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/fixtures.hpp"
#include "toric/generators.hpp"
#include "toric/quiver.hpp"

using namespace toric;

TEST_CASE("graph construction validates and canonicalizes") {
    Graph g(4, {{3, 4}, {2, 1}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}}); // sorted endpoints, sorted list
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph(4, {{2, 1}, {3, 4}, {1, 2}}), input_error); // duplicate edge
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), input_error);
}

TEST_CASE("graph connectivity and cut vertices") {
    const Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(path.is_connected());
    CHECK(path.cut_vertices() == std::vector<int>{2, 3});

    const Graph two(5, {{1, 2}, {3, 4}});
    CHECK_FALSE(two.is_connected());
    CHECK(two.component_count() == 3); // {1,2}, {3,4}, {5}
    CHECK(two.component_ids() == std::vector<int>{0, 0, 1, 1, 2});

    CHECK(fixtures::cut_vertex_poset().underlying_graph().cut_vertices() ==
          std::vector<int>{4});
    CHECK(fixtures::vanishing_without_cut_vertex().underlying_graph().cut_vertices().empty());
}

TEST_CASE("quiver construction rejects anti-parallel arcs and cycles are detectable") {
    CHECK_THROWS_AS(Quiver(3, {{1, 2}, {2, 1}}), input_error);
    CHECK_THROWS_AS(Quiver(3, {{1, 2}, {1, 2}}), input_error); // repeated arc

    CHECK(is_acyclic(fixtures::diamond()));
    CHECK(is_acyclic(Quiver(1, {})));
    CHECK_FALSE(is_acyclic(Quiver(3, {{1, 2}, {2, 3}, {3, 1}})));
}

TEST_CASE("sources and sinks") {
    const Quiver d = fixtures::diamond();
    CHECK(sources(d) == std::vector<int>{1});
    CHECK(sinks(d) == std::vector<int>{4});

    const Quiver q45 = fixtures::branching_quiver();
    CHECK(sources(q45) == std::vector<int>{1});
    CHECK(sinks(q45) == std::vector<int>{4, 5});

    const Quiver empty(3, {});
    CHECK(sources(empty) == std::vector<int>{1, 2, 3});
    CHECK(sinks(empty) == std::vector<int>{1, 2, 3});
}

TEST_CASE("flip reverses all arcs at a source or sink and is an involution") {
    const Quiver d = fixtures::diamond();
    const Quiver flipped = flip(d, 4);
    CHECK(flipped == Quiver(4, {{1, 2}, {1, 3}, {4, 2}, {4, 3}}));
    CHECK(flip(flipped, 4) == d);
    CHECK_THROWS_AS(flip(d, 2), input_error); // neither source nor sink
    CHECK(flip(Quiver(3, {{1, 2}}), 3) == Quiver(3, {{1, 2}})); // isolated: no-op
}

TEST_CASE("every flip output is acyclic") {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 25; ++s) {
        const Quiver q = random_acyclic_orientation(random_graph(6, 0.5, rng), rng);
        for (int v : sources(q)) CHECK(is_acyclic(flip(q, v)));
        for (int v : sinks(q)) CHECK(is_acyclic(flip(q, v)));
    }
}

TEST_CASE("linear extensions: golden examples") {
    CHECK(linear_extensions(fixtures::diamond()) ==
          std::vector<LinearExtension>{{1, 2, 3, 4}, {1, 3, 2, 4}});
    CHECK(linear_extensions(fixtures::chain(3)) == std::vector<LinearExtension>{{1, 2, 3}});
    CHECK(linear_extensions(Quiver(3, {})).size() == 6);
    CHECK(linear_extensions(Quiver(1, {})) == std::vector<LinearExtension>{{1}});
}

TEST_CASE("linear extensions match the brute-force permutation filter") {
    std::mt19937_64 rng(11);
    for (int s = 0; s < 20; ++s) {
        const int n = 3 + static_cast<int>(rng() % 4); // 3..6
        const Quiver q = random_acyclic_orientation(random_graph(n, 0.5, rng), rng);

        std::vector<LinearExtension> expected;
        LinearExtension perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k + 1;
        do {
            if (is_linear_extension(q, perm)) expected.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        CHECK(linear_extensions(q) == expected); // both lexicographic
        CHECK_FALSE(expected.empty());
    }
}

TEST_CASE("linear extensions excluding a vertex") {
    const auto words = linear_extensions_excluding(fixtures::diamond(), 1);
    CHECK(words == std::vector<LinearExtension>{{2, 3, 4}, {3, 2, 4}});
    CHECK(linear_extensions_excluding(Quiver(1, {}), 1) ==
          std::vector<LinearExtension>{{}});
}

TEST_CASE("induced poset reachability") {
    const auto leq = induced_poset_leq(fixtures::diamond());
    CHECK(leq[1][4]);
    CHECK_FALSE(leq[2][3]);
    CHECK_FALSE(leq[3][2]);
    CHECK(leq[2][2]);
}

TEST_CASE("transitive reduction drops implied arcs") {
    const Quiver q(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(transitive_reduction(q) == Quiver(3, {{1, 2}, {2, 3}}));
    CHECK(transitive_reduction(fixtures::diamond()) == fixtures::diamond());
}
