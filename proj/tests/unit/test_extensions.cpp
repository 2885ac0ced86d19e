/// @file test_extensions.cpp
/// @brief Toric total extensions: canonical rotations, the three enumeration
/// routes, the recursion's split order, and the bounded reading bijection.

#include <set>
#include <vector>

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/extensions.hpp"
#include "toric/fixtures.hpp"
#include "toric/greene.hpp"

using namespace toric;

namespace {

std::set<ToricTotalOrder> as_set(const std::vector<ToricTotalOrder>& words) {
    return {words.begin(), words.end()};
}

} // namespace

TEST_CASE("cyclic canonicalization rotates the smallest label to the front") {
    CHECK(cyclic_canonical({3, 1, 2}).word == std::vector<int>{1, 2, 3});
    CHECK(cyclic_canonical({1, 2, 3}).word == std::vector<int>{1, 2, 3});
    CHECK(cyclic_canonical({4, 3, 2, 1}).word == std::vector<int>{1, 4, 3, 2});
    CHECK(cyclic_canonical({2, 4, 1, 3}).to_string() == "(1,3,2,4)");
    CHECK_THROWS_AS(cyclic_canonical({1, 2, 2}), input_error);
    CHECK_THROWS_AS(cyclic_canonical({2, 3}), input_error);
    CHECK_THROWS_AS(cyclic_canonical({}), input_error);
}

TEST_CASE("tournament of a toric total order") {
    const Quiver t = tournament_of_order(cyclic_canonical({1, 3, 2}));
    CHECK(t == Quiver(3, {{1, 3}, {3, 2}, {1, 2}}));
    CHECK(is_linear_extension(t, {1, 3, 2}));
}

TEST_CASE("diamond: all three routes give the four golden classes") {
    const auto expected = as_set(fixtures::diamond_toric_extensions());
    CHECK(expected.size() == 4);
    CHECK(ltor_bruteforce(fixtures::diamond()) == expected);
    CHECK(ltor_recursive(fixtures::diamond()) == expected);
    for (int v = 1; v <= 4; ++v) {
        CAPTURE(v);
        CHECK(ltor_partition(fixtures::diamond(), v) == expected);
    }
}

TEST_CASE("recursion splits the diamond at (2,3) before (1,4)") {
    RecursionOptions options;
    options.record_splits = true;
    RecursionTrace trace;
    ltor_recursive(fixtures::diamond(), options, &trace);
    REQUIRE(trace.split_pairs.size() >= 2);
    CHECK(trace.split_pairs[0] == std::pair<int, int>{2, 3});
    CHECK(trace.split_pairs[1] == std::pair<int, int>{1, 4});
    CHECK(trace.nodes > 0);
}

TEST_CASE("five-vertex branching example: the three blocks and the union") {
    CHECK(ltor(fixtures::branching_quiver_up(), ExtensionMethod::BruteForce) ==
          as_set(fixtures::branching_up_extensions()));
    CHECK(ltor(fixtures::branching_quiver_down(), ExtensionMethod::Partition) ==
          as_set(fixtures::branching_down_extensions()));
    CHECK(ltor(fixtures::chain_fan(), ExtensionMethod::Recursive) ==
          as_set(fixtures::chain_fan_extensions()));
    CHECK(count_ltor(fixtures::branching_quiver()) == 16);
}

TEST_CASE("dense six-vertex example matches its fourteen classes") {
    CHECK(ltor(fixtures::dense_six(), ExtensionMethod::Recursive) ==
          as_set(fixtures::dense_six_extensions()));
    CHECK(ltor(fixtures::dense_six(), ExtensionMethod::BruteForce) ==
          as_set(fixtures::dense_six_extensions()));
}

TEST_CASE("singleton and tiny classes") {
    CHECK(count_ltor(Quiver(1, {})) == 1);
    CHECK(count_ltor(Quiver(2, {{1, 2}})) == 1);
    // Empty graph on 3 vertices: every cyclic class of S_3 appears.
    CHECK(count_ltor(Quiver(3, {})) == 2);
    const Quiver k3(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(ltor(k3, ExtensionMethod::Recursive) ==
          std::set<ToricTotalOrder>{cyclic_canonical({1, 2, 3})});
}

TEST_CASE("methods accept the resource cap") {
    CHECK_THROWS_AS(ltor_bruteforce(fixtures::diamond(), 2), resource_limit_error);
    RecursionOptions tight;
    tight.node_cap = 1;
    CHECK_THROWS_AS(ltor_recursive(fixtures::branching_quiver(), tight), resource_limit_error);
}

TEST_CASE("add_arc validates") {
    const Quiver d = fixtures::diamond();
    CHECK(add_arc(d, 2, 3) == Quiver(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}}));
    CHECK_THROWS_AS(add_arc(d, 1, 2), input_error);  // already adjacent
    CHECK_THROWS_AS(add_arc(fixtures::chain(3), 3, 1), input_error); // directed cycle
}

TEST_CASE("bounded reading bijection on the double chains") {
    for (int k = 0; k <= 2; ++k) {
        for (int j = 0; j <= 2; ++j) {
            CAPTURE(k);
            CAPTURE(j);
            const DoubleChainLabels labels = double_chain_labels(k, j);
            Quiver closed = double_chain_quiver(k, j);
            // The open Hasse diagram drops the bottom -> top chord (it is a
            // cover only when both chains are empty).
            std::vector<Arc> arcs;
            for (const Arc& a : closed.arcs()) {
                if (k + j > 0 && a == Arc{labels.bottom, labels.top}) continue;
                arcs.push_back(a);
            }
            const Quiver open(closed.vertex_count(), arcs);
            const BoundedBijection bij = bounded_bijection(open, labels.bottom, labels.top);
            CHECK(bij.closed_quiver == closed);
            CHECK(bij.pairs.size() == linear_extensions(open).size());
            CHECK(bij.pairs.size() == count_ltor(closed));
        }
    }
}

TEST_CASE("bounded bijection rejects unbounded posets") {
    CHECK_THROWS_AS(bounded_bijection(fixtures::diamond(), 2, 4), input_error); // 2 not unique source
    CHECK_THROWS_AS(bounded_bijection(Quiver(3, {{1, 2}}), 1, 2), input_error); // 3 not between
}
