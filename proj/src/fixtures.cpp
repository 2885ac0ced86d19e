#include "toric/fixtures.hpp"

#include <initializer_list>

#include "toric/errors.hpp"
#include "toric/polynomial.hpp"

namespace toric::fixtures {

namespace {

std::vector<ToricTotalOrder> orders(std::initializer_list<std::vector<int>> words) {
    std::vector<ToricTotalOrder> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(cyclic_canonical(w));
    return out;
}

} // namespace

Quiver chain(int n) {
    if (n < 1) throw input_error("chain: need at least one vertex");
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.emplace_back(i, i + 1);
    return Quiver(n, std::move(arcs));
}

Quiver diamond() {
    return Quiver(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

std::vector<ToricTotalOrder> diamond_toric_extensions() {
    return orders({{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}, {1, 4, 3, 2}});
}

RationalFunction diamond_psi_tor() {
    return RationalFunction(SparsePolynomial::constant(4, -2),
                            {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

Quiver disconnected_poset() {
    return Quiver(7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {5, 6}, {5, 7}});
}

Quiver planar_poset() {
    return Quiver(6, {{2, 3}, {2, 4}, {1, 4}, {1, 5}, {4, 6}, {5, 6}});
}

RationalFunction planar_poset_psi() {
    return RationalFunction(SparsePolynomial::linear_difference(6, 1, 6),
                            {{2, 3}, {2, 4}, {1, 4}, {1, 5}, {4, 6}, {5, 6}});
}

RotationSystem planar_poset_rotation() {
    // Planar drawing: 7 at the bottom, then 2 and 1, the rank 3-4-5, 6, and 8
    // on top; the edge {3,8} swings around the left.  Counterclockwise lists.
    return RotationSystem{{
        {5, 4, 7},    // 1
        {4, 3, 7},    // 2
        {8, 2},       // 3
        {6, 2, 1},    // 4
        {6, 1},       // 5
        {8, 4, 5},    // 6
        {1, 2},       // 7 (adjoined bottom)
        {3, 6},       // 8 (adjoined top)
    }};
}

Arc planar_poset_outer() { return {7, 2}; }

std::vector<BoundedRegion> planar_poset_regions() {
    return {BoundedRegion{{1, 4, 6, 5}, 1, 6}};
}

RationalFunction planar_poset_bounded_psi_tor() {
    const int n = 8;
    SparsePolynomial numerator = SparsePolynomial::linear_difference(n, 2, 8);
    numerator = poly_mul(numerator, SparsePolynomial::linear_difference(n, 1, 6));
    numerator = poly_mul(numerator, SparsePolynomial::linear_difference(n, 7, 4));
    return RationalFunction(std::move(numerator),
                            {{8, 7},
                             {7, 2},
                             {7, 1},
                             {2, 3},
                             {2, 4},
                             {1, 4},
                             {1, 5},
                             {4, 6},
                             {5, 6},
                             {3, 8},
                             {6, 8}});
}

Quiver branching_quiver() {
    return Quiver(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {1, 4}});
}

Quiver branching_quiver_up() {
    return Quiver(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {1, 4}, {4, 5}});
}

Quiver branching_quiver_down() {
    return Quiver(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {1, 4}, {5, 4}});
}

Quiver chain_fan() {
    return Quiver(5, {{1, 4}, {4, 5}, {5, 2}, {5, 3}, {1, 2}, {1, 3}});
}

std::vector<ToricTotalOrder> branching_up_extensions() {
    return orders({{1, 2, 3, 4, 5},
                   {1, 2, 4, 3, 5},
                   {1, 3, 2, 4, 5},
                   {1, 3, 4, 2, 5},
                   {1, 4, 2, 3, 5},
                   {1, 4, 3, 2, 5},
                   {1, 5, 2, 3, 4},
                   {1, 5, 2, 4, 3},
                   {1, 5, 3, 2, 4},
                   {1, 5, 3, 4, 2},
                   {1, 5, 4, 2, 3},
                   {1, 5, 4, 3, 2}});
}

std::vector<ToricTotalOrder> branching_down_extensions() {
    return orders({{1, 2, 3, 5, 4}, {1, 3, 2, 5, 4}});
}

std::vector<ToricTotalOrder> chain_fan_extensions() {
    return orders({{1, 4, 5, 2, 3}, {1, 4, 5, 3, 2}});
}

Quiver reduction_triple_hasse() {
    return Quiver(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {1, 5}});
}

Quiver reduction_triple_mid() {
    return Quiver(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {1, 5}, {2, 5}});
}

Quiver reduction_triple_closure() {
    return Quiver(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {1, 5}, {2, 5}, {1, 4}});
}

Quiver contraction_example() {
    return Quiver(6, {{1, 2}, {2, 3}, {2, 4}, {4, 6}, {3, 5}, {5, 6}, {1, 3}});
}

Quiver contraction_example_image() {
    // Vertices 1, 2, 3 collapse into the star (new label 1); survivors keep
    // ascending order: 4 -> 2, 5 -> 3, 6 -> 4.
    return Quiver(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

Quiver cut_vertex_poset() {
    return Quiver(7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

Quiver vanishing_without_cut_vertex() {
    return Quiver(5, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
}

Quiver bowtie() {
    return Quiver(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}});
}

RotationSystem bowtie_rotation() {
    // Square 1-3-2-4 with the adjoined bottom 5 inside the lower face and the
    // adjoined top 6 above, its edge to 4 swinging around the right.
    return RotationSystem{{
        {3, 4, 5}, // 1
        {3, 5, 4}, // 2
        {6, 1, 2}, // 3
        {2, 1, 6}, // 4
        {2, 1},    // 5 (adjoined bottom)
        {3, 4},    // 6 (adjoined top)
    }};
}

Arc bowtie_outer() { return {1, 3}; }

Quiver dense_six() {
    return Quiver(6, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 3}, {5, 4}, {5, 6}, {1, 3}, {1, 6}});
}

std::vector<ToricTotalOrder> dense_six_extensions() {
    return orders({{1, 2, 4, 5, 3, 6},
                   {1, 2, 4, 5, 6, 3},
                   {1, 2, 5, 3, 4, 6},
                   {1, 2, 5, 3, 6, 4},
                   {1, 2, 5, 6, 3, 4},
                   {1, 4, 2, 5, 3, 6},
                   {1, 4, 2, 5, 6, 3},
                   {1, 4, 5, 2, 3, 6},
                   {1, 4, 5, 2, 6, 3},
                   {1, 4, 5, 6, 2, 3},
                   {1, 5, 2, 3, 4, 6},
                   {1, 5, 2, 3, 6, 4},
                   {1, 5, 2, 6, 3, 4},
                   {1, 5, 6, 2, 3, 4}});
}

RationalFunction dense_six_psi_tor() {
    return RationalFunction(SparsePolynomial::constant(6, 1),
                            {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {5, 6}});
}

} // namespace toric::fixtures
