#ifndef toric_generators_hpp
#define toric_generators_hpp

/// Deterministic instance generators backing the verification suites:
/// exhaustive graph/orientation enumeration at desk scale and seeded random
/// quivers, bounded Hasse diagrams, stacked planar posets, and rational
/// functions.

#include <random>
#include <vector>

#include "toric/quiver.hpp"
#include "toric/ratfun.hpp"

namespace toric {

/// Every simple graph on vertices 1..n (2^binomial(n,2) of them); desk scale.
std::vector<Graph> all_graphs(int n);

/// Every acyclic orientation of g, in deterministic order.
std::vector<Quiver> all_acyclic_orientations(const Graph& g);

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Resamples until connected; edge probability rises after repeated misses.
Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Orients g along a uniformly random vertex order.
Quiver random_acyclic_orientation(const Graph& g, std::mt19937_64& rng);

struct BoundedHasse {
    Quiver hasse;
    int zero = 0;
    int one = 0;
};

/// Random bounded Hasse diagram: a random poset on `inner` vertices reduced
/// to covers, with a fresh global bottom and top adjoined (labels inner+1 and
/// inner+2).
BoundedHasse random_bounded_hasse(int inner, double edge_probability, std::mt19937_64& rng);

/// Random strongly planar bounded poset: a stack of blocks, each either a
/// covering edge or a diamond of two parallel chains; at least one diamond.
/// The result is its own Hasse diagram and has one region per diamond.
Quiver random_stacked_planar(int blocks, std::mt19937_64& rng);

/// Small random rational function: a few-term numerator over a random
/// multiset of linear-difference factors.
RationalFunction random_rational_function(int nvars, std::mt19937_64& rng);

} // namespace toric

#endif
