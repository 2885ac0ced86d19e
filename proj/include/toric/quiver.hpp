#ifndef toric_quiver_hpp
#define toric_quiver_hpp

/// Simple undirected graphs on vertices 1..n and their acyclic orientations
/// ("quivers").  Arcs are stored sorted and deduplicated so quivers compare
/// and hash by value; at most one arc per unordered vertex pair.

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Arc = std::pair<int, int>;  // directed (from, to)
using Edge = std::pair<int, int>; // undirected, stored with first < second
using LinearExtension = std::vector<int>;

class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int a, int b) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    bool is_connected() const;
    /// Connected component id per vertex (index v-1), ids are 0-based and
    /// assigned in order of smallest contained vertex.
    std::vector<int> component_ids() const;
    int component_count() const;
    /// Vertices whose removal increases the component count.
    std::vector<int> cut_vertices() const;
    /// Single-source shortest path lengths in edge counts (-1 unreachable).
    std::vector<int> bfs_distances(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(int a, int b) const;
    bool adjacent(int a, int b) const;
    Graph underlying_graph() const;

    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;

    bool operator==(const Quiver& other) const = default;
    bool operator<(const Quiver& other) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

bool is_acyclic(const Quiver& q);

/// Vertices with no incoming arcs.  Isolated vertices are both sources and
/// sinks.
std::vector<int> sources(const Quiver& q);
std::vector<int> sinks(const Quiver& q);

/// Reverses every arc at v.  v must be a source or a sink (flipping an
/// isolated vertex is a legal no-op); anything else is an input error.
Quiver flip(const Quiver& q, int v);

/// All linear extensions, in lexicographic order (generated by repeatedly
/// removing the smallest available source).  Factorial-sized output; intended
/// for desk-scale inputs.
std::vector<LinearExtension> linear_extensions(const Quiver& q);

/// Linear extensions of the quiver restricted to all vertices except
/// `omitted`, as words over the surviving labels.
std::vector<LinearExtension> linear_extensions_excluding(const Quiver& q, int omitted);

/// Reachability matrix of the induced partial order: leq[a][b] iff a == b or
/// a has a directed path to b.  Indices are 1-based; row/column 0 unused.
std::vector<std::vector<bool>> induced_poset_leq(const Quiver& q);

/// Hasse diagram of the induced poset: drops every arc implied by a longer
/// directed path.  Requires an acyclic input.
Quiver transitive_reduction(const Quiver& q);

/// True when `w` is a permutation of 1..n compatible with every arc.
bool is_linear_extension(const Quiver& q, const LinearExtension& w);

} // namespace toric

#endif
