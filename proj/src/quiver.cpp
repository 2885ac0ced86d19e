#include "toric/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace toric {

namespace {

void check_vertex(int n, int v, const char* what) {
    if (v < 1 || v > n) {
        throw input_error(std::string(what) + ": vertex label out of range 1..n");
    }
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw input_error("graph needs at least one vertex");
    for (auto& e : edges_) {
        check_vertex(n_, e.first, "graph edge");
        check_vertex(n_, e.second, "graph edge");
        if (e.first == e.second) throw input_error("graph edge: loops not allowed");
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw input_error("graph edge: duplicate edge");
    }
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(n_, v, "neighbors");
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> Graph::component_ids() const {
    std::vector<int> id(n_ + 1, -1);
    int next = 0;
    for (int start = 1; start <= n_; ++start) {
        if (id[start] != -1) continue;
        std::queue<int> bfs;
        bfs.push(start);
        id[start] = next;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : neighbors(v)) {
                if (id[w] == -1) {
                    id[w] = next;
                    bfs.push(w);
                }
            }
        }
        ++next;
    }
    return std::vector<int>(id.begin() + 1, id.end());
}

int Graph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::vector<int> Graph::cut_vertices() const {
    // Desk-scale graphs: test each vertex by removal and recount.
    std::vector<int> out;
    int base = component_count();
    for (int v = 1; v <= n_; ++v) {
        std::vector<Edge> kept;
        for (const auto& e : edges_) {
            if (e.first != v && e.second != v) kept.push_back(e);
        }
        // Count components among the surviving vertices only.
        std::vector<int> id(n_ + 1, -1);
        int comps = 0;
        for (int start = 1; start <= n_; ++start) {
            if (start == v || id[start] != -1) continue;
            ++comps;
            std::queue<int> bfs;
            bfs.push(start);
            id[start] = comps;
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (const auto& [a, b] : kept) {
                    int w = (a == u) ? b : (b == u ? a : 0);
                    if (w != 0 && id[w] == -1) {
                        id[w] = comps;
                        bfs.push(w);
                    }
                }
            }
        }
        // Removing an isolated vertex drops the count by one; anything that
        // leaves more components than before (ignoring the removed vertex's
        // own component when isolated) is a cut vertex.
        bool isolated = degree(v) == 0;
        int expected = isolated ? base - 1 : base;
        if (comps > expected) out.push_back(v);
    }
    return out;
}

std::vector<int> Graph::bfs_distances(int v) const {
    check_vertex(n_, v, "bfs_distances");
    std::vector<int> dist(n_ + 1, -1);
    std::queue<int> bfs;
    dist[v] = 0;
    bfs.push(v);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                bfs.push(w);
            }
        }
    }
    return dist;
}

Quiver::Quiver(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 1) throw input_error("quiver needs at least one vertex");
    std::set<Edge> seen;
    for (const auto& [a, b] : arcs_) {
        check_vertex(n_, a, "quiver arc");
        check_vertex(n_, b, "quiver arc");
        if (a == b) throw input_error("quiver arc: loops not allowed");
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw input_error("quiver arc: at most one arc per vertex pair");
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
}

bool Quiver::has_arc(int a, int b) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{a, b});
}

bool Quiver::adjacent(int a, int b) const { return has_arc(a, b) || has_arc(b, a); }

Graph Quiver::underlying_graph() const {
    std::vector<Edge> edges;
    edges.reserve(arcs_.size());
    for (const auto& [a, b] : arcs_) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(n_, std::move(edges));
}

std::vector<int> Quiver::out_neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : arcs_) {
        if (a == v) out.push_back(b);
    }
    return out;
}

std::vector<int> Quiver::in_neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : arcs_) {
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Quiver::operator<(const Quiver& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return arcs_ < other.arcs_;
}

bool is_acyclic(const Quiver& q) {
    // Kahn peeling: the quiver is acyclic iff every vertex gets removed.
    int n = q.vertex_count();
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [a, b] : q.arcs()) ++indeg[b];
    std::queue<int> ready;
    for (int v = 1; v <= n; ++v) {
        if (indeg[v] == 0) ready.push(v);
    }
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++removed;
        for (const auto& [a, b] : q.arcs()) {
            if (a == v && --indeg[b] == 0) ready.push(b);
        }
    }
    return removed == n;
}

std::vector<int> sources(const Quiver& q) {
    int n = q.vertex_count();
    std::vector<bool> has_in(n + 1, false);
    for (const auto& [a, b] : q.arcs()) has_in[b] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!has_in[v]) out.push_back(v);
    }
    return out;
}

std::vector<int> sinks(const Quiver& q) {
    int n = q.vertex_count();
    std::vector<bool> has_out(n + 1, false);
    for (const auto& [a, b] : q.arcs()) has_out[a] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!has_out[v]) out.push_back(v);
    }
    return out;
}

Quiver flip(const Quiver& q, int v) {
    check_vertex(q.vertex_count(), v, "flip");
    bool has_in = false, has_out = false;
    for (const auto& [a, b] : q.arcs()) {
        if (b == v) has_in = true;
        if (a == v) has_out = true;
    }
    if (has_in && has_out) {
        throw input_error("flip: vertex is neither a source nor a sink");
    }
    std::vector<Arc> arcs;
    arcs.reserve(q.arcs().size());
    for (const auto& [a, b] : q.arcs()) {
        if (a == v || b == v) {
            arcs.emplace_back(b, a);
        } else {
            arcs.emplace_back(a, b);
        }
    }
    return Quiver(q.vertex_count(), std::move(arcs));
}

namespace {

void extend_recursive(const std::vector<std::vector<int>>& out_adj, std::vector<int>& indeg,
                      std::vector<bool>& used, LinearExtension& prefix, size_t targets,
                      std::vector<LinearExtension>& out) {
    if (prefix.size() == targets) {
        out.push_back(prefix);
        return;
    }
    int n = static_cast<int>(out_adj.size()) - 1;
    for (int v = 1; v <= n; ++v) {
        if (used[v] || indeg[v] != 0) continue;
        used[v] = true;
        prefix.push_back(v);
        for (int w : out_adj[v]) --indeg[w];
        extend_recursive(out_adj, indeg, used, prefix, targets, out);
        for (int w : out_adj[v]) ++indeg[w];
        prefix.pop_back();
        used[v] = false;
    }
}

std::vector<std::vector<int>> out_adjacency(const Quiver& q, int omitted = 0) {
    std::vector<std::vector<int>> adj(q.vertex_count() + 1);
    for (const auto& [a, b] : q.arcs()) {
        if (a != omitted && b != omitted) adj[a].push_back(b);
    }
    return adj;
}

} // namespace

std::vector<LinearExtension> linear_extensions(const Quiver& q) {
    if (!is_acyclic(q)) throw input_error("linear_extensions: quiver has a directed cycle");
    int n = q.vertex_count();
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [a, b] : q.arcs()) ++indeg[b];
    std::vector<bool> used(n + 1, false);
    LinearExtension prefix;
    std::vector<LinearExtension> out;
    extend_recursive(out_adjacency(q), indeg, used, prefix, static_cast<size_t>(n), out);
    return out;
}

std::vector<LinearExtension> linear_extensions_excluding(const Quiver& q, int omitted) {
    check_vertex(q.vertex_count(), omitted, "linear_extensions_excluding");
    int n = q.vertex_count();
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [a, b] : q.arcs()) {
        if (a != omitted && b != omitted) ++indeg[b];
    }
    // Restrict to the surviving vertices by pre-marking `omitted` as used.
    std::vector<bool> used(n + 1, false);
    used[omitted] = true;
    LinearExtension prefix;
    std::vector<LinearExtension> out;
    extend_recursive(out_adjacency(q, omitted), indeg, used, prefix,
                     static_cast<size_t>(n - 1), out);
    return out;
}

std::vector<std::vector<bool>> induced_poset_leq(const Quiver& q) {
    if (!is_acyclic(q)) throw input_error("induced_poset_leq: quiver has a directed cycle");
    int n = q.vertex_count();
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (int v = 1; v <= n; ++v) leq[v][v] = true;
    for (const auto& [a, b] : q.arcs()) leq[a][b] = true;
    // Floyd-Warshall style closure; n is small throughout.
    for (int k = 1; k <= n; ++k) {
        for (int a = 1; a <= n; ++a) {
            if (!leq[a][k]) continue;
            for (int b = 1; b <= n; ++b) {
                if (leq[k][b]) leq[a][b] = true;
            }
        }
    }
    return leq;
}

Quiver transitive_reduction(const Quiver& q) {
    const std::vector<std::vector<bool>> leq = induced_poset_leq(q);
    const int n = q.vertex_count();
    std::vector<Arc> covers;
    for (const auto& [a, b] : q.arcs()) {
        bool implied = false;
        for (int z = 1; z <= n && !implied; ++z) {
            implied = z != a && z != b && leq[a][z] && leq[z][b];
        }
        if (!implied) covers.emplace_back(a, b);
    }
    return Quiver(n, std::move(covers));
}

bool is_linear_extension(const Quiver& q, const LinearExtension& w) {
    int n = q.vertex_count();
    if (static_cast<int>(w.size()) != n) return false;
    std::vector<int> pos(n + 1, -1);
    for (int k = 0; k < n; ++k) {
        if (w[k] < 1 || w[k] > n || pos[w[k]] != -1) return false;
        pos[w[k]] = k;
    }
    for (const auto& [a, b] : q.arcs()) {
        if (pos[a] > pos[b]) return false;
    }
    return true;
}

} // namespace toric
