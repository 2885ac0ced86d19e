#include "toric/toric_poset.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>

namespace toric {

namespace {

int arc_sign(const Quiver& q, int from, int to) {
    if (q.has_arc(from, to)) return 1;
    if (q.has_arc(to, from)) return -1;
    throw input_error("walk step is not an edge of the quiver");
}

/// Parent array of the canonical BFS forest: BFS from the smallest
/// unvisited vertex, scanning neighbors in ascending order.
std::vector<int> canonical_forest_parents(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n + 1, 0); // 0 = root or unvisited
    std::vector<bool> seen(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    bfs.push(w);
                }
            }
        }
    }
    return parent;
}

std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
    std::vector<int> path{v};
    while (parent[v] != 0) {
        v = parent[v];
        path.push_back(v);
    }
    return path;
}

} // namespace

int flow_difference_on_cycle(const Quiver& q, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw input_error("cycle needs at least three vertices");
    int d = 0;
    for (size_t t = 0; t < cycle.size(); ++t) {
        d += arc_sign(q, cycle[t], cycle[(t + 1) % cycle.size()]);
    }
    return d;
}

FlowDifferenceVector compute_flow_difference_vector(const Quiver& q) {
    Graph g = q.underlying_graph();
    std::vector<int> parent = canonical_forest_parents(g);

    FlowDifferenceVector out;
    for (const auto& e : g.edges()) {
        if (parent[e.first] == e.second || parent[e.second] == e.first) {
            out.tree_edges.push_back(e);
        } else {
            out.cotree_edges.push_back(e);
        }
    }

    for (const auto& [a, b] : out.cotree_edges) {
        // Fundamental circuit: cross the non-tree edge from its smaller
        // endpoint a to b, then return along the tree path b -> a.
        int d = arc_sign(q, a, b);
        std::vector<int> pa = path_to_root(parent, a);
        std::vector<int> pb = path_to_root(parent, b);
        // Strip the shared suffix down to the meeting vertex.
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
            pa.pop_back();
            pb.pop_back();
        }
        // Walk b up to the meeting vertex, then down to a.
        for (size_t t = 0; t + 1 < pb.size(); ++t) d += arc_sign(q, pb[t], pb[t + 1]);
        for (size_t t = pa.size(); t-- > 1;) d += arc_sign(q, pa[t], pa[t - 1]);
        out.differences.push_back(d);
    }
    return out;
}

std::vector<Quiver> flip_class(const Quiver& q, size_t cap) {
    if (!is_acyclic(q)) throw input_error("flip_class: quiver has a directed cycle");
    std::set<Quiver> seen{q};
    std::deque<Quiver> frontier{q};
    while (!frontier.empty()) {
        Quiver current = std::move(frontier.front());
        frontier.pop_front();
        for (int v : sources(current)) {
            Quiver next = flip(current, v);
            if (seen.insert(next).second) frontier.push_back(next);
        }
        for (int v : sinks(current)) {
            Quiver next = flip(current, v);
            if (seen.insert(next).second) frontier.push_back(next);
        }
        if (seen.size() > cap) {
            std::ostringstream msg;
            msg << "flip_class: class exceeds cap of " << cap << " members";
            throw resource_limit_error(msg.str());
        }
    }
    return std::vector<Quiver>(seen.begin(), seen.end());
}

bool same_toric_poset(const Quiver& a, const Quiver& b) {
    if (a.underlying_graph() != b.underlying_graph()) {
        throw input_error("same_toric_poset: quivers orient different graphs");
    }
    if (!is_acyclic(a) || !is_acyclic(b)) {
        throw input_error("same_toric_poset: quivers must be acyclic");
    }
    return compute_flow_difference_vector(a) == compute_flow_difference_vector(b);
}

ToricPoset::ToricPoset(const Quiver& q, size_t cap)
    : members_(flip_class(q, cap)), fingerprint_(compute_flow_difference_vector(members_.front())) {}

bool ToricPoset::contains(const Quiver& q) const {
    return std::binary_search(members_.begin(), members_.end(), q);
}

std::vector<Quiver> quivers_with_source(const Quiver& q, int v, size_t cap) {
    if (v < 1 || v > q.vertex_count()) throw input_error("quivers_with_source: bad vertex");
    std::vector<Quiver> out;
    for (const Quiver& member : flip_class(q, cap)) {
        auto src = sources(member);
        if (std::find(src.begin(), src.end(), v) != src.end()) out.push_back(member);
    }
    return out;
}

std::pair<Quiver, std::vector<int>> make_source(const Quiver& q, int v) {
    if (v < 1 || v > q.vertex_count()) throw input_error("make_source: bad vertex");
    {
        auto src = sources(q);
        if (std::find(src.begin(), src.end(), v) != src.end()) return {q, {}};
    }
    // Take the lexicographically smallest linear extension a_1..a_n and flip
    // a_n, a_{n-1}, ..., a_i where a_i == v.  Each flip is at a sink of the
    // current quiver, and afterwards v is a source.
    int n = q.vertex_count();
    std::vector<int> indeg(n + 1, 0);
    for (const auto& [a, b] : q.arcs()) ++indeg[b];
    LinearExtension ext;
    std::vector<bool> used(n + 1, false);
    for (int step = 0; step < n; ++step) {
        for (int cand = 1; cand <= n; ++cand) {
            if (used[cand] || indeg[cand] != 0) continue;
            used[cand] = true;
            ext.push_back(cand);
            for (const auto& [a, b] : q.arcs()) {
                if (a == cand) --indeg[b];
            }
            break;
        }
    }
    if (static_cast<int>(ext.size()) != n) {
        throw input_error("make_source: quiver has a directed cycle");
    }
    size_t i = std::find(ext.begin(), ext.end(), v) - ext.begin();
    Quiver current = q;
    std::vector<int> flips;
    for (size_t t = ext.size(); t-- > i;) {
        current = flip(current, ext[t]);
        flips.push_back(ext[t]);
    }
    {
        auto src = sources(current);
        if (std::find(src.begin(), src.end(), v) == src.end()) {
            throw internal_error("make_source: vertex is not a source after suffix flips");
        }
    }
    return {current, flips};
}

std::vector<Quiver> rotate_by_linear_extension(const Quiver& q, const LinearExtension& w) {
    if (!is_linear_extension(q, w)) {
        throw input_error("rotate_by_linear_extension: word is not a linear extension");
    }
    std::vector<Quiver> trajectory{q};
    Quiver current = q;
    for (int v : w) {
        auto src = sources(current);
        if (std::find(src.begin(), src.end(), v) == src.end()) {
            throw internal_error("rotate_by_linear_extension: flip vertex is not a source");
        }
        current = flip(current, v);
        trajectory.push_back(current);
    }
    if (current != q) {
        throw internal_error("rotate_by_linear_extension: trajectory did not return to start");
    }
    return trajectory;
}

bool is_toric_directed_path(const Quiver& q, const std::vector<int>& path) {
    if (path.empty()) return false;
    if (path.size() == 1) {
        return path[0] >= 1 && path[0] <= q.vertex_count();
    }
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    for (size_t t = 0; t + 1 < path.size(); ++t) {
        if (!q.has_arc(path[t], path[t + 1])) return false;
    }
    return q.has_arc(path.front(), path.back());
}

namespace {

/// Sorts `vertices` into the unique reachability chain s_1 < .. < s_k of q,
/// or returns nullopt when some pair is incomparable in q's poset.
std::optional<std::vector<int>> sort_into_chain(const std::vector<std::vector<bool>>& leq,
                                                std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end(), [&](int a, int b) {
        return a != b && leq[a][b];
    });
    for (size_t t = 0; t + 1 < vertices.size(); ++t) {
        if (!leq[vertices[t]][vertices[t + 1]]) return std::nullopt;
    }
    return vertices;
}

/// Single-representative criterion: the set lies along a toric directed path
/// of q iff it is a reachability chain s_1 <= .. <= s_k and some arc (u, v)
/// has u <= s_1 and s_k <= v.  (Segments of reachability concatenate into a
/// genuine directed path because q is acyclic.)
std::optional<Arc> chain_witness_arc(const Quiver& q, const std::vector<std::vector<bool>>& leq,
                                     const std::vector<int>& chain) {
    if (chain.empty()) throw input_error("toric chain query needs at least one vertex");
    if (chain.size() == 1) {
        // Any single vertex is a toric chain; use a loop-free marker.
        return Arc{chain[0], chain[0]};
    }
    for (const auto& [u, v] : q.arcs()) {
        if (leq[u][chain.front()] && leq[chain.back()][v]) return Arc{u, v};
    }
    return std::nullopt;
}

std::vector<int> shortest_directed_path(const Quiver& q, int from, int to) {
    std::vector<int> prev(q.vertex_count() + 1, 0);
    std::vector<bool> seen(q.vertex_count() + 1, false);
    std::queue<int> bfs;
    bfs.push(from);
    seen[from] = true;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == to) break;
        for (int w : q.out_neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                prev[w] = u;
                bfs.push(w);
            }
        }
    }
    if (!seen[to]) throw internal_error("expected directed path is missing");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

void check_vertex_set(const Quiver& q, const std::vector<int>& vertices) {
    std::set<int> distinct;
    for (int v : vertices) {
        if (v < 1 || v > q.vertex_count()) throw input_error("vertex label out of range");
        if (!distinct.insert(v).second) throw input_error("vertex set has a repeat");
    }
}

} // namespace

bool is_toric_chain(const Quiver& q, const std::vector<int>& vertices, ChainStrategy strategy) {
    check_vertex_set(q, vertices);
    if (vertices.empty()) throw input_error("toric chain query needs at least one vertex");
    if (vertices.size() == 1) return true;

    if (strategy == ChainStrategy::BruteForce) {
        for (const Quiver& member : flip_class(q)) {
            auto leq = induced_poset_leq(member);
            for (size_t s = 0; s < vertices.size(); ++s) {
                for (size_t t = s + 1; t < vertices.size(); ++t) {
                    if (!leq[vertices[s]][vertices[t]] && !leq[vertices[t]][vertices[s]]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    auto leq = induced_poset_leq(q);
    auto chain = sort_into_chain(leq, vertices);
    if (!chain) return false;
    return chain_witness_arc(q, leq, *chain).has_value();
}

ToricChainCertificate toric_chain_certificate(const Quiver& q, const std::vector<int>& vertices) {
    check_vertex_set(q, vertices);
    if (vertices.empty()) throw input_error("toric chain query needs at least one vertex");
    ToricChainCertificate cert;
    if (vertices.size() == 1) {
        cert.is_chain = true;
        cert.representative = q;
        cert.toric_directed_path = vertices;
        return cert;
    }

    auto leq = induced_poset_leq(q);
    auto chain = sort_into_chain(leq, vertices);
    if (chain) {
        auto witness = chain_witness_arc(q, leq, *chain);
        if (witness) {
            // Assemble the explicit toric directed path u -> s_1 -> .. -> s_k -> v.
            std::vector<int> stations;
            if (witness->first != chain->front()) stations.push_back(witness->first);
            stations.insert(stations.end(), chain->begin(), chain->end());
            if (witness->second != chain->back()) stations.push_back(witness->second);
            std::vector<int> path{stations.front()};
            for (size_t t = 0; t + 1 < stations.size(); ++t) {
                auto leg = shortest_directed_path(q, stations[t], stations[t + 1]);
                path.insert(path.end(), leg.begin() + 1, leg.end());
            }
            if (!is_toric_directed_path(q, path)) {
                throw internal_error("assembled witness is not a toric directed path");
            }
            cert.is_chain = true;
            cert.representative = q;
            cert.toric_directed_path = std::move(path);
            return cert;
        }
    }

    // Not a chain: exhibit a representative where some pair is incomparable.
    for (const Quiver& member : flip_class(q)) {
        auto member_leq = induced_poset_leq(member);
        for (size_t s = 0; s < vertices.size(); ++s) {
            for (size_t t = s + 1; t < vertices.size(); ++t) {
                int a = vertices[s], b = vertices[t];
                if (!member_leq[a][b] && !member_leq[b][a]) {
                    cert.is_chain = false;
                    cert.representative = member;
                    cert.incomparable_pair = {a, b};
                    return cert;
                }
            }
        }
    }
    throw internal_error("set is totally ordered in every representative but has no witness path");
}

namespace {

bool comparable_with_leq(const Quiver& q, const std::vector<std::vector<bool>>& leq,
                         int a, int b) {
    if (q.adjacent(a, b)) return true;
    int lo = leq[a][b] ? a : (leq[b][a] ? b : 0);
    if (lo == 0) return false;
    int hi = (lo == a) ? b : a;
    for (const auto& [u, v] : q.arcs()) {
        if (leq[u][lo] && leq[hi][v]) return true;
    }
    return false;
}

} // namespace

bool torically_comparable(const Quiver& q, int a, int b) {
    if (a == b) throw input_error("torically_comparable: vertices must differ");
    return is_toric_chain(q, {a, b});
}

Quiver toric_hasse(const Quiver& q) {
    if (!is_acyclic(q)) throw input_error("toric_hasse: quiver has a directed cycle");
    auto leq = induced_poset_leq(q);
    std::vector<Arc> kept;
    for (const auto& [a, b] : q.arcs()) {
        // A toric directed path a .. b of length >= 2 exists iff some vertex
        // lies strictly between; it is non-maximal iff it extends at an end,
        // i.e. some other arc (u, v) has u <= a and b <= v.
        bool has_long_path = false;
        for (int z = 1; z <= q.vertex_count() && !has_long_path; ++z) {
            if (z != a && z != b && leq[a][z] && leq[z][b]) has_long_path = true;
        }
        bool extendable = false;
        if (has_long_path) {
            for (const auto& [u, v] : q.arcs()) {
                if ((u != a || v != b) && leq[u][a] && leq[b][v]) {
                    extendable = true;
                    break;
                }
            }
        }
        if (!(has_long_path && extendable)) kept.emplace_back(a, b);
    }
    return Quiver(q.vertex_count(), std::move(kept));
}

Quiver toric_transitive_closure(const Quiver& q) {
    if (!is_acyclic(q)) throw input_error("toric_transitive_closure: quiver has a directed cycle");
    auto leq = induced_poset_leq(q);
    std::vector<Arc> arcs = q.arcs();
    for (int a = 1; a <= q.vertex_count(); ++a) {
        for (int b = a + 1; b <= q.vertex_count(); ++b) {
            if (q.adjacent(a, b) || !comparable_with_leq(q, leq, a, b)) continue;
            // Vertices on a common toric chain are comparable in the poset of
            // every representative, in particular this one.
            if (leq[a][b]) {
                arcs.emplace_back(a, b);
            } else if (leq[b][a]) {
                arcs.emplace_back(b, a);
            } else {
                throw internal_error("toric chain pair is incomparable in the representative");
            }
        }
    }
    Quiver out(q.vertex_count(), std::move(arcs));
    if (!is_acyclic(out)) throw internal_error("toric transitive closure acquired a cycle");
    return out;
}

VIncomparabilityGraph build_v_incomparability_graph(const Quiver& q, int v) {
    if (v < 1 || v > q.vertex_count()) throw input_error("v-incomparability graph: bad vertex");
    Quiver closure = toric_transitive_closure(q);
    Graph closure_graph = closure.underlying_graph();
    auto dist = closure_graph.bfs_distances(v);

    std::vector<int> surviving;
    for (int w = 1; w <= q.vertex_count(); ++w) {
        if (w != v && !torically_comparable(q, v, w)) surviving.push_back(w);
    }

    VIncomparabilityGraph out;
    out.star_vertex = 1;
    out.original_label.assign(static_cast<size_t>(surviving.size()) + 2, 0);
    out.original_label[1] = v;
    out.new_label[v] = 1;
    for (size_t t = 0; t < surviving.size(); ++t) {
        out.original_label[t + 2] = surviving[t];
        out.new_label[surviving[t]] = static_cast<int>(t + 2);
    }

    std::vector<Edge> edges;
    Graph base = q.underlying_graph();
    for (size_t s = 0; s < surviving.size(); ++s) {
        for (size_t t = s + 1; t < surviving.size(); ++t) {
            if (base.has_edge(surviving[s], surviving[t])) {
                edges.emplace_back(out.new_label[surviving[s]], out.new_label[surviving[t]]);
            }
        }
        if (dist[surviving[s]] == 2) {
            edges.emplace_back(1, out.new_label[surviving[s]]);
        }
    }
    out.graph = Graph(static_cast<int>(surviving.size()) + 1, std::move(edges));
    return out;
}

Quiver phi(const Quiver& q, int v) {
    {
        auto src = sources(q);
        if (std::find(src.begin(), src.end(), v) == src.end()) {
            throw input_error("phi: vertex must be a source of the representative");
        }
    }
    VIncomparabilityGraph shape = build_v_incomparability_graph(q, v);
    Quiver closure = toric_transitive_closure(q);
    Graph closure_graph = closure.underlying_graph();

    std::vector<Arc> arcs;
    for (const auto& [a, b] : shape.graph.edges()) {
        int oa = shape.original_label[a];
        int ob = shape.original_label[b];
        if (a != shape.star_vertex && b != shape.star_vertex) {
            // Surviving edge: copy the representative's orientation.
            if (q.has_arc(oa, ob)) {
                arcs.emplace_back(a, b);
            } else if (q.has_arc(ob, oa)) {
                arcs.emplace_back(b, a);
            } else {
                throw internal_error("surviving edge is missing from the representative");
            }
            continue;
        }
        // Star edge {v*, u}: u sits at distance two from v in the closure;
        // pick the smallest middle vertex w of a path (v, w, u) there and use
        // the direction of the (w, u) arc.  (Any middle vertex gives the same
        // answer; the choice only fixes determinism.)
        int u = (a == shape.star_vertex) ? ob : oa;
        int u_new = (a == shape.star_vertex) ? b : a;
        int verdict = 0; // +1 star -> u, -1 u -> star
        for (int w : closure_graph.neighbors(v)) {
            if (!closure_graph.has_edge(w, u)) continue;
            int dir;
            if (closure.has_arc(w, u)) {
                dir = 1;
            } else if (closure.has_arc(u, w)) {
                dir = -1;
            } else {
                throw internal_error("length-two path step is missing from the closure");
            }
            if (verdict == 0) {
                verdict = dir;
            } else if (verdict != dir) {
                throw internal_error("star edge direction depends on the middle vertex");
            }
        }
        if (verdict == 0) throw internal_error("star edge endpoint lacks a length-two path");
        if (verdict > 0) {
            arcs.emplace_back(shape.star_vertex, u_new);
        } else {
            arcs.emplace_back(u_new, shape.star_vertex);
        }
    }
    Quiver out(shape.graph.vertex_count(), std::move(arcs));
    if (!is_acyclic(out)) throw internal_error("phi produced a directed cycle");
    return out;
}

std::optional<std::vector<int>> flip_sequence(const Quiver& from, const Quiver& to,
                                              const std::vector<int>& forbidden, size_t cap) {
    if (from.underlying_graph() != to.underlying_graph()) {
        throw input_error("flip_sequence: quivers orient different graphs");
    }
    std::set<int> blocked(forbidden.begin(), forbidden.end());
    std::map<Quiver, std::pair<Quiver, int>> parent; // child -> (parent, flip vertex)
    std::set<Quiver> seen{from};
    std::deque<Quiver> frontier{from};
    while (!frontier.empty()) {
        Quiver current = std::move(frontier.front());
        frontier.pop_front();
        if (current == to) {
            std::vector<int> flips;
            Quiver walk = current;
            while (walk != from) {
                auto& [prev, v] = parent.at(walk);
                flips.push_back(v);
                walk = prev;
            }
            std::reverse(flips.begin(), flips.end());
            return flips;
        }
        std::vector<int> candidates = sources(current);
        auto also = sinks(current);
        candidates.insert(candidates.end(), also.begin(), also.end());
        for (int v : candidates) {
            if (blocked.count(v)) continue;
            Quiver next = flip(current, v);
            if (seen.insert(next).second) {
                parent.emplace(next, std::make_pair(current, v));
                frontier.push_back(next);
            }
        }
        if (seen.size() > cap) {
            throw resource_limit_error("flip_sequence: search exceeds state cap");
        }
    }
    return std::nullopt;
}

} // namespace toric
