#include "toric/extensions.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

std::string ToricTotalOrder::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t t = 0; t < word.size(); ++t) {
        if (t > 0) out << ",";
        out << word[t];
    }
    out << ")";
    return out.str();
}

ToricTotalOrder cyclic_canonical(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n < 1) throw input_error("cyclic_canonical: empty word");
    std::vector<bool> seen(n + 1, false);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]) {
            throw input_error("cyclic_canonical: word is not a permutation of 1..n");
        }
        seen[v] = true;
    }
    size_t start = std::find(w.begin(), w.end(), 1) - w.begin();
    ToricTotalOrder out;
    out.word.reserve(w.size());
    for (size_t t = 0; t < w.size(); ++t) {
        out.word.push_back(w[(start + t) % w.size()]);
    }
    return out;
}

Quiver tournament_of_order(const ToricTotalOrder& w) {
    int n = static_cast<int>(w.word.size());
    std::vector<Arc> arcs;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            arcs.emplace_back(w.word[s], w.word[t]);
        }
    }
    return Quiver(n, std::move(arcs));
}

std::set<ToricTotalOrder> ltor_bruteforce(const Quiver& q, size_t cap) {
    std::set<ToricTotalOrder> out;
    for (const Quiver& member : flip_class(q, cap)) {
        for (const LinearExtension& w : linear_extensions(member)) {
            out.insert(cyclic_canonical(w));
        }
    }
    return out;
}

std::set<ToricTotalOrder> ltor_partition(const Quiver& q, int v, size_t cap) {
    std::set<ToricTotalOrder> out;
    for (const Quiver& member : quivers_with_source(q, v, cap)) {
        std::set<ToricTotalOrder> block;
        for (const LinearExtension& tail : linear_extensions_excluding(member, v)) {
            std::vector<int> word{v};
            word.insert(word.end(), tail.begin(), tail.end());
            block.insert(cyclic_canonical(word));
        }
        for (const ToricTotalOrder& order : block) {
            if (!out.insert(order).second) {
                throw internal_error("ltor_partition: blocks of the partition overlap");
            }
        }
    }
    return out;
}

Quiver add_arc(const Quiver& q, int a, int b) {
    if (a < 1 || b < 1 || a > q.vertex_count() || b > q.vertex_count() || a == b) {
        throw input_error("add_arc: bad vertex pair");
    }
    if (q.adjacent(a, b)) throw input_error("add_arc: pair is already adjacent");
    std::vector<Arc> arcs = q.arcs();
    arcs.emplace_back(a, b);
    Quiver out(q.vertex_count(), std::move(arcs));
    if (!is_acyclic(out)) throw input_error("add_arc: arc closes a directed cycle");
    return out;
}

namespace {

bool graph_is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return static_cast<long long>(g.edges().size()) == n * (n - 1) / 2;
}

void recursive_step(const Quiver& q, const RecursionOptions& options, RecursionTrace& trace,
                    std::set<ToricTotalOrder>& out) {
    if (++trace.nodes > options.node_cap) {
        throw resource_limit_error("ltor_recursive: node budget exceeded");
    }
    Quiver closure = toric_transitive_closure(q);
    Graph g = closure.underlying_graph();

    if (graph_is_complete(g)) {
        // A tournament has a unique linear extension and its own cyclic class
        // is the only toric total extension.
        auto exts = linear_extensions(closure);
        if (exts.size() != 1) {
            throw internal_error("ltor_recursive: tournament with several extensions");
        }
        out.insert(cyclic_canonical(exts.front()));
        return;
    }

    auto ids = g.component_ids();
    if (g.component_count() > 1) {
        // Join two components; either arc direction yields the same class
        // set, so the smaller-to-larger arc is fixed for determinism.
        for (int a = 1; a <= g.vertex_count(); ++a) {
            bool found = false;
            for (int b = a + 1; b <= g.vertex_count(); ++b) {
                if (ids[a - 1] != ids[b - 1]) {
                    recursive_step(add_arc(closure, a, b), options, trace, out);
                    found = true;
                    break;
                }
            }
            if (found) return;
        }
        throw internal_error("ltor_recursive: disconnected closure without a cross pair");
    }

    // Connected, not complete: split on the colex-smallest pair at distance
    // exactly two, through its smallest common neighbor made into a source.
    int pa = 0, pb = 0;
    for (int b = 2; b <= g.vertex_count() && pa == 0; ++b) {
        for (int a = 1; a < b && pa == 0; ++a) {
            if (g.has_edge(a, b)) continue;
            auto dist = g.bfs_distances(a);
            if (dist[b] == 2) {
                pa = a;
                pb = b;
            }
        }
    }
    if (pa == 0) {
        throw internal_error("ltor_recursive: connected incomplete closure without a distance-two pair");
    }
    if (options.record_splits) trace.split_pairs.emplace_back(pa, pb);

    int middle = 0;
    for (int w : g.neighbors(pa)) {
        if (g.has_edge(w, pb)) {
            middle = w;
            break;
        }
    }
    if (middle == 0) throw internal_error("ltor_recursive: distance-two pair without a middle");

    Quiver pivoted = make_source(closure, middle).first;
    auto leq = induced_poset_leq(pivoted);
    if (leq[pa][pb] || leq[pb][pa]) {
        throw internal_error("ltor_recursive: split pair is comparable with the middle a source");
    }

    std::set<ToricTotalOrder> left, right;
    recursive_step(add_arc(pivoted, pa, pb), options, trace, left);
    recursive_step(add_arc(pivoted, pb, pa), options, trace, right);
    for (const auto& order : left) {
        if (!out.insert(order).second) {
            throw internal_error("ltor_recursive: branches overlap");
        }
    }
    for (const auto& order : right) {
        if (!out.insert(order).second) {
            throw internal_error("ltor_recursive: branches overlap");
        }
    }
}

} // namespace

std::set<ToricTotalOrder> ltor_recursive(const Quiver& q, const RecursionOptions& options,
                                         RecursionTrace* trace) {
    if (!is_acyclic(q)) throw input_error("ltor_recursive: quiver has a directed cycle");
    RecursionTrace local;
    RecursionTrace& t = trace ? *trace : local;
    std::set<ToricTotalOrder> out;
    recursive_step(q, options, t, out);
    return out;
}

std::set<ToricTotalOrder> ltor(const Quiver& q, ExtensionMethod method, size_t cap) {
    switch (method) {
        case ExtensionMethod::BruteForce:
            return ltor_bruteforce(q, cap);
        case ExtensionMethod::Partition: {
            // Any vertex works; fix the smallest for determinism.
            return ltor_partition(q, 1, cap);
        }
        case ExtensionMethod::Recursive: {
            RecursionOptions options;
            options.node_cap = cap;
            return ltor_recursive(q, options);
        }
    }
    throw input_error("ltor: unknown method");
}

size_t count_ltor(const Quiver& q, ExtensionMethod method, size_t cap) {
    return ltor(q, method, cap).size();
}

BoundedBijection bounded_bijection(const Quiver& p, int zero, int one) {
    if (!is_acyclic(p)) throw input_error("bounded_bijection: quiver has a directed cycle");
    auto src = sources(p);
    auto snk = sinks(p);
    if (src != std::vector<int>{zero}) {
        throw input_error("bounded_bijection: `zero` must be the unique source");
    }
    if (snk != std::vector<int>{one}) {
        throw input_error("bounded_bijection: `one` must be the unique sink");
    }
    auto leq = induced_poset_leq(p);
    for (int v = 1; v <= p.vertex_count(); ++v) {
        if (!leq[zero][v] || !leq[v][one]) {
            throw input_error("bounded_bijection: every vertex must lie between zero and one");
        }
    }

    BoundedBijection out;
    // For the two-vertex poset the bottom -> top arc is already the cover.
    out.closed_quiver = p.has_arc(zero, one) ? p : add_arc(p, zero, one);
    std::set<ToricTotalOrder> image;
    for (const LinearExtension& w : linear_extensions(p)) {
        ToricTotalOrder order = cyclic_canonical(w);
        if (!image.insert(order).second) {
            throw internal_error("bounded_bijection: reading map is not injective");
        }
        out.pairs.emplace_back(w, order);
    }
    auto ltor_set = ltor_recursive(out.closed_quiver);
    if (ltor_set != image) {
        throw internal_error("bounded_bijection: image does not match the toric total extensions");
    }
    return out;
}

} // namespace toric
