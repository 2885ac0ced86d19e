#include "toric/generators.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

} // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 6) {
        throw input_error("exhaustive graph enumeration is desk scale (1 <= n <= 6)");
    }
    const std::vector<Edge> pairs = all_pairs(n);
    std::vector<Graph> out;
    out.reserve(size_t{1} << pairs.size());
    for (size_t mask = 0; mask < (size_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (mask & (size_t{1} << k)) {
                edges.push_back(pairs[k]);
            }
        }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<Quiver> all_acyclic_orientations(const Graph& g) {
    const std::vector<Edge>& edges = g.edges();
    if (edges.size() > 20) {
        throw input_error("orientation enumeration is desk scale (at most 20 edges)");
    }
    std::vector<Quiver> out;
    for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
        std::vector<Arc> arcs;
        arcs.reserve(edges.size());
        for (size_t k = 0; k < edges.size(); ++k) {
            const auto& [a, b] = edges[k];
            if (mask & (size_t{1} << k)) {
                arcs.emplace_back(b, a);
            } else {
                arcs.emplace_back(a, b);
            }
        }
        Quiver q(g.vertex_count(), std::move(arcs));
        if (is_acyclic(q)) {
            out.push_back(std::move(q));
        }
    }
    return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    if (n < 1) {
        throw input_error("random_graph needs at least one vertex");
    }
    std::bernoulli_distribution keep(edge_probability);
    std::vector<Edge> edges;
    for (const Edge& e : all_pairs(n)) {
        if (keep(rng)) {
            edges.push_back(e);
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng) {
    double p = edge_probability;
    for (int attempt = 0;; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (g.is_connected()) {
            return g;
        }
        if (attempt % 16 == 15) {
            p = std::min(1.0, p + 0.1);
        }
    }
}

Quiver random_acyclic_orientation(const Graph& g, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    std::vector<int> rank(n + 1);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin() + 1, rank.end(), rng);
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        if (rank[a] < rank[b]) {
            arcs.emplace_back(a, b);
        } else {
            arcs.emplace_back(b, a);
        }
    }
    return Quiver(n, std::move(arcs));
}

BoundedHasse random_bounded_hasse(int inner, double edge_probability, std::mt19937_64& rng) {
    if (inner < 1) {
        throw input_error("random_bounded_hasse needs at least one inner vertex");
    }
    const Quiver base =
        transitive_reduction(random_acyclic_orientation(random_graph(inner, edge_probability, rng), rng));

    BoundedHasse out;
    out.zero = inner + 1;
    out.one = inner + 2;
    std::vector<Arc> arcs = base.arcs();
    for (int s : sources(base)) {
        arcs.emplace_back(out.zero, s);
    }
    for (int t : sinks(base)) {
        arcs.emplace_back(t, out.one);
    }
    out.hasse = Quiver(inner + 2, std::move(arcs));
    return out;
}

Quiver random_stacked_planar(int blocks, std::mt19937_64& rng) {
    if (blocks < 1) {
        throw input_error("random_stacked_planar needs at least one block");
    }
    std::uniform_int_distribution<int> kind(0, 3); // 0: edge, otherwise diamond
    std::uniform_int_distribution<int> chain_len(1, 2);

    std::vector<Arc> arcs;
    int top = 1;
    int next = 2;
    bool has_diamond = false;
    for (int block = 0; block < blocks; ++block) {
        // Force a diamond somewhere so at least one bounded region exists.
        const bool diamond = (block == blocks - 1 && !has_diamond) || kind(rng) != 0;
        if (!diamond) {
            arcs.emplace_back(top, next);
            top = next++;
            continue;
        }
        has_diamond = true;
        const int block_top = next++;
        for (int side = 0; side < 2; ++side) {
            int prev = top;
            for (int step = chain_len(rng); step > 0; --step) {
                arcs.emplace_back(prev, next);
                prev = next++;
            }
            arcs.emplace_back(prev, block_top);
        }
        top = block_top;
    }
    return Quiver(next - 1, std::move(arcs));
}

RationalFunction random_rational_function(int nvars, std::mt19937_64& rng) {
    if (nvars < 2) {
        throw input_error("random_rational_function needs at least two variables");
    }
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exponent(0, 2);
    std::uniform_int_distribution<int> var(1, nvars);
    std::uniform_int_distribution<int> factor_count(0, 4);

    SparsePolynomial numerator(nvars);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        m[var(rng) - 1] = static_cast<uint32_t>(exponent(rng));
        int c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        numerator.add_term(m, c);
    }

    std::vector<LinearFactor> factors;
    const int count = factor_count(rng);
    for (int f = 0; f < count; ++f) {
        int i = var(rng);
        int j = var(rng);
        while (j == i) {
            j = var(rng);
        }
        factors.push_back({i, j});
    }
    return RationalFunction(std::move(numerator), std::move(factors));
}

} // namespace toric
