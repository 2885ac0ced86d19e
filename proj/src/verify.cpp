#include "toric/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toric/errors.hpp"
#include "toric/fixtures.hpp"
#include "toric/generators.hpp"
#include "toric/greene.hpp"
#include "toric/io.hpp"
#include "toric/toric_poset.hpp"

namespace toric {

namespace {

std::string quiver_json(const Quiver& q) {
    return serialize_document(QuiverDocument{q});
}

void add_item(SuiteReport& report, std::string name, bool pass, std::string detail = "") {
    report.items.push_back({std::move(name), pass, std::move(detail)});
}

void finish(SuiteReport& report) {
    report.pass = std::all_of(report.items.begin(), report.items.end(),
                              [](const SuiteItem& item) { return item.pass; });
}

/// Disjoint-set forest over 0..n-1.
class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), size_t{0});
    }
    size_t find(size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<size_t> parent_;
};

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t out = 1;
    for (int t = 1; t <= k; ++t) out = out * static_cast<uint64_t>(n - k + t) / t;
    return out;
}

/// One representative per flip class over every graph on n vertices.
std::vector<Quiver> exhaustive_class_representatives(int n) {
    std::vector<Quiver> reps;
    for (const Graph& g : all_graphs(n)) {
        std::map<std::vector<int>, Quiver> classes;
        for (const Quiver& q : all_acyclic_orientations(g)) {
            auto key = compute_flow_difference_vector(q).differences;
            auto it = classes.find(key);
            if (it == classes.end()) {
                classes.emplace(std::move(key), q);
            } else if (q < it->second) {
                it->second = q;
            }
        }
        for (auto& [key, rep] : classes) reps.push_back(std::move(rep));
    }
    return reps;
}

/// A graph that is disconnected (share == false) or glued at one shared
/// vertex (share == true), with both sides connected.
Graph two_block_graph(int n, bool share, std::mt19937_64& rng) {
    const int total = share ? n + 1 : n;
    std::uniform_int_distribution<int> cut(share ? 2 : 1, total - (share ? 2 : 1));
    const int left = cut(rng);
    const int right = total - left;

    std::uniform_real_distribution<double> prob(0.4, 0.8);
    const Graph a = left > 1 ? random_connected_graph(left, prob(rng), rng) : Graph(1, {});
    const Graph b = right > 1 ? random_connected_graph(right, prob(rng), rng) : Graph(1, {});

    // Right-block label w maps to w + left - 1 when the blocks share the
    // vertex `left`, else to w + left.
    const int shift = share ? left - 1 : left;
    std::vector<Edge> edges = a.edges();
    for (const auto& [x, y] : b.edges()) edges.emplace_back(x + shift, y + shift);
    return Graph(n, std::move(edges));
}

/// Generated family for the vanishing and denominator suites: every flip
/// class exhaustively for n = 3, 4, then seeded samples for n = 5..max_n,
/// half unconstrained and half built disconnected or with a cut vertex.
std::vector<Quiver> vanishing_family(int max_n, uint64_t seed) {
    std::vector<Quiver> reps;
    for (int n = 3; n <= std::min(max_n, 4); ++n) {
        auto all = exhaustive_class_representatives(n);
        reps.insert(reps.end(), all.begin(), all.end());
    }
    for (int n = 5; n <= max_n; ++n) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(n));
        std::uniform_real_distribution<double> prob(0.25, 0.7);
        const int want = n == 5 ? 30 : 20;
        std::set<Quiver> seen;
        while (static_cast<int>(seen.size()) < want) {
            Graph g = seen.size() % 2 == 0 ? random_graph(n, prob(rng), rng)
                                           : two_block_graph(n, rng() % 2 == 0, rng);
            seen.insert(random_acyclic_orientation(g, rng));
        }
        reps.insert(reps.end(), seen.begin(), seen.end());
    }
    return reps;
}

std::string method_name(ExtensionMethod method) {
    switch (method) {
        case ExtensionMethod::BruteForce: return "brute";
        case ExtensionMethod::Partition: return "partition";
        case ExtensionMethod::Recursive: return "recursive";
    }
    return "?";
}

} // namespace

SuiteReport verify_oracle_suite(const SuiteOptions& options) {
    SuiteReport report{"oracle"};
    const int max_n = options.max_n > 0 ? options.max_n : 4;
    const int exhaustive_to = std::min(max_n, 5);
    const int samples = options.samples > 0 ? options.samples : 50;

    auto check_instance = [&](const Quiver& rep, const std::set<ToricTotalOrder>& brute) {
        ++report.instances;
        RecursionOptions ropts;
        ropts.node_cap = options.cap;
        auto rec = ltor_recursive(rep, ropts);
        if (rec != brute) {
            add_item(report, "recursive disagrees with brute force", false, quiver_json(rep));
            return;
        }
        for (int v = 1; v <= rep.vertex_count(); ++v) {
            auto part = ltor_partition(rep, v, options.cap);
            if (part != brute) {
                add_item(report, "partition at " + std::to_string(v) + " disagrees", false,
                         quiver_json(rep));
                return;
            }
        }
    };

    for (int n = 1; n <= exhaustive_to; ++n) {
        size_t classes = 0;
        const size_t bad_before = report.items.size();
        for (const Graph& g : all_graphs(n)) {
            std::map<std::vector<int>, std::vector<Quiver>> groups;
            for (const Quiver& q : all_acyclic_orientations(g)) {
                groups[compute_flow_difference_vector(q).differences].push_back(q);
            }
            for (auto& [key, members] : groups) {
                ++classes;
                std::set<ToricTotalOrder> brute;
                for (const Quiver& m : members) {
                    for (const LinearExtension& w : linear_extensions(m)) {
                        brute.insert(cyclic_canonical(w));
                    }
                }
                // Every member, not just a representative: the recursion and
                // the partition see the chosen quiver, so agreement has to
                // hold member by member.
                for (const Quiver& m : members) check_instance(m, brute);
            }
        }
        add_item(report, "exhaustive n=" + std::to_string(n), report.items.size() == bad_before,
                 std::to_string(classes) + " flip classes over all graphs");
    }

    for (int n = exhaustive_to + 1; n <= max_n; ++n) {
        std::mt19937_64 rng(options.seed + static_cast<uint64_t>(n));
        std::uniform_real_distribution<double> prob(0.3, 0.7);
        const size_t bad_before = report.items.size();
        for (int s = 0; s < samples; ++s) {
            Quiver q = random_acyclic_orientation(random_graph(n, prob(rng), rng), rng);
            check_instance(q, ltor_bruteforce(q, options.cap));
        }
        add_item(report, "random n=" + std::to_string(n), report.items.size() == bad_before,
                 std::to_string(samples) + " seeded quivers");
    }

    finish(report);
    return report;
}

SuiteReport verify_pretzel_suite(const SuiteOptions& options) {
    SuiteReport report{"pretzel"};
    const int max_n = options.max_n > 0 ? std::min(options.max_n, 6) : 6;
    const int samples = options.samples > 0 ? options.samples : 50;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> size(3, max_n);
    std::uniform_real_distribution<double> prob(0.3, 0.7);
    const size_t bad_before = report.items.size();
    for (int s = 0; s < samples; ++s) {
        const Graph g = random_graph(size(rng), prob(rng), rng);
        std::vector<Quiver> orientations = all_acyclic_orientations(g);
        std::sort(orientations.begin(), orientations.end());
        ++report.instances;

        auto index_of = [&](const Quiver& q) {
            return static_cast<size_t>(
                std::lower_bound(orientations.begin(), orientations.end(), q) -
                orientations.begin());
        };

        UnionFind reach(orientations.size());
        for (size_t i = 0; i < orientations.size(); ++i) {
            for (int v : sources(orientations[i])) {
                reach.unite(i, index_of(flip(orientations[i], v)));
            }
            for (int v : sinks(orientations[i])) {
                reach.unite(i, index_of(flip(orientations[i], v)));
            }
        }

        std::map<std::vector<int>, std::vector<size_t>> by_fingerprint;
        for (size_t i = 0; i < orientations.size(); ++i) {
            by_fingerprint[compute_flow_difference_vector(orientations[i]).differences]
                .push_back(i);
        }

        std::map<size_t, std::set<size_t>> by_reach;
        for (size_t i = 0; i < orientations.size(); ++i) by_reach[reach.find(i)].insert(i);

        std::set<std::set<size_t>> blocks_a, blocks_b;
        for (auto& [key, block] : by_fingerprint) {
            blocks_a.emplace(block.begin(), block.end());
        }
        for (auto& [root, block] : by_reach) blocks_b.insert(block);
        if (blocks_a != blocks_b) {
            std::ostringstream detail;
            detail << "fingerprint blocks " << blocks_a.size() << " vs flip blocks "
                   << blocks_b.size() << " on graph with " << g.vertex_count() << " vertices, "
                   << g.edges().size() << " edges";
            add_item(report, "partition mismatch", false, detail.str());
        }
    }
    add_item(report, "fingerprint = flip reachability", report.items.size() == bad_before,
             std::to_string(samples) + " seeded graphs, n <= " + std::to_string(max_n));

    finish(report);
    return report;
}

SuiteReport verify_cut_vertex_suite(const SuiteOptions& options) {
    SuiteReport report{"cut-vertex"};
    const int max_n = options.max_n > 0 ? options.max_n : 6;

    size_t hypothesis_met = 0;
    const size_t bad_before = report.items.size();
    for (const Quiver& rep : vanishing_family(max_n, options.seed)) {
        ++report.instances;
        CutVertexReport r = verify_cut_vertex_vanishing(rep, options.method);
        if (r.hypothesis_met) ++hypothesis_met;
        if (!r.pass) {
            add_item(report, "vanishing violated", false, quiver_json(rep));
        }
    }
    add_item(report, "generated family", report.items.size() == bad_before,
             std::to_string(report.instances) + " classes, " + std::to_string(hypothesis_met) +
                 " with the hypothesis met");

    {
        CutVertexReport r = verify_cut_vertex_vanishing(fixtures::cut_vertex_poset(), options.method);
        add_item(report, "seven-vertex cut-vertex fixture", r.hypothesis_met && r.pass && r.is_zero,
                 r.pass ? "" : rf_to_string(r.psi));
        ++report.instances;
    }
    {
        // Sufficiency only: this five-vertex quiver is 2-connected yet vanishes.
        CutVertexReport r =
            verify_cut_vertex_vanishing(fixtures::vanishing_without_cut_vertex(), options.method);
        add_item(report, "five-vertex fixture vanishes without the hypothesis",
                 !r.hypothesis_met && r.is_zero, rf_to_string(r.psi));
        ++report.instances;
    }
    {
        const Quiver q(6, {{1, 5}, {5, 6}, {5, 4}, {1, 6}, {1, 4}});
        CutVertexReport r = verify_cut_vertex_vanishing(q, options.method);
        add_item(report, "six-vertex fixture with isolated vertices", r.hypothesis_met && r.pass,
                 r.pass ? "" : rf_to_string(r.psi));
        ++report.instances;
    }
    {
        RationalFunction psi = psi_tor(fixtures::diamond(), options.method);
        add_item(report, "diamond is nonzero",
                 !psi.is_zero() && rf_equal(psi, fixtures::diamond_psi_tor()),
                 rf_to_string(psi));
        ++report.instances;
    }

    finish(report);
    return report;
}

SuiteReport verify_denominator_suite(const SuiteOptions& options) {
    SuiteReport report{"denominator"};
    const int max_n = options.max_n > 0 ? options.max_n : 6;

    size_t proper = 0;
    const size_t bad_before = report.items.size();
    for (const Quiver& rep : vanishing_family(max_n, options.seed)) {
        ++report.instances;
        DenominatorReport r = verify_denominator(rep, options.method);
        if (r.proper) ++proper;
        if (!r.pass) {
            add_item(report, "denominator support violated", false, quiver_json(rep));
        }
    }
    add_item(report, "generated family", report.items.size() == bad_before,
             std::to_string(report.instances) + " classes, " + std::to_string(proper) +
                 " with proper containment");

    {
        // The closed double chain (k = j = 1) keeps the bottom -> top arc in
        // its toric Hasse diagram, yet the factor never appears.
        const DoubleChainLabels labels = double_chain_labels(1, 1);
        DenominatorReport r = verify_denominator(double_chain_quiver(1, 1), options.method);
        const Edge missing{labels.bottom, labels.top};
        const bool has_hasse_edge =
            std::find(r.hasse_pairs.begin(), r.hasse_pairs.end(), missing) != r.hasse_pairs.end();
        const bool lacks_factor =
            std::find(r.denominator_pairs.begin(), r.denominator_pairs.end(), missing) ==
            r.denominator_pairs.end();
        add_item(report, "double-chain fixture: containment is proper",
                 r.pass && r.proper && has_hasse_edge && lacks_factor, rf_to_string(r.psi));
        ++report.instances;
    }

    finish(report);
    return report;
}

SuiteReport verify_kk_suite(const SuiteOptions& options) {
    SuiteReport report{"kk"};
    for (int k = 0; k <= options.max_k; ++k) {
        for (int j = 0; j <= options.max_j; ++j) {
            ++report.instances;
            KKReport r = verify_kk(k, j);
            std::string detail;
            if (!r.pass) {
                detail = "lhs " + rf_to_string(r.lhs) + " rhs " + rf_to_string(r.rhs) +
                         " closed " + rf_to_string(r.closed) + " quiver " +
                         rf_to_string(r.quiver_psi);
            }
            add_item(report, "k=" + std::to_string(k) + " j=" + std::to_string(j), r.pass,
                     std::move(detail));
        }
    }
    finish(report);
    return report;
}

SuiteReport verify_shuffle_suite(const SuiteOptions& options) {
    SuiteReport report{"shuffle-vanishing"};
    const int max_total = options.max_n > 0 ? options.max_n : 5;

    for (int total = 2; total <= max_total; ++total) {
        const size_t bad_before = report.items.size();
        size_t pairs = 0;
        // Labels 2..total+1 split into two nonempty ordered words; pivot 1.
        for (unsigned mask = 1; mask + 1 < (1u << total); ++mask) {
            std::vector<int> a, b;
            for (int t = 0; t < total; ++t) {
                (mask & (1u << t) ? a : b).push_back(t + 2);
            }
            std::sort(a.begin(), a.end());
            do {
                std::vector<int> b_perm = b;
                std::sort(b_perm.begin(), b_perm.end());
                do {
                    ++pairs;
                    ++report.instances;
                    ShuffleVanishingReport r = verify_shuffle_vanishing(a, b_perm, 1);
                    if (!r.pass) {
                        std::ostringstream detail;
                        detail << "a = (";
                        for (int x : a) detail << x << ",";
                        detail << ") b = (";
                        for (int x : b_perm) detail << x << ",";
                        detail << ") sum = " << rf_to_string(r.sum);
                        add_item(report, "nonzero shuffle sum", false, detail.str());
                    }
                } while (std::next_permutation(b_perm.begin(), b_perm.end()));
            } while (std::next_permutation(a.begin(), a.end()));
        }
        add_item(report, "|a|+|b| = " + std::to_string(total), report.items.size() == bad_before,
                 std::to_string(pairs) + " ordered pairs");
    }

    finish(report);
    return report;
}

SuiteReport verify_planar_suite(const SuiteOptions& options) {
    SuiteReport report{"planar"};
    const int samples = options.samples > 0 ? options.samples : 20;

    {
        const Quiver q = fixtures::planar_poset();
        StronglyPlanarReport r =
            strongly_planar_check(q, fixtures::planar_poset_rotation(), fixtures::planar_poset_outer());
        bool ok = r.pass && r.regions.size() == 1;
        if (ok) {
            const BoundedRegion& region = r.regions.front();
            const std::vector<BoundedRegion> golden = fixtures::planar_poset_regions();
            const BoundedRegion& expected = golden.front();
            std::multiset<int> got(region.delta.begin(), region.delta.end());
            std::multiset<int> want(expected.delta.begin(), expected.delta.end());
            ok = region.min_v == expected.min_v && region.max_v == expected.max_v && got == want;
        }
        if (ok) {
            RationalFunction product = greene_strongly_planar(q, r.regions);
            ok = rf_equal(product, fixtures::planar_poset_psi()) &&
                 rf_equal(product, psi_poset(q));
        }
        add_item(report, "planar fixture embedding and product formula", ok, r.reason);
        ++report.instances;
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> blocks(2, 4);
    const size_t bad_before = report.items.size();
    for (int s = 0; s < samples; ++s) {
        ++report.instances;
        const Quiver q = random_stacked_planar(blocks(rng), rng);
        auto witness = find_strongly_planar_rotation(q);
        if (!witness) {
            add_item(report, "stacked diagram has no embedding", false, quiver_json(q));
            continue;
        }
        StronglyPlanarReport r = strongly_planar_check(q, witness->first, witness->second);
        if (!r.pass) {
            add_item(report, "witness embedding rejected", false, quiver_json(q) + r.reason);
            continue;
        }
        if (!rf_equal(greene_strongly_planar(q, r.regions), psi_poset(q))) {
            add_item(report, "product formula mismatch", false, quiver_json(q));
        }
    }
    add_item(report, "stacked diagrams", report.items.size() == bad_before,
             std::to_string(samples) + " seeded diagrams");

    {
        StronglyPlanarReport r = strongly_planar_check(
            fixtures::bowtie(), fixtures::bowtie_rotation(), fixtures::bowtie_outer());
        add_item(report, "bow-tie fixture embedding fails", !r.pass, r.reason);
        ++report.instances;
    }
    {
        auto witness = find_strongly_planar_rotation(fixtures::bowtie());
        add_item(report, "bow-tie fails in every embedding", !witness.has_value());
        ++report.instances;
    }

    finish(report);
    return report;
}

SuiteReport verify_fixed_source_suite(const SuiteOptions& options) {
    SuiteReport report{"fixed-source"};
    const int max_n = options.max_n > 0 ? options.max_n : 7;
    const int samples = options.samples > 0 ? options.samples : 100;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> size(3, max_n);
    std::uniform_real_distribution<double> prob(0.3, 0.6);

    size_t source_sets = 0;
    const size_t bad_before = report.items.size();
    for (int s = 0; s < samples; ++s) {
        ++report.instances;
        const int n = size(rng);
        const Quiver q = random_acyclic_orientation(random_connected_graph(n, prob(rng), rng), rng);

        for (int v = 1; v <= n; ++v) {
            ++source_sets;
            const std::vector<Quiver> members = quivers_with_source(q, v, options.cap);
            if (members.empty()) {
                add_item(report, "no member keeps the vertex a source", false, quiver_json(q));
                break;
            }

            // Every two members are joined by flips that stay inside the set.
            UnionFind linked(members.size());
            for (size_t i = 0; i < members.size(); ++i) {
                auto try_flip = [&](int w) {
                    Quiver flipped = flip(members[i], w);
                    auto it = std::lower_bound(members.begin(), members.end(), flipped);
                    if (it != members.end() && *it == flipped) {
                        linked.unite(i, static_cast<size_t>(it - members.begin()));
                    }
                };
                for (int w : sources(members[i])) try_flip(w);
                for (int w : sinks(members[i])) try_flip(w);
            }
            bool connected = true;
            for (size_t i = 1; i < members.size(); ++i) {
                connected = connected && linked.find(i) == linked.find(0);
            }
            if (!connected) {
                add_item(report, "restricted flip graph is disconnected at v=" + std::to_string(v),
                         false, quiver_json(q));
                break;
            }

            // The contraction is a bijection onto one full flip class.
            std::set<Quiver> images;
            for (const Quiver& m : members) images.insert(phi(m, v));
            if (images.size() != members.size()) {
                add_item(report, "contraction is not injective at v=" + std::to_string(v), false,
                         quiver_json(q));
                break;
            }
            const std::vector<Quiver> image_class = flip_class(*images.begin(), options.cap);
            if (std::set<Quiver>(image_class.begin(), image_class.end()) != images) {
                add_item(report, "contraction misses part of the image class at v=" + std::to_string(v),
                         false, quiver_json(q));
                break;
            }
        }
    }
    add_item(report, "restricted flip classes", report.items.size() == bad_before,
             std::to_string(samples) + " quivers, " + std::to_string(source_sets) +
                 " (quiver, vertex) pairs");

    finish(report);
    return report;
}

SuiteReport verify_bounded_suite(const SuiteOptions& options) {
    SuiteReport report{"bounded"};
    const int max_n = options.max_n > 0 ? options.max_n : 7;
    const int samples = options.samples > 0 ? options.samples : 100;

    {
        const BoundedAugmentation aug = augment_with_bounds(fixtures::planar_poset());
        const RationalFunction closed_form = psi_tor_bounded(aug.quiver, aug.zero, aug.one);
        const Quiver closed = add_arc(aug.quiver, aug.zero, aug.one);
        const bool ok = rf_equal(closed_form, fixtures::planar_poset_bounded_psi_tor()) &&
                        rf_equal(closed_form, psi_tor(closed, options.method));
        add_item(report, "planar fixture bounded golden", ok, rf_to_string(closed_form));
        ++report.instances;
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> inner(1, std::max(1, max_n - 2));
    std::uniform_real_distribution<double> prob(0.2, 0.7);
    const size_t bad_before = report.items.size();
    size_t extensions = 0;
    for (int s = 0; s < samples; ++s) {
        ++report.instances;
        const BoundedHasse bh = random_bounded_hasse(inner(rng), prob(rng), rng);
        try {
            const BoundedBijection bij = bounded_bijection(bh.hasse, bh.zero, bh.one);
            extensions += bij.pairs.size();
            const RationalFunction closed_form = psi_tor_bounded(bh.hasse, bh.zero, bh.one);
            const RationalFunction computed = psi_tor(bij.closed_quiver, options.method);
            if (!rf_equal(closed_form, computed)) {
                add_item(report, "bounded factorization mismatch", false, quiver_json(bh.hasse));
            }
        } catch (const internal_error& e) {
            add_item(report, "reading bijection violated", false,
                     quiver_json(bh.hasse) + e.what());
        }
    }
    add_item(report, "random bounded diagrams", report.items.size() == bad_before,
             std::to_string(samples) + " seeded diagrams, " + std::to_string(extensions) +
                 " matched extensions");

    finish(report);
    return report;
}

SuiteReport verify_counting_suite(const SuiteOptions& options) {
    SuiteReport report{"counting"};
    for (int k = 0; k <= options.max_k; ++k) {
        for (int j = 0; j <= options.max_j; ++j) {
            ++report.instances;
            const Quiver q = double_chain_quiver(k, j);
            const uint64_t expected = binomial(k + j, k);
            bool ok = true;
            std::ostringstream detail;
            for (ExtensionMethod method : {ExtensionMethod::BruteForce, ExtensionMethod::Partition,
                                           ExtensionMethod::Recursive}) {
                const size_t got = count_ltor(q, method, options.cap);
                if (got != expected) {
                    ok = false;
                    detail << method_name(method) << " got " << got << " expected " << expected
                           << "; ";
                }
            }
            add_item(report, "double chain k=" + std::to_string(k) + " j=" + std::to_string(j),
                     ok, detail.str());
        }
    }
    finish(report);
    return report;
}

SuiteReport verify_rf_suite(const SuiteOptions& options) {
    SuiteReport report{"rf"};
    const int samples = options.samples > 0 ? options.samples : 10000;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> vars(2, 6);
    size_t equal_pairs = 0;
    const size_t bad_before = report.items.size();
    for (int s = 0; s < samples; ++s) {
        ++report.instances;
        const int nvars = vars(rng);
        const RationalFunction f = random_rational_function(nvars, rng);
        try {
            if (s % 2 == 0) {
                const RationalFunction g = random_rational_function(nvars, rng);
                if (rf_equal(f, g)) ++equal_pairs;
            } else {
                // Equal by construction: scale numerator and denominator by
                // the same linear factor; normalization must cancel it.
                std::uniform_int_distribution<int> pick(1, nvars);
                const int i = pick(rng);
                int j = pick(rng);
                while (j == i) j = pick(rng);
                std::vector<LinearFactor> factors = f.denominator();
                factors.push_back({i, j});
                const RationalFunction g(
                    poly_mul(f.numerator(), SparsePolynomial::linear_difference(nvars, i, j)),
                    std::move(factors));
                ++equal_pairs;
                if (!rf_equal(f, g)) {
                    add_item(report, "constructed-equal pair compared unequal", false,
                             rf_to_string(f) + " vs " + rf_to_string(g));
                }
            }
        } catch (const internal_error& e) {
            add_item(report, "pre-check disagreed with the exact check", false, e.what());
        }
    }
    add_item(report, "pre-check vs exact check", report.items.size() == bad_before,
             std::to_string(samples) + " pairs, " + std::to_string(equal_pairs) + " equal");

    finish(report);
    return report;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "oracle") return verify_oracle_suite(options);
    if (name == "pretzel") return verify_pretzel_suite(options);
    if (name == "cut-vertex") return verify_cut_vertex_suite(options);
    if (name == "denominator") return verify_denominator_suite(options);
    if (name == "kk") return verify_kk_suite(options);
    if (name == "shuffle-vanishing") return verify_shuffle_suite(options);
    if (name == "planar") return verify_planar_suite(options);
    if (name == "fixed-source") return verify_fixed_source_suite(options);
    if (name == "bounded") return verify_bounded_suite(options);
    if (name == "counting") return verify_counting_suite(options);
    if (name == "rf") return verify_rf_suite(options);
    throw input_error("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
    return {"cut-vertex", "denominator", "kk",      "shuffle-vanishing", "planar", "fixed-source",
            "oracle",     "pretzel",     "bounded", "counting",          "rf"};
}

std::string report_to_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (" << report.instances << " instances)\n";
    for (const SuiteItem& item : report.items) {
        out << (item.pass ? "  pass  " : "  FAIL  ") << item.name;
        if (!item.detail.empty()) out << " — " << item.detail;
        out << "\n";
    }
    out << (report.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    j["instances"] = report.instances;
    auto items = nlohmann::ordered_json::array();
    for (const SuiteItem& item : report.items) {
        nlohmann::ordered_json entry;
        entry["name"] = item.name;
        entry["pass"] = item.pass;
        if (!item.detail.empty()) entry["detail"] = item.detail;
        items.push_back(std::move(entry));
    }
    j["items"] = std::move(items);
    return j.dump(2) + "\n";
}

} // namespace toric
