#ifndef toric_verify_hpp
#define toric_verify_hpp

/// Batch verification suites shared by the command-line driver and the
/// acceptance tests.  Every suite checks one family of identities over the
/// named fixtures plus seeded generated instances, and reports deterministic
/// per-item outcomes; failing items carry a serialized counterexample or a
/// mismatch description.

#include <cstdint>
#include <string>
#include <vector>

#include "toric/extensions.hpp"

namespace toric {

inline constexpr uint64_t kDefaultSuiteSeed = 20240801;

/// Size knobs.  A zero means "suite default"; each suite documents how it
/// reads max_n and samples.
struct SuiteOptions {
    uint64_t seed = kDefaultSuiteSeed;
    int max_n = 0;
    int samples = 0;
    int max_k = 3; // double-chain sweep bound (first chain)
    int max_j = 3; // double-chain sweep bound (second chain)
    size_t cap = kDefaultClassCap;
    ExtensionMethod method = ExtensionMethod::Recursive;
};

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    size_t instances = 0; // checked instances; passing bulk work is summarized
    std::vector<SuiteItem> items;
};

/// The three enumeration routes (brute force, partition at every vertex,
/// recursion) agree: exhaustively over every flip class of every graph with
/// n <= min(max_n, 5) (default 4), plus `samples` random quivers (default 50)
/// for each n from 6 to max_n.
SuiteReport verify_oracle_suite(const SuiteOptions& options = {});

/// Flow-difference fingerprints partition the acyclic orientations exactly
/// like sink-source flip reachability, on `samples` (default 50) seeded
/// random graphs with 3 <= n <= max_n (default 6).
SuiteReport verify_pretzel_suite(const SuiteOptions& options = {});

/// A disconnected graph (n >= 3) or a cut vertex forces the toric function
/// to vanish, over the generated family (exhaustive flip classes for n <= 4,
/// seeded samples for n = 5..max_n, default 6) and the named fixtures,
/// including the non-sufficient five-vertex example and the nonzero diamond.
SuiteReport verify_cut_vertex_suite(const SuiteOptions& options = {});

/// Every normalized denominator factor of the toric function is an edge of
/// the toric Hasse diagram, over the same generated family (n >= 3); the
/// double-chain fixture witnesses proper containment.
SuiteReport verify_denominator_suite(const SuiteOptions& options = {});

/// Double-chain shuffle relations: for all 0 <= k <= max_k, 0 <= j <= max_j,
/// the shuffle sum, the signed single-word form, the closed form, and the
/// toric function of the double-chain quiver agree exactly.
SuiteReport verify_kk_suite(const SuiteOptions& options = {});

/// The shuffle sum over one pivot vanishes for every ordered pair of
/// nonempty disjoint words with |a| + |b| <= max_n (default 5).
SuiteReport verify_shuffle_suite(const SuiteOptions& options = {});

/// Strong planarity: the planar fixture passes with its shipped embedding
/// and matches both the golden value and the region product formula; the
/// product formula equals the Greene function on `samples` (default 20)
/// generated stacked diagrams; the bow-tie fails in every embedding.
SuiteReport verify_planar_suite(const SuiteOptions& options = {});

/// Source-fixing: on `samples` (default 100) seeded random quivers with
/// n <= max_n (default 7), for every vertex v the members keeping v a source
/// are flip-connected through that set, and the contraction map sends them
/// bijectively onto a full flip class of the contracted graph.
SuiteReport verify_fixed_source_suite(const SuiteOptions& options = {});

/// Bounded factorization: on `samples` (default 100) seeded random bounded
/// Hasse diagrams with at most max_n (default 7) vertices, the toric function
/// of the closed quiver equals psi_poset / (x_top - x_bottom), and reading
/// linear extensions cyclically is a bijection onto the toric extensions.
SuiteReport verify_bounded_suite(const SuiteOptions& options = {});

/// Counting: toric extension counts of the double-chain quivers reproduce
/// binomial(k + j, k) under every enumeration method.
SuiteReport verify_counting_suite(const SuiteOptions& options = {});

/// Rational-function equality: the randomized modular pre-check never
/// disagrees with the exact check across `samples` (default 10000) seeded
/// pairs, half independent and half equal by construction.
SuiteReport verify_rf_suite(const SuiteOptions& options = {});

/// Dispatch by suite name; input_error for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// All dispatchable names, in display order.
std::vector<std::string> suite_names();

std::string report_to_text(const SuiteReport& report);
std::string report_to_json(const SuiteReport& report);

} // namespace toric

#endif
