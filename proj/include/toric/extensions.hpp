#ifndef toric_extensions_hpp
#define toric_extensions_hpp

/// Toric total extensions: the cyclic equivalence classes of total orders
/// whose toric poset refines a given one.  Three independent enumeration
/// routes are provided (brute force over the flip class, the source-fixing
/// partition, and the splitting recursion) so they can certify one another.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/toric_poset.hpp"

namespace toric {

/// A cyclic class of total orders, stored as the unique rotation whose first
/// entry is the smallest label 1.
struct ToricTotalOrder {
    std::vector<int> word;
    auto operator<=>(const ToricTotalOrder&) const = default;
    std::string to_string() const; // "(1,4,2,3)"
};

/// Canonical rotation of a permutation of 1..n; input_error otherwise.
ToricTotalOrder cyclic_canonical(const std::vector<int>& w);

/// The maximal-chain tournament orientation of a toric total order: w read as
/// the acyclic quiver on the complete graph with w as linear extension.
Quiver tournament_of_order(const ToricTotalOrder& w);

enum class ExtensionMethod { BruteForce, Partition, Recursive };

/// Union over the flip class of the cyclic classes of linear extensions.
std::set<ToricTotalOrder> ltor_bruteforce(const Quiver& q, size_t cap = kDefaultClassCap);

/// Partition route: fixes a vertex v and collects v.w-hat for w-hat ranging
/// over the linear extensions of each class member with v a source, with v
/// deleted.  The blocks are pairwise disjoint (internal_error otherwise).
std::set<ToricTotalOrder> ltor_partition(const Quiver& q, int v, size_t cap = kDefaultClassCap);

struct RecursionOptions {
    size_t node_cap = 1000000;
    bool record_splits = false;
};

struct RecursionTrace {
    std::vector<std::pair<int, int>> split_pairs; // in first-visit order
    size_t nodes = 0;
};

/// Splitting recursion on the toric transitive closure: a complete closure is
/// a single cyclic class; a disconnected closure gains the arc a->b for the
/// smallest-labeled cross pair (a < b); otherwise the eligible pair {a, b} at
/// closure-distance two with the largest-then-smallest labels smallest
/// (colex) splits the class into a->b and b->a after making their smallest
/// common neighbor a source.  The two branches are disjoint (checked).
std::set<ToricTotalOrder> ltor_recursive(const Quiver& q, const RecursionOptions& options = {},
                                         RecursionTrace* trace = nullptr);

std::set<ToricTotalOrder> ltor(const Quiver& q, ExtensionMethod method,
                               size_t cap = kDefaultClassCap);

size_t count_ltor(const Quiver& q, ExtensionMethod method = ExtensionMethod::Recursive,
                  size_t cap = kDefaultClassCap);

/// Adds the arc a -> b; input_error when {a, b} is already adjacent or the
/// arc would create a directed cycle.
Quiver add_arc(const Quiver& q, int a, int b);

/// The order/extension correspondence for bounded posets: for a Hasse
/// diagram p with unique source `zero`, unique sink `one`, and every vertex
/// between them, the quiver q = p + (zero -> one) satisfies a bijection
/// L(p) <-> Ltor([q]) given by reading each linear extension cyclically.
struct BoundedBijection {
    Quiver closed_quiver;
    std::vector<std::pair<LinearExtension, ToricTotalOrder>> pairs;
};

BoundedBijection bounded_bijection(const Quiver& p, int zero, int one);

} // namespace toric

#endif
