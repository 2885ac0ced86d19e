#ifndef toric_toric_poset_hpp
#define toric_toric_poset_hpp

/// Toric posets: equivalence classes of acyclic quivers under sink-source
/// flips.  Class membership is decided without enumeration through the
/// flow-difference fingerprint (net forward minus backward arcs around each
/// fundamental circuit of a deterministic spanning forest); two acyclic
/// orientations of the same graph are flip-equivalent iff their fingerprints
/// agree.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toric/quiver.hpp"

namespace toric {

inline constexpr size_t kDefaultClassCap = 1000000;

/// Flow differences along the fundamental circuits of the canonical spanning
/// forest (BFS from the smallest vertex of each component, neighbors in
/// ascending order).  Each circuit is traversed starting with its non-tree
/// edge, oriented from the smaller endpoint.
struct FlowDifferenceVector {
    std::vector<Edge> tree_edges;   // lex sorted
    std::vector<Edge> cotree_edges; // lex sorted, aligned with differences
    std::vector<int> differences;
    bool operator==(const FlowDifferenceVector&) const = default;
};

FlowDifferenceVector compute_flow_difference_vector(const Quiver& q);

/// Net forward minus backward arcs along an arbitrary closed walk given as a
/// vertex cycle (consecutive pairs must be edges).  Test oracle helper.
int flow_difference_on_cycle(const Quiver& q, const std::vector<int>& cycle);

/// Flip-equivalence class of q, as sorted quivers (front() is the canonical
/// representative: lexicographically smallest arc list).  BFS over flips;
/// throws resource_limit_error beyond `cap` members.
std::vector<Quiver> flip_class(const Quiver& q, size_t cap = kDefaultClassCap);

/// Fingerprint comparison; input_error when the underlying graphs differ.
bool same_toric_poset(const Quiver& a, const Quiver& b);

class ToricPoset {
public:
    explicit ToricPoset(const Quiver& q, size_t cap = kDefaultClassCap);

    const Quiver& canonical_representative() const { return members_.front(); }
    const std::vector<Quiver>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    const FlowDifferenceVector& fingerprint() const { return fingerprint_; }
    bool contains(const Quiver& q) const;

private:
    std::vector<Quiver> members_;
    FlowDifferenceVector fingerprint_;
};

/// Members of the flip class in which v is a source.
std::vector<Quiver> quivers_with_source(const Quiver& q, int v, size_t cap = kDefaultClassCap);

/// A representative of [q] with v a source, together with the flip sequence
/// that produces it from q (empty when v is already a source).  Flips the
/// suffix of the lexicographically smallest linear extension, from the last
/// entry down to v.
std::pair<Quiver, std::vector<int>> make_source(const Quiver& q, int v);

/// Flips the vertices of a linear extension of q in order; every flip is at a
/// source, and the final quiver equals q again (checked, internal_error
/// otherwise).  Returns the full trajectory, length n+1, front == back == q.
std::vector<Quiver> rotate_by_linear_extension(const Quiver& q, const LinearExtension& w);

/// True when `path` = (x_1,..,x_k) has all consecutive arcs x_t -> x_{t+1}
/// and the closing arc x_1 -> x_k.  Single vertices are trivially paths; for
/// k == 2 the closing arc is the path arc itself.
bool is_toric_directed_path(const Quiver& q, const std::vector<int>& path);

enum class ChainStrategy {
    SingleRepresentative, // one quiver: subset of a toric directed path
    BruteForce,           // totally ordered in every member of the flip class
};

/// Whether `vertices` is totally ordered in every member of [q].
bool is_toric_chain(const Quiver& q, const std::vector<int>& vertices,
                    ChainStrategy strategy = ChainStrategy::SingleRepresentative);

/// Witness object for is_toric_chain answers.  For a chain: a representative
/// and a toric directed path of it containing the set.  Otherwise: a
/// representative in which two of the vertices are incomparable.
struct ToricChainCertificate {
    bool is_chain = false;
    Quiver representative;
    std::vector<int> toric_directed_path; // set when is_chain
    std::pair<int, int> incomparable_pair{0, 0}; // set when !is_chain
};

ToricChainCertificate toric_chain_certificate(const Quiver& q, const std::vector<int>& vertices);

bool torically_comparable(const Quiver& q, int a, int b);

/// Drops every arc a->b admitting a toric directed path from a to b of
/// length >= 2 that extends (at either end) to a strictly longer toric
/// directed path.  Class-invariant up to flip equivalence.
Quiver toric_hasse(const Quiver& q);

/// Adds an arc between every torically comparable non-adjacent pair,
/// directed by reachability in q.  Class-invariant up to flip equivalence.
Quiver toric_transitive_closure(const Quiver& q);

/// The contracted graph used by the source-fixing bijection: all vertices
/// torically comparable with v collapse into a single star vertex, vertices
/// torically incomparable with v survive.  New labels: star = 1, surviving
/// vertices in ascending original order from 2.
struct VIncomparabilityGraph {
    Graph graph;
    int star_vertex = 1;
    std::vector<int> original_label; // index by new label; original_label[1] == v
    std::map<int, int> new_label;    // original -> new, for surviving vertices and v
};

VIncomparabilityGraph build_v_incomparability_graph(const Quiver& q, int v);

/// The source-fixing bijection on [q]_v: orients the v-incomparability graph
/// from a representative with v a source.  Surviving edges copy their
/// orientation; star edges take the direction of the second step of a length
/// two path from v in the toric transitive closure.
Quiver phi(const Quiver& q, int v);

/// Shortest flip sequence from `from` to `to` avoiding flips at `forbidden`
/// vertices; nullopt when unreachable under that restriction.
std::optional<std::vector<int>> flip_sequence(const Quiver& from, const Quiver& to,
                                              const std::vector<int>& forbidden = {},
                                              size_t cap = kDefaultClassCap);

} // namespace toric

#endif
