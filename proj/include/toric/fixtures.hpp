#ifndef toric_fixtures_hpp
#define toric_fixtures_hpp

/// Named example inputs with hand-checked golden values, shared by the test
/// suites, the verification driver, and the shipped fixture files.  Each
/// fixture is small enough to audit by eye; the golden rational functions are
/// written down factor by factor rather than computed.

#include <vector>

#include "toric/extensions.hpp"
#include "toric/planar.hpp"
#include "toric/quiver.hpp"
#include "toric/ratfun.hpp"

namespace toric::fixtures {

/// Chain quiver 1 -> 2 -> ... -> n.
Quiver chain(int n);

/// Four-vertex diamond: 1 -> {2,3} -> 4.  The smallest quiver with a
/// nontrivial flip class (six members, four toric total extensions).
Quiver diamond();
std::vector<ToricTotalOrder> diamond_toric_extensions();
RationalFunction diamond_psi_tor(); // -2 / ((x1-x2)(x1-x3)(x2-x4)(x3-x4))

/// Seven vertices, two components (a diamond and a two-branch fan); the
/// Greene function of the induced poset is identically zero.
Quiver disconnected_poset();

/// Six-vertex strongly planar Hasse diagram with one bounded region spanned
/// by min 1 and max 6.
Quiver planar_poset();
RationalFunction planar_poset_psi(); // (x1-x6) / prod of the six covers
/// Embedding of the augmented diagram (bottom 7, top 8 adjoined) witnessing
/// strong planarity, with a directed edge designating the outer face.
RotationSystem planar_poset_rotation();
Arc planar_poset_outer();
std::vector<BoundedRegion> planar_poset_regions(); // region (1, 6)
/// Toric function of the bounded closure (augmented diagram + arc 7 -> 8).
RationalFunction planar_poset_bounded_psi_tor();

/// Five-vertex branching quiver 1 -> {2,3} -> 5, 1 -> 4 whose toric total
/// extension set (16 classes) splits into three blocks: the two orientations
/// of the added edge {4,5} (12 + 2 classes) leave a third block uncovered.
Quiver branching_quiver();
Quiver branching_quiver_up();   // + 4 -> 5
Quiver branching_quiver_down(); // + 5 -> 4
Quiver chain_fan();             // third block: 1 -> 4 -> 5 -> {2,3}, 1 -> {2,3}
std::vector<ToricTotalOrder> branching_up_extensions();   // 12 classes
std::vector<ToricTotalOrder> branching_down_extensions(); // 2 classes
std::vector<ToricTotalOrder> chain_fan_extensions();      // 2 classes

/// Five-vertex triple Hasse diagram / representative / toric closure: the
/// base quiver gains 2 -> 5 (mid) and then 1 -> 4 (closure).
Quiver reduction_triple_hasse();   // {1->2, 2->3, 2->4, 4->5, 1->5}
Quiver reduction_triple_mid();     // + 2 -> 5
Quiver reduction_triple_closure(); // + 1 -> 4

/// Six-vertex example for the source-fixing contraction at v = 1: vertices
/// 1, 2, 3 collapse and the image is an oriented square.
Quiver contraction_example();
/// Its image under phi(., 1) in the relabeled vertices (star = 1).
Quiver contraction_example_image();

/// Seven-vertex poset made of two diamonds sharing the cut vertex 4; the
/// toric function vanishes by the cut-vertex criterion.
Quiver cut_vertex_poset();

/// Five-vertex quiver (1 -> {2,3,4} -> 5) whose toric function vanishes even
/// though the graph is 2-connected: the vanishing criterion is not necessary.
Quiver vanishing_without_cut_vertex();

/// Four-vertex bow-tie {1,2} -> {3,4}: planar, but not strongly planar in
/// any embedding.
Quiver bowtie();
/// A valid planar embedding of the augmented bow-tie (fails the region test).
RotationSystem bowtie_rotation();
Arc bowtie_outer();

/// Six-vertex quiver whose toric total extensions are every cyclic class
/// compatible with the chains (1,2,3), (1,5,6), (3,4,5) except the identity
/// class; its toric function collapses to the single missing term, negated.
Quiver dense_six();
std::vector<ToricTotalOrder> dense_six_extensions(); // 14 classes
RationalFunction dense_six_psi_tor(); // 1 / ((x1-x2)(x2-x3)(x3-x4)(x4-x5)(x1-x6)(x5-x6))

} // namespace toric::fixtures

#endif
