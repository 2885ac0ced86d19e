#ifndef toric_planar_hpp
#define toric_planar_hpp

/// Combinatorial planar embeddings (rotation systems), face tracing, and the
/// operational strong-planarity test: a Hasse diagram is accepted when, after
/// adjoining a global bottom and top, some given embedding has a unique
/// cycle-local minimum and maximum on every bounded face.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/quiver.hpp"

namespace toric {

/// One cyclic neighbor sequence per vertex; order[v-1] lists the neighbors of
/// v in rotation order and must be a permutation of the incident neighbors.
struct RotationSystem {
    std::vector<std::vector<int>> order;
    bool operator==(const RotationSystem&) const = default;
};

/// Face walks of the embedded graph.  walks[f] lists the tail vertices of the
/// directed edges around face f; face_of maps every directed edge to its face.
struct FaceTrace {
    std::vector<std::vector<int>> walks;
    std::map<Arc, int> face_of;
};

/// Traces all faces by the next-edge-in-rotation rule and enforces Euler's
/// relation V - E + F = 2 (connected input required); a failed check means
/// the rotation system is not planar.
FaceTrace faces(const Graph& g, const RotationSystem& rot);

/// A bounded face of an embedded Hasse diagram: its vertex set and the unique
/// cycle-local source and sink under the quiver orientation.
struct BoundedRegion {
    std::vector<int> delta;
    int min_v = 0;
    int max_v = 0;
    bool operator==(const BoundedRegion&) const = default;
};

/// Converts every face except the designated outer one into a BoundedRegion.
/// A face whose walk is not a simple cycle, or that has more than one local
/// source or sink, is an input error ("not a strongly planar embedding").
std::vector<BoundedRegion> bounded_regions(const Quiver& q, const RotationSystem& rot,
                                           int outer_face);

/// The quiver with a new global bottom (label n+1, below every source) and
/// top (label n+2, above every sink) adjoined.
struct BoundedAugmentation {
    Quiver quiver;
    int zero = 0;
    int one = 0;
};

BoundedAugmentation augment_with_bounds(const Quiver& q);

struct StronglyPlanarReport {
    bool pass = false;
    std::string reason;
    /// On pass: the bounded regions of the original diagram (the augmented
    /// faces avoiding the adjoined bottom and top).
    std::vector<BoundedRegion> regions;
    BoundedAugmentation augmented;
};

/// Operational strong-planarity test.  `rot` embeds the augmented diagram and
/// `outer` is a directed edge of it designating the outer face.  Passes when
/// every other face is a simple cycle with a unique local minimum and maximum
/// and the faces avoiding the adjoined bounds number exactly E - V + C (the
/// bounded regions of the original diagram, returned for the product formula).
StronglyPlanarReport strongly_planar_check(const Quiver& q, const RotationSystem& rot, Arc outer);

/// Desk-scale search over all rotation systems of the augmented diagram and
/// all outer-face choices; returns a passing witness if one exists.  The
/// number of candidate rotations is capped (resource limit error beyond it).
std::optional<std::pair<RotationSystem, Arc>> find_strongly_planar_rotation(
    const Quiver& q, size_t rotation_cap = 200000);

} // namespace toric

#endif
