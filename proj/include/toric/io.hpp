#ifndef toric_io_hpp
#define toric_io_hpp

/// JSON documents describing quivers and their optional embedding data.
///
/// Schema (1-based vertex labels throughout):
///   {
///     "n": 4,
///     "arcs": [[1, 2], [1, 3], [2, 4], [3, 4]],
///     "labels": ["a", "b", "c", "d"],            // optional, length n
///     "rotation": [[...], ...],                  // optional, n or n+2 lists
///     "outer": [7, 2],                           // optional, needs rotation
///     "regions": [{"delta": [...], "min": 1, "max": 6}, ...]  // optional
///   }
/// A rotation with n+2 lists embeds the diagram with its adjoined global
/// bottom (n+1) and top (n+2); "outer" designates the outer face by one
/// directed edge of that embedding.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "toric/planar.hpp"
#include "toric/quiver.hpp"

namespace toric {

struct QuiverDocument {
    Quiver quiver;
    std::vector<std::string> labels;        // empty, or one display name per vertex
    std::optional<RotationSystem> rotation; // embeds the plain or augmented diagram
    std::optional<Arc> outer;               // outer-face directed edge
    std::vector<BoundedRegion> regions;

    bool operator==(const QuiverDocument&) const = default;
};

/// Parses a document; malformed JSON or schema violations (bad labels,
/// non-acyclic arcs, rotation of the wrong shape, ...) raise input_error.
QuiverDocument parse_document(const std::string& text);

/// Canonical rendering; parse(serialize(doc)) == doc.
std::string serialize_document(const QuiverDocument& doc);

QuiverDocument load_document(const std::filesystem::path& path);
void save_document(const QuiverDocument& doc, const std::filesystem::path& path);

} // namespace toric

#endif
