#include "toric/planar.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

void validate_rotation(const Graph& g, const RotationSystem& rot) {
    const int n = g.vertex_count();
    if (static_cast<int>(rot.order.size()) != n) {
        throw input_error("rotation system must list every vertex");
    }
    for (int v = 1; v <= n; ++v) {
        std::vector<int> listed = rot.order[v - 1];
        std::sort(listed.begin(), listed.end());
        if (listed != g.neighbors(v)) {
            throw input_error("rotation of a vertex must permute its neighbors");
        }
    }
}

/// Cycle-local sources and sinks of a face walk under the quiver orientation.
/// Returns a region only when the walk is a simple cycle with exactly one of
/// each; otherwise explains the violation.
std::optional<BoundedRegion> try_region(const Quiver& q, const std::vector<int>& walk,
                                        std::string& reason) {
    const size_t len = walk.size();
    if (len < 3 || std::set<int>(walk.begin(), walk.end()).size() != len) {
        reason = "bounded face boundary is not a simple cycle";
        return std::nullopt;
    }
    std::vector<int> mins;
    std::vector<int> maxs;
    for (size_t t = 0; t < len; ++t) {
        const int prev = walk[(t + len - 1) % len];
        const int cur = walk[t];
        const int next = walk[(t + 1) % len];
        const bool out_prev = q.has_arc(cur, prev);
        const bool out_next = q.has_arc(cur, next);
        if (out_prev && out_next) {
            mins.push_back(cur);
        } else if (!out_prev && !out_next) {
            maxs.push_back(cur);
        }
    }
    if (mins.size() != 1 || maxs.size() != 1) {
        reason = "bounded face has " + std::to_string(mins.size()) + " local minima and " +
                 std::to_string(maxs.size()) + " local maxima";
        return std::nullopt;
    }
    BoundedRegion region;
    region.delta = walk;
    std::sort(region.delta.begin(), region.delta.end());
    region.min_v = mins.front();
    region.max_v = maxs.front();
    return region;
}

} // namespace

FaceTrace faces(const Graph& g, const RotationSystem& rot) {
    if (g.vertex_count() < 1) {
        throw input_error("face tracing requires at least one vertex");
    }
    if (!g.is_connected()) {
        throw input_error("face tracing requires a connected graph");
    }
    validate_rotation(g, rot);

    FaceTrace trace;
    const int n = g.vertex_count();
    if (g.edges().empty()) {
        trace.walks.push_back({});
        return trace;
    }

    std::set<Arc> pending;
    for (const Edge& e : g.edges()) {
        pending.insert({e.first, e.second});
        pending.insert({e.second, e.first});
    }
    while (!pending.empty()) {
        const Arc start = *pending.begin();
        const int face = static_cast<int>(trace.walks.size());
        std::vector<int> walk;
        Arc cur = start;
        do {
            pending.erase(cur);
            trace.face_of[cur] = face;
            walk.push_back(cur.first);
            const std::vector<int>& ring = rot.order[cur.second - 1];
            const auto at = std::find(ring.begin(), ring.end(), cur.first);
            const size_t pos = static_cast<size_t>(at - ring.begin());
            cur = {cur.second, ring[(pos + 1) % ring.size()]};
        } while (cur != start);
        trace.walks.push_back(std::move(walk));
    }

    const int euler = n - static_cast<int>(g.edges().size()) + static_cast<int>(trace.walks.size());
    if (euler != 2) {
        throw input_error("rotation system not planar");
    }
    return trace;
}

std::vector<BoundedRegion> bounded_regions(const Quiver& q, const RotationSystem& rot,
                                           int outer_face) {
    const FaceTrace trace = faces(q.underlying_graph(), rot);
    if (outer_face < 0 || outer_face >= static_cast<int>(trace.walks.size())) {
        throw input_error("outer face index out of range");
    }
    std::vector<BoundedRegion> regions;
    for (size_t f = 0; f < trace.walks.size(); ++f) {
        if (static_cast<int>(f) == outer_face) {
            continue;
        }
        std::string reason;
        std::optional<BoundedRegion> region = try_region(q, trace.walks[f], reason);
        if (!region) {
            throw input_error("not a strongly planar embedding: " + reason);
        }
        regions.push_back(std::move(*region));
    }
    return regions;
}

BoundedAugmentation augment_with_bounds(const Quiver& q) {
    const int n = q.vertex_count();
    if (n < 1) {
        throw input_error("augmentation requires at least one vertex");
    }
    BoundedAugmentation aug;
    aug.zero = n + 1;
    aug.one = n + 2;
    std::vector<Arc> arcs = q.arcs();
    for (int s : sources(q)) {
        arcs.push_back({aug.zero, s});
    }
    for (int t : sinks(q)) {
        arcs.push_back({t, aug.one});
    }
    aug.quiver = Quiver(n + 2, std::move(arcs));
    return aug;
}

StronglyPlanarReport strongly_planar_check(const Quiver& q, const RotationSystem& rot,
                                           Arc outer) {
    StronglyPlanarReport report;
    report.augmented = augment_with_bounds(q);

    const FaceTrace trace = faces(report.augmented.quiver.underlying_graph(), rot);
    const auto outer_at = trace.face_of.find(outer);
    if (outer_at == trace.face_of.end()) {
        throw input_error("outer designation is not a directed edge of the augmented diagram");
    }
    const int outer_face = outer_at->second;

    std::vector<BoundedRegion> original;
    for (size_t f = 0; f < trace.walks.size(); ++f) {
        if (static_cast<int>(f) == outer_face) {
            continue;
        }
        std::string reason;
        std::optional<BoundedRegion> region =
            try_region(report.augmented.quiver, trace.walks[f], reason);
        if (!region) {
            report.reason = reason;
            return report;
        }
        const bool touches_bounds =
            std::find(region->delta.begin(), region->delta.end(), report.augmented.zero) !=
                region->delta.end() ||
            std::find(region->delta.begin(), region->delta.end(), report.augmented.one) !=
                region->delta.end();
        if (!touches_bounds) {
            original.push_back(std::move(*region));
        }
    }

    const Graph g = q.underlying_graph();
    const size_t expected = q.arcs().size() + g.component_count() - q.vertex_count();
    if (original.size() != expected) {
        report.reason = "adjoined bottom or top sits inside a bounded region";
        return report;
    }
    report.pass = true;
    report.regions = std::move(original);
    return report;
}

std::optional<std::pair<RotationSystem, Arc>> find_strongly_planar_rotation(const Quiver& q,
                                                                            size_t rotation_cap) {
    const BoundedAugmentation aug = augment_with_bounds(q);
    const Graph g = aug.quiver.underlying_graph();
    const int n = g.vertex_count();

    size_t candidates = 1;
    std::vector<std::vector<int>> base(n);
    for (int v = 1; v <= n; ++v) {
        base[v - 1] = g.neighbors(v);
        size_t orders = 1;
        for (size_t d = 2; d < base[v - 1].size(); ++d) {
            orders *= d; // (degree - 1)!
        }
        candidates *= orders;
        if (candidates > rotation_cap) {
            throw resource_limit_error("rotation search space exceeds the cap");
        }
    }

    // Odometer over the cyclic orders of each vertex: the first neighbor is
    // pinned and the tail runs through its permutations.
    RotationSystem rot;
    rot.order = base;
    while (true) {
        bool planar = true;
        FaceTrace trace;
        try {
            trace = faces(g, rot);
        } catch (const input_error&) {
            planar = false;
        }
        if (planar) {
            for (const std::vector<int>& walk : trace.walks) {
                if (walk.size() < 2) {
                    continue;
                }
                const Arc outer{walk[0], walk[1]};
                const StronglyPlanarReport report = strongly_planar_check(q, rot, outer);
                if (report.pass) {
                    return std::make_pair(rot, outer);
                }
            }
        }
        int v = 0;
        while (v < n &&
               !std::next_permutation(rot.order[v].begin() + 1, rot.order[v].end())) {
            ++v;
        }
        if (v == n) {
            return std::nullopt;
        }
    }
}

} // namespace toric
