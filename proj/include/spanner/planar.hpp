#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spanner/crossing.hpp"
#include "spanner/graph.hpp"

namespace spanner {

/// Crossing-free straight-line graph obtained by subdividing every
/// crossing of an embedded graph at a degree-4 dummy vertex.  Vertices
/// [0, original_count) are the original points; the rest are dummies.
struct Planarization {
    std::vector<Point> coords;
    std::size_t original_count = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;   // sub-segments
    std::vector<std::pair<EdgeId, EdgeId>> dummy_origins;  // per dummy: crossing edge pair
    std::vector<EdgeId> edge_origin;  // originating spanner edge per sub-segment

    std::size_t vertex_count() const { return coords.size(); }
    std::size_t dummy_count() const { return coords.size() - original_count; }
    bool is_dummy(VertexId v) const { return v >= original_count; }

    /// Wraps an already-planar straight-line drawing (no dummies).
    static Planarization plane_graph(std::vector<Point> coords,
                                     std::vector<std::pair<VertexId, VertexId>> edges);
};

/// Splits each edge at its sorted interior crossing points.  Propagates
/// the general-position checks of build_crossing_graph.
Planarization planarize(const SpannerGraph& g);

struct Separator {
    std::vector<VertexId> vertices;  // removal disconnects side_a from side_b
    std::vector<VertexId> side_a;
    std::vector<VertexId> side_b;
    double balance = 0.0;  // max-side weight / total weight
};

/// Declared size constant: planar_separator returns at most
/// kSeparatorSizeFactor * sqrt(N) vertices or fails loudly.
inline const double kSeparatorSizeFactor = 4.0 * 1.4142135623730951;

/// BFS-level separator with a fundamental-cycle refinement on a
/// triangulated copy of the drawing.  Weighted balance <= 2/3; size at
/// most kSeparatorSizeFactor * sqrt(N).  Violations of either guarantee
/// raise separator_guarantee instead of degrading.
Separator planar_separator(const Planarization& p, const std::vector<double>& weights);

/// Separator of the spanner itself: planarize, weight dummies 0, run
/// planar_separator, then replace each selected dummy by both endpoints
/// of the shorter of its two crossing edges.  Size at most
/// 2 * kSeparatorSizeFactor * sqrt(N) over original vertices.
Separator spanner_separator(const SpannerGraph& g);

struct SeparatorTree {
    Separator separator;                  // meaningful at internal nodes
    std::vector<VertexId> leaf_vertices;  // nonempty iff leaf
    std::vector<SeparatorTree> children;

    bool is_leaf() const { return children.empty(); }
    /// Internal nodes along the deepest root-to-leaf path.
    std::size_t depth() const;
};

/// Recursively separates until every remaining component has at most
/// `cutoff` vertices.  Handles disconnected pieces by component packing.
SeparatorTree separator_hierarchy(const SpannerGraph& g, std::uint32_t cutoff);

}  // namespace spanner
