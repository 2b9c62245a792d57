#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spanner/point_set.hpp"

namespace spanner {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class TieBreak {
    // Equal-distance pairs ordered by (min id, max id) ascending.
    distance_then_ids,
};

struct SpannerConfig {
    double t = 2.0;
    TieBreak tie_break = TieBreak::distance_then_ids;
};

struct GraphEdge {
    VertexId i;  // i < j (canonical form)
    VertexId j;
    double length;
};

/// Embedded geometric graph: points plus undirected edges with cached
/// lengths.  Immutable once built; safe to share across threads.
class SpannerGraph {
public:
    SpannerGraph() = default;

    /// Builds a graph from explicit edges (test fixtures, file input).
    /// Edges are canonicalized to i < j; duplicates and self-loops are
    /// rejected.  `stretch` records the t the graph is checked against.
    static SpannerGraph from_edges(PointSet points,
                                   const std::vector<std::pair<VertexId, VertexId>>& edges,
                                   double stretch);

    const PointSet& points() const { return points_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return points_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    double stretch() const { return stretch_; }

    /// (neighbor, edge id) pairs of v.
    const std::vector<std::pair<VertexId, EdgeId>>& neighbors(VertexId v) const {
        return adj_[v];
    }

    const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& neighbors_all() const {
        return adj_;
    }

    Segment segment(EdgeId e) const {
        const GraphEdge& ge = edges_[e];
        return Segment{points_[ge.i], points_[ge.j]};
    }

    std::size_t max_degree() const;
    double total_weight() const;
    bool connected() const;

private:
    void rebuild_adjacency();

    PointSet points_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    double stretch_ = 0.0;
};

/// Reference greedy construction: pairs scanned by (distance, id order);
/// a pair gets an edge iff its current graph distance exceeds
/// t * d * (1 + 1e-12), with the distance recomputed by Dijkstra per pair.
SpannerGraph greedy_spanner_naive(const PointSet& points, const SpannerConfig& cfg);

/// Same edge set as the naive construction, computed with distance-bounded
/// Dijkstra searches and cached distance upper bounds instead of a full
/// recomputation per pair.
SpannerGraph greedy_spanner_fast(const PointSet& points, const SpannerConfig& cfg);

struct PathResult {
    double length = 0.0;          // +inf when disconnected
    std::vector<VertexId> path;   // empty when disconnected
};

PathResult shortest_path(const SpannerGraph& g, VertexId u, VertexId v);

/// Dijkstra distances from source to every vertex (+inf if unreachable).
std::vector<double> sssp_baseline(const SpannerGraph& g, VertexId source);

struct StretchViolation {
    VertexId u;
    VertexId v;
    double ratio;
};

struct StretchReport {
    double max_observed_ratio = 1.0;
    std::vector<StretchViolation> violating_pairs;  // ratio > t * (1 + 1e-9)
};

/// All-pairs check of graph distance vs t * Euclidean distance.
StretchReport verify_stretch(const SpannerGraph& g, double t);

struct ShortcutReport {
    // min over edges of (alternative path length) / (t * |edge|)
    double worst_margin = 0.0;
    std::vector<EdgeId> violating_edges;
};

/// For each edge AB checks that the shortest A-B path avoiding AB is
/// longer than t * |AB|; greedy output must have no violations.
ShortcutReport verify_no_shortcut(const SpannerGraph& g, double t);

}  // namespace spanner
