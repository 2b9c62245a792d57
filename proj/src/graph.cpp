#include "spanner/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "spanner/util.hpp"

namespace spanner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack in the greedy test "d_S > t * d": keeps FP noise from
// adding spurious edges on symmetric instances.  Oracles match it.
constexpr double kGreedySlack = 1e-12;

struct PairRec {
    double d;
    VertexId i;
    VertexId j;
};

std::vector<PairRec> sorted_pairs(const PointSet& pts) {
    const std::size_t n = pts.size();
    std::vector<PairRec> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            pairs.push_back({dist(pts[i], pts[j]), i, j});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const PairRec& a, const PairRec& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return pairs;
}

void validate_build_input(const PointSet& points, const SpannerConfig& cfg) {
    require(!points.empty(), Errc::invalid_params, "point set is empty");
    require(cfg.t > 1.0, Errc::invalid_stretch, "stretch factor must exceed 1");
    require(!points.has_duplicates(), Errc::duplicate_points,
            "point set contains duplicate points");
}

// Reusable Dijkstra workspace with stamped distance resets.
class DijkstraScratch {
public:
    explicit DijkstraScratch(std::size_t n)
        : dist_(n, kInf), parent_(n, kNoVertex), stamp_(n, 0) {}

    static constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

    // Runs Dijkstra from `source` over `adj`, ignoring edge `skip_edge`,
    // settling only vertices with distance <= bound.  Stops early once
    // `target` is settled (pass kNoVertex to settle everything in range).
    // Returns the settled vertices.
    const std::vector<VertexId>& run(
        const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& adj,
        const std::vector<GraphEdge>& edges, VertexId source, VertexId target,
        double bound, EdgeId skip_edge = static_cast<EdgeId>(-1)) {
        ++round_;
        settled_.clear();
        heap_.clear();
        set_dist(source, 0.0);
        heap_.push_back({0.0, source});
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), cmp_);
            const HeapItem top = heap_.back();
            heap_.pop_back();
            if (top.d > bound) break;
            if (top.d > get_dist(top.v)) continue;  // stale entry
            settled_.push_back(top.v);
            if (top.v == target) break;
            for (const auto& [w, e] : adj[top.v]) {
                if (e == skip_edge) continue;
                const double nd = top.d + edges[e].length;
                if (nd > bound) continue;
                if (nd < get_dist(w)) {
                    set_dist(w, nd);
                    parent_[w] = top.v;
                    heap_.push_back({nd, w});
                    std::push_heap(heap_.begin(), heap_.end(), cmp_);
                }
            }
        }
        return settled_;
    }

    double distance(VertexId v) const { return get_dist(v); }
    VertexId parent(VertexId v) const { return stamp_[v] == round_ ? parent_[v] : kNoVertex; }

private:
    struct HeapItem {
        double d;
        VertexId v;
    };
    struct Cmp {
        bool operator()(const HeapItem& a, const HeapItem& b) const {
            if (a.d != b.d) return a.d > b.d;
            return a.v > b.v;
        }
    };

    double get_dist(VertexId v) const { return stamp_[v] == round_ ? dist_[v] : kInf; }
    void set_dist(VertexId v, double d) {
        if (stamp_[v] != round_) {
            stamp_[v] = round_;
            parent_[v] = kNoVertex;
        }
        dist_[v] = d;
    }

    std::vector<double> dist_;
    std::vector<VertexId> parent_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t round_ = 0;
    std::vector<HeapItem> heap_;
    std::vector<VertexId> settled_;
    Cmp cmp_;
};

// Full distance-cache matrix is only worth its memory at desk scale.
constexpr std::size_t kCacheLimit = 6000;

}  // namespace

SpannerGraph SpannerGraph::from_edges(
    PointSet points, const std::vector<std::pair<VertexId, VertexId>>& edges,
    double stretch) {
    SpannerGraph g;
    g.points_ = std::move(points);
    g.stretch_ = stretch;
    g.edges_.reserve(edges.size());
    const std::size_t n = g.points_.size();
    for (auto [a, b] : edges) {
        require(a < n && b < n, Errc::unknown_vertex, "edge endpoint out of range");
        require(a != b, Errc::invalid_params, "self-loop edge");
        if (a > b) std::swap(a, b);
        g.edges_.push_back({a, b, dist(g.points_[a], g.points_[b])});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return x.i < y.i || (x.i == y.i && x.j < y.j);
    });
    for (std::size_t k = 1; k < g.edges_.size(); ++k) {
        require(g.edges_[k - 1].i != g.edges_[k].i || g.edges_[k - 1].j != g.edges_[k].j,
                Errc::invalid_params, "duplicate edge");
    }
    g.rebuild_adjacency();
    return g;
}

void SpannerGraph::rebuild_adjacency() {
    adj_.assign(points_.size(), {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        adj_[edges_[e].i].push_back({edges_[e].j, e});
        adj_[edges_[e].j].push_back({edges_[e].i, e});
    }
}

std::size_t SpannerGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
}

double SpannerGraph::total_weight() const {
    double w = 0.0;
    for (const GraphEdge& e : edges_) w += e.length;
    return w;
}

bool SpannerGraph::connected() const {
    const std::size_t n = points_.size();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

namespace {

SpannerGraph run_greedy(const PointSet& points, const SpannerConfig& cfg, bool fast) {
    validate_build_input(points, cfg);
    const std::size_t n = points.size();

    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);

    DijkstraScratch scratch(n);
    std::vector<double> cache;
    const bool use_cache = fast && n <= kCacheLimit;
    if (use_cache) cache.assign(n * n, kInf);

    auto cached = [&](VertexId a, VertexId b) -> double& {
        return cache[static_cast<std::size_t>(a) * n + b];
    };

    for (const PairRec& rec : sorted_pairs(points)) {
        const double thresh = cfg.t * rec.d * (1.0 + kGreedySlack);
        bool add;
        if (!fast) {
            scratch.run(adj, edges, rec.i, rec.j, kInf);
            add = scratch.distance(rec.j) > thresh;
        } else {
            if (use_cache && cached(rec.i, rec.j) <= thresh) continue;
            const auto& settled =
                scratch.run(adj, edges, rec.i, DijkstraScratch::kNoVertex, thresh);
            if (use_cache) {
                for (VertexId v : settled) {
                    const double dv = scratch.distance(v);
                    if (dv < cached(rec.i, v)) {
                        cached(rec.i, v) = dv;
                        cached(v, rec.i) = dv;
                    }
                }
            }
            add = scratch.distance(rec.j) > thresh;
        }
        if (add) {
            const EdgeId e = static_cast<EdgeId>(edges.size());
            edges.push_back({rec.i, rec.j, rec.d});
            adj[rec.i].push_back({rec.j, e});
            adj[rec.j].push_back({rec.i, e});
            if (use_cache) {
                cached(rec.i, rec.j) = rec.d;
                cached(rec.j, rec.i) = rec.d;
            }
        }
    }

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges.size());
    for (const GraphEdge& e : edges) pairs.push_back({e.i, e.j});
    return SpannerGraph::from_edges(points, pairs, cfg.t);
}

}  // namespace

SpannerGraph greedy_spanner_naive(const PointSet& points, const SpannerConfig& cfg) {
    return run_greedy(points, cfg, /*fast=*/false);
}

SpannerGraph greedy_spanner_fast(const PointSet& points, const SpannerConfig& cfg) {
    return run_greedy(points, cfg, /*fast=*/true);
}

PathResult shortest_path(const SpannerGraph& g, VertexId u, VertexId v) {
    const std::size_t n = g.vertex_count();
    require(u < n && v < n, Errc::unknown_vertex, "vertex id out of range");
    if (u == v) return {0.0, {u}};

    DijkstraScratch scratch(n);
    scratch.run(g.neighbors_all(), g.edges(), u, v, kInf);
    if (scratch.distance(v) == kInf) return {kInf, {}};

    PathResult res;
    res.length = scratch.distance(v);
    for (VertexId cur = v; cur != DijkstraScratch::kNoVertex; cur = scratch.parent(cur)) {
        res.path.push_back(cur);
        if (cur == u) break;
    }
    std::reverse(res.path.begin(), res.path.end());
    return res;
}

std::vector<double> sssp_baseline(const SpannerGraph& g, VertexId source) {
    const std::size_t n = g.vertex_count();
    require(source < n, Errc::unknown_vertex, "vertex id out of range");
    DijkstraScratch scratch(n);
    scratch.run(g.neighbors_all(), g.edges(), source, DijkstraScratch::kNoVertex, kInf);
    std::vector<double> out(n, kInf);
    for (VertexId v = 0; v < n; ++v) out[v] = scratch.distance(v);
    return out;
}

StretchReport verify_stretch(const SpannerGraph& g, double t) {
    const std::size_t n = g.vertex_count();
    StretchReport report;
    if (n < 2) return report;

    std::vector<double> max_by_source(n, 0.0);
    std::vector<std::vector<StretchViolation>> viol_by_source(n);

    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        DijkstraScratch scratch(n);
        for (std::size_t u = begin; u < end; ++u) {
            scratch.run(g.neighbors_all(), g.edges(), static_cast<VertexId>(u),
                        DijkstraScratch::kNoVertex, kInf);
            for (VertexId v = static_cast<VertexId>(u) + 1; v < n; ++v) {
                const double de = dist(g.points()[u], g.points()[v]);
                const double ds = scratch.distance(v);
                const double ratio = de > 0.0 ? ds / de : (ds == 0.0 ? 1.0 : kInf);
                max_by_source[u] = std::max(max_by_source[u], ratio);
                if (ratio > t * (1.0 + 1e-9)) {
                    viol_by_source[u].push_back({static_cast<VertexId>(u), v, ratio});
                }
            }
        }
    });

    for (std::size_t u = 0; u < n; ++u) {
        report.max_observed_ratio = std::max(report.max_observed_ratio, max_by_source[u]);
        report.violating_pairs.insert(report.violating_pairs.end(),
                                      viol_by_source[u].begin(), viol_by_source[u].end());
    }
    return report;
}

ShortcutReport verify_no_shortcut(const SpannerGraph& g, double t) {
    const std::size_t m = g.edge_count();
    ShortcutReport report;
    report.worst_margin = kInf;
    if (m == 0) return report;

    std::vector<double> margin(m, kInf);
    std::vector<char> flagged(m, 0);

    parallel_for(m, [&](std::size_t begin, std::size_t end) {
        DijkstraScratch scratch(g.vertex_count());
        for (std::size_t e = begin; e < end; ++e) {
            const GraphEdge& ge = g.edges()[e];
            scratch.run(g.neighbors_all(), g.edges(), ge.i, ge.j, kInf,
                        static_cast<EdgeId>(e));
            const double alt = scratch.distance(ge.j);
            margin[e] = alt / (t * ge.length);
            if (alt <= t * ge.length * (1.0 + 1e-9)) flagged[e] = 1;
        }
    });

    for (std::size_t e = 0; e < m; ++e) {
        report.worst_margin = std::min(report.worst_margin, margin[e]);
        if (flagged[e]) report.violating_edges.push_back(static_cast<EdgeId>(e));
    }
    return report;
}

}  // namespace spanner
