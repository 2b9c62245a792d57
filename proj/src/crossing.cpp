#include "spanner/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spanner/util.hpp"

namespace spanner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kPi = std::acos(-1.0);

double require_stretch(const SpannerGraph& g) {
    require(g.stretch() > 1.0, Errc::invalid_params,
            "graph carries no stretch factor > 1");
    return g.stretch();
}

double long_ratio(double t) { return 3.0 * t * (t + 1.0) / (t - 1.0); }

struct BBox {
    double lox, loy, hix, hiy;
};

BBox bbox_of(const Segment& s) {
    return {std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y),
            std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)};
}

bool boxes_touch(const BBox& a, const BBox& b) {
    return a.lox <= b.hix && b.lox <= a.hix && a.loy <= b.hiy && b.loy <= a.hiy;
}

}  // namespace

std::optional<Point> CrossingGraph::crossing_point_of(EdgeId a, EdgeId b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(crossings.begin(), crossings.end(), std::make_pair(a, b),
                               [](const Crossing& c, const std::pair<EdgeId, EdgeId>& key) {
                                   return c.e1 < key.first ||
                                          (c.e1 == key.first && c.e2 < key.second);
                               });
    if (it != crossings.end() && it->e1 == a && it->e2 == b) return it->at;
    return std::nullopt;
}

CrossingGraph build_crossing_graph(const SpannerGraph& g) {
    const std::size_t m = g.edge_count();
    CrossingGraph cg;
    cg.adj.assign(m, {});

    std::vector<Segment> segs(m);
    std::vector<BBox> boxes(m);
    for (EdgeId e = 0; e < m; ++e) {
        segs[e] = g.segment(e);
        boxes[e] = bbox_of(segs[e]);
    }

    // Deterministic, schedule-independent: per-edge rows filled in slots.
    std::vector<std::vector<CrossingGraph::Crossing>> rows(m);
    std::vector<std::string> row_error(m);
    parallel_for(m, [&](std::size_t begin, std::size_t end) {
        for (std::size_t e1 = begin; e1 < end; ++e1) {
            for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
                if (!boxes_touch(boxes[e1], boxes[e2])) continue;
                try {
                    if (segments_cross(segs[e1], segs[e2])) {
                        rows[e1].push_back({static_cast<EdgeId>(e1),
                                            static_cast<EdgeId>(e2),
                                            crossing_point(segs[e1], segs[e2])});
                    }
                } catch (const Error& err) {
                    if (row_error[e1].empty()) row_error[e1] = err.what();
                }
            }
        }
    });
    for (std::size_t e = 0; e < m; ++e) {
        if (!row_error[e].empty()) raise(Errc::degenerate_overlap, row_error[e]);
    }

    for (auto& row : rows) {
        for (const auto& c : row) {
            cg.adj[c.e1].push_back(c.e2);
            cg.adj[c.e2].push_back(c.e1);
            cg.crossings.push_back(c);
        }
    }
    for (auto& nbrs : cg.adj) std::sort(nbrs.begin(), nbrs.end());
    std::sort(cg.crossings.begin(), cg.crossings.end(),
              [](const CrossingGraph::Crossing& a, const CrossingGraph::Crossing& b) {
                  return a.e1 < b.e1 || (a.e1 == b.e1 && a.e2 < b.e2);
              });

    // General position: pairwise crossing points must stay apart.
    const double tol = 1e-12 * g.points().diameter();
    const std::size_t c = cg.crossings.size();
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
            if (dist(cg.crossings[a].at, cg.crossings[b].at) < tol) {
                raise(Errc::coincident_crossings,
                      "two crossing points coincide within tolerance");
            }
        }
    }
    return cg;
}

DegeneracyResult degeneracy(const CrossingGraph& cg) {
    const std::size_t n = cg.node_count();
    DegeneracyResult res;
    res.peel_order.reserve(n);
    if (n == 0) return res;

    // Bucketed minimum-degree peeling.
    std::vector<std::size_t> deg(n);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = cg.adj[v].size();
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<EdgeId>> buckets(max_deg + 1);
    for (std::size_t v = 0; v < n; ++v) buckets[deg[v]].push_back(static_cast<EdgeId>(v));

    std::vector<char> removed(n, 0);
    std::size_t cursor = 0;
    std::uint32_t k = 0;
    for (std::size_t peeled = 0; peeled < n; ++peeled) {
        while (cursor > 0 && !buckets[cursor - 1].empty()) --cursor;
        while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
        EdgeId v = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (removed[v]) {
            --peeled;
            continue;
        }
        if (deg[v] != cursor) {  // stale bucket entry
            buckets[deg[v]].push_back(v);
            --peeled;
            continue;
        }
        removed[v] = 1;
        res.peel_order.push_back(v);
        k = std::max<std::uint32_t>(k, static_cast<std::uint32_t>(deg[v]));
        for (EdgeId w : cg.adj[v]) {
            if (!removed[w]) {
                buckets[--deg[w]].push_back(w);
            }
        }
    }
    res.k = k;
    return res;
}

double bound_long_parallel(double t, double theta) {
    require(t > 1.0, Errc::invalid_params, "stretch factor must exceed 1");
    require(theta > 0.0, Errc::invalid_params, "theta must be positive");
    const double denom_core = t - 1.0 - 2.0 * std::sin(theta / 2.0);
    require(denom_core > 0.0, Errc::invalid_params,
            "t - 1 - 2 sin(theta/2) must be positive");
    return 4.0 * t / (denom_core * std::cos(theta)) + 1.0;
}

double bound_band(double t, const BandParams& p) {
    require(t > 1.0, Errc::invalid_params, "stretch factor must exceed 1");
    require(p.alpha > 0.0 && p.alpha <= p.beta, Errc::invalid_params,
            "band requires 0 < alpha <= beta");
    const double squares = 2.0 * p.beta * (2.0 * p.beta + 1.0) / (p.alpha * p.alpha) *
                           (8.0 * t * t / ((t - 1.0) * (t - 1.0)));
    return squares * squares;
}

BoundReport bound_total_not_smaller(double t, double epsilon) {
    require(t > 1.0, Errc::invalid_params, "stretch factor must exceed 1");
    require(epsilon > 0.0, Errc::invalid_params, "epsilon must be positive");
    const double theta_star = (t - 1.0) / (2.0 * (t + 1.0)) * (1.0 - 1e-6);
    const double classes = std::ceil(kPi / theta_star);
    BoundReport r;
    r.c1 = bound_long_parallel(t, theta_star) * classes;
    r.c2 = bound_band(t, BandParams{epsilon, long_ratio(t), epsilon});
    r.total = r.c1 + r.c2;
    return r;
}

CrossingProfile crossing_profile(const SpannerGraph& g, EdgeId edge,
                                 const AngleBucketConfig& cfg, double epsilon) {
    require(edge < g.edge_count(), Errc::unknown_edge, "edge id out of range");
    require(cfg.theta > 0.0, Errc::invalid_params, "theta must be positive");
    require(epsilon >= 0.0, Errc::invalid_params, "epsilon must be nonnegative");
    const double t = require_stretch(g);
    const double top = long_ratio(t);
    const Segment base = g.segment(edge);
    const double base_len = base.length();

    CrossingProfile prof;
    for (EdgeId other = 0; other < g.edge_count(); ++other) {
        if (other == edge) continue;
        const Segment seg = g.segment(other);
        if (!segments_cross(base, seg)) continue;
        const double ratio = seg.length() / base_len;
        if (ratio >= 1.0) ++prof.longer_count;
        if (ratio < epsilon) continue;
        if (ratio < 1.0) {
            ++prof.band_counts[0];
        } else if (ratio < top) {
            ++prof.band_counts[1];
        } else {
            ++prof.band_counts[2];
            const auto bucket =
                static_cast<std::uint32_t>(std::floor(line_angle(seg) / cfg.theta));
            ++prof.angle_buckets[bucket];
        }
    }
    return prof;
}

GapReport verify_gap_property(const SpannerGraph& g) {
    const double t = require_stretch(g);
    const double bound = (t - 1.0) / (2.0 * t);
    const std::size_t m = g.edge_count();

    GapReport report;
    report.worst_ratio = kInf;
    if (m < 2) return report;

    std::vector<Segment> segs(m);
    for (EdgeId e = 0; e < m; ++e) segs[e] = g.segment(e);

    std::vector<double> worst_by_edge(m, kInf);
    std::vector<std::vector<GapViolation>> viol_by_edge(m);
    parallel_for(m, [&](std::size_t begin, std::size_t end) {
        for (std::size_t e1 = begin; e1 < end; ++e1) {
            const Segment& s1 = segs[e1];
            const double len1 = s1.length();
            for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
                const Segment& s2 = segs[e2];
                const double denom = std::min(len1, s2.length());
                const double m1 = std::max(dist(s1.a, s2.a), dist(s1.b, s2.b));
                const double m2 = std::max(dist(s1.a, s2.b), dist(s1.b, s2.a));
                const double ratio = std::min(m1, m2) / denom;
                worst_by_edge[e1] = std::min(worst_by_edge[e1], ratio);
                if (ratio < bound * (1.0 - 1e-9)) {
                    viol_by_edge[e1].push_back(
                        {static_cast<EdgeId>(e1), static_cast<EdgeId>(e2), ratio});
                }
            }
        }
    });
    for (std::size_t e = 0; e < m; ++e) {
        report.worst_ratio = std::min(report.worst_ratio, worst_by_edge[e]);
        report.violations.insert(report.violations.end(), viol_by_edge[e].begin(),
                                 viol_by_edge[e].end());
    }
    return report;
}

OrderingReport verify_endpoint_ordering(const SpannerGraph& g, EdgeId edge,
                                        const AngleBucketConfig& cfg) {
    require(edge < g.edge_count(), Errc::unknown_edge, "edge id out of range");
    const double t = require_stretch(g);
    require(cfg.theta > 0.0 && cfg.theta < (t - 1.0) / (2.0 * (t + 1.0)),
            Errc::invalid_params, "theta must lie in (0, (t-1)/(2(t+1)))");

    const Segment base = g.segment(edge);
    const double min_len = long_ratio(t) * base.length();

    // Qualifying crossing edges, bucketed into theta-parallel classes.
    std::map<std::uint32_t, std::vector<EdgeId>> classes;
    for (EdgeId other = 0; other < g.edge_count(); ++other) {
        if (other == edge) continue;
        const Segment seg = g.segment(other);
        if (seg.length() < min_len) continue;
        if (!segments_cross(base, seg)) continue;
        const auto bucket =
            static_cast<std::uint32_t>(std::floor(line_angle(seg) / cfg.theta));
        classes[bucket].push_back(other);
    }

    OrderingReport report;
    for (const auto& [bucket, members] : classes) {
        if (members.size() < 2) continue;
        // Baseline: the member with the smallest line angle (ids break ties).
        EdgeId baseline = members.front();
        double best_angle = line_angle(g.segment(baseline));
        for (EdgeId e : members) {
            const double a = line_angle(g.segment(e));
            if (a < best_angle) {
                best_angle = a;
                baseline = e;
            }
        }
        const Segment bl = g.segment(baseline);
        std::vector<std::pair<double, double>> spans(members.size());
        for (std::size_t k = 0; k < members.size(); ++k) {
            auto [a, b] = project_interval(g.segment(members[k]), bl);
            spans[k] = {std::min(a, b), std::max(a, b)};
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const auto& [lo1, hi1] = spans[a];
                const auto& [lo2, hi2] = spans[b];
                const bool a_in_b = lo2 < lo1 && hi1 < hi2;
                const bool b_in_a = lo1 < lo2 && hi2 < hi1;
                if (a_in_b || b_in_a) {
                    report.nested_pairs.push_back({std::min(members[a], members[b]),
                                                   std::max(members[a], members[b])});
                }
            }
        }
    }
    std::sort(report.nested_pairs.begin(), report.nested_pairs.end());
    report.ordered = report.nested_pairs.empty();
    return report;
}

LowerBoundReport verify_parallel_lower_bound(const SpannerGraph& g, double theta) {
    const double t = require_stretch(g);
    require(theta > 0.0, Errc::invalid_params, "theta must be positive");
    const double bound = (t - 1.0 - 2.0 * std::sin(theta / 2.0)) / (2.0 * t);
    const std::size_t m = g.edge_count();

    LowerBoundReport report;
    report.worst_ratio = kInf;
    std::vector<Segment> segs(m);
    for (EdgeId e = 0; e < m; ++e) segs[e] = g.segment(e);

    for (std::size_t e1 = 0; e1 < m; ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
            const Segment& s1 = segs[e1];
            const Segment& s2 = segs[e2];
            if (angle_between(s1, s2) > theta) continue;
            // Align directions so the matching follows the segments'
            // common orientation.
            const double dot = (s1.b.x - s1.a.x) * (s2.b.x - s2.a.x) +
                               (s1.b.y - s1.a.y) * (s2.b.y - s2.a.y);
            const Point p = dot >= 0.0 ? s2.a : s2.b;
            const Point q = dot >= 0.0 ? s2.b : s2.a;
            const double value = std::min(dist(s1.a, p), dist(s1.b, q));
            const double denom = std::min(s1.length(), s2.length());
            const double ratio = value / denom;
            report.worst_ratio = std::min(report.worst_ratio, ratio);
            if (ratio < bound * (1.0 - 1e-9)) {
                report.violations.push_back(
                    {static_cast<EdgeId>(e1), static_cast<EdgeId>(e2), ratio});
            }
        }
    }
    return report;
}

}  // namespace spanner
