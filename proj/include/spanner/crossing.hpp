#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spanner/graph.hpp"

namespace spanner {

/// Abstract graph whose nodes are spanner edges; two nodes are adjacent
/// iff the corresponding segments cross at an interior point.
struct CrossingGraph {
    std::vector<std::vector<EdgeId>> adj;  // sorted, symmetric, irreflexive

    struct Crossing {
        EdgeId e1;  // e1 < e2
        EdgeId e2;
        Point at;
    };
    std::vector<Crossing> crossings;  // sorted by (e1, e2)

    std::size_t node_count() const { return adj.size(); }
    std::size_t crossing_count() const { return crossings.size(); }
    std::optional<Point> crossing_point_of(EdgeId a, EdgeId b) const;
};

/// Brute-force pair scan over the embedded edges.  Rejects drawings
/// outside general position: collinear overlapping edges and crossing
/// points closer than 1e-12 * diameter.
CrossingGraph build_crossing_graph(const SpannerGraph& g);

struct DegeneracyResult {
    std::uint32_t k = 0;
    // Witness: each node has at most k neighbors later in the order.
    std::vector<EdgeId> peel_order;
};

/// Exact degeneracy by iterative minimum-degree peeling.
DegeneracyResult degeneracy(const CrossingGraph& cg);

struct AngleBucketConfig {
    double theta;  // bucket width in radians
};

struct BandParams {
    double alpha;    // lower length ratio
    double beta;     // upper length ratio
    double epsilon;  // ratio floor
};

struct BoundReport {
    double c1;     // long nearly-parallel bound, summed over angle classes
    double c2;     // comparable-length band bound
    double total;  // c1 + c2
};

/// 4t / ((t - 1 - 2 sin(theta/2)) cos(theta)) + 1
double bound_long_parallel(double t, double theta);

/// [2 beta (2 beta + 1) / alpha^2 * 8 t^2 / (t-1)^2]^2
double bound_band(double t, const BandParams& p);

/// Combined bound on crossings by edges of length >= epsilon times the
/// crossed edge: c1 covers ratios >= 3t(t+1)/(t-1) over ceil(pi/theta*)
/// angle classes with theta* just inside (t-1)/(2(t+1)); c2 covers the
/// band [epsilon, 3t(t+1)/(t-1)].
BoundReport bound_total_not_smaller(double t, double epsilon);

struct CrossingProfile {
    std::uint64_t longer_count = 0;  // crossings with |PQ| >= |AB|
    // Length-ratio bands: [eps, 1), [1, 3t(t+1)/(t-1)), [3t(t+1)/(t-1), inf)
    std::array<std::uint64_t, 3> band_counts{0, 0, 0};
    // Among the top band, counts per angle class of width theta.
    std::map<std::uint32_t, std::uint64_t> angle_buckets;
};

CrossingProfile crossing_profile(const SpannerGraph& g, EdgeId edge,
                                 const AngleBucketConfig& cfg, double epsilon = 0.0);

struct GapViolation {
    EdgeId e1;
    EdgeId e2;
    double ratio;
};

struct GapReport {
    // min over pairs of (best-matching max endpoint distance) / min(len)
    double worst_ratio = 0.0;
    std::vector<GapViolation> violations;
};

/// Endpoint-gap check over all pairs of distinct edges and both endpoint
/// matchings: max(|MP|, |NQ|) >= (t-1)/(2t) * min(|MN|, |PQ|).
GapReport verify_gap_property(const SpannerGraph& g);

struct OrderingReport {
    bool ordered = true;
    std::vector<std::pair<EdgeId, EdgeId>> nested_pairs;
};

/// Projects long crossing edges of each theta-parallel class onto the
/// class baseline (smallest line angle) and reports strictly nested
/// projection intervals; greedy output must report none.
OrderingReport verify_endpoint_ordering(const SpannerGraph& g, EdgeId edge,
                                        const AngleBucketConfig& cfg);

struct LowerBoundReport {
    double worst_ratio = 0.0;
    std::vector<GapViolation> violations;
};

/// Direction-aligned endpoint lower bound over all theta-parallel edge
/// pairs: min(|MP|, |NQ|) >= (t-1-2 sin(theta/2))/(2t) * min(|MN|, |PQ|).
LowerBoundReport verify_parallel_lower_bound(const SpannerGraph& g, double theta);

}  // namespace spanner
