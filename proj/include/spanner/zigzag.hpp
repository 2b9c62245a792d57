#pragma once

#include <cstdint>

#include "spanner/graph.hpp"

namespace spanner {

struct ZigZagSpec {
    Point origin{0.0, 0.0};
    double dx = 1.0;          // |step| along the direction
    double s = 0.0;           // stretch factor |dy| / |dx|
    std::uint32_t count = 2;  // number of points
    Point direction{1.0, 0.0};
};

/// P_i = origin + i * dx * dir + (i mod 2) * s * dx * perp(dir),
/// perp rotating the unit direction by +90 degrees.
PointSet zigzag_points(const ZigZagSpec& spec);

/// The connected zig-zag path is a t-spanner iff s <= sqrt(t^2 - 1).
bool zigzag_is_spanner(double s, double t);

struct ArrangementSpec {
    double t = 1.5;
    double delta = 0.2;          // stretch excess of the middle band
    std::uint32_t columns = 16;  // x-columns, two points per column
    double dx = 1.0;
};

/// Three stacked zig-zag bands on four rows: the outer bands have the
/// largest stretch that still forms a t-spanner, the middle band is
/// stretched slightly beyond it.  Odd columns carry rows 1 and 3, even
/// columns rows 2 and 4; point ids go column by column, upper row first.
PointSet three_band_arrangement(const ArrangementSpec& spec);

struct BandThresholds {
    double no_edge_below;   // t(t^2-1)/(2 delta): no top-bottom edge needed below
    double edge_forced_at;  // 9t((t+delta)^2-1)/(2 delta): an edge is forced at
};

BandThresholds thresholds(double t, double delta);

struct LongEdgeReport {
    VertexId u = 0;  // upper-band endpoint
    VertexId b = 0;  // lower-band endpoint
    std::uint32_t column_gap = 0;
    std::uint32_t middle_crossings = 0;
    BandThresholds thresholds{};
};

/// Scans the spanner of an arrangement for edges joining the upper rows
/// (1, 2) to the lower rows (3, 4) with column gap above no_edge_below
/// and reports the one crossing the most middle-band zig-zag edges.
/// Raises no_long_edge when no such edge exists.
LongEdgeReport analyze_long_edge(const SpannerGraph& g, const ArrangementSpec& spec);

}  // namespace spanner
