#include "spanner/zigzag.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace spanner {

namespace {

// Interior zig-zag angles lie strictly between 60 and 120 degrees iff
// the stretch factor lies in (1/sqrt(3), sqrt(3)); for s = sqrt(t^2-1)
// that window is t in (sqrt(4/3), 2).
const double kMinT = std::sqrt(4.0 / 3.0);

double band_stretch(double t) { return std::sqrt(t * t - 1.0); }

int column_of(VertexId v) { return static_cast<int>(v / 2); }

// Rows 1..4, top to bottom; see three_band_arrangement for the layout.
int row_of(VertexId v) {
    const bool odd_col = (column_of(v) % 2) != 0;
    const bool upper = (v % 2) == 0;
    if (odd_col) return upper ? 1 : 3;
    return upper ? 2 : 4;
}

}  // namespace

PointSet zigzag_points(const ZigZagSpec& spec) {
    require(spec.dx > 0.0, Errc::invalid_params, "dx must be positive");
    require(spec.s >= 0.0, Errc::invalid_params, "stretch factor must be nonnegative");
    require(spec.count >= 2, Errc::invalid_params, "a zig-zag needs at least 2 points");
    const double norm = std::hypot(spec.direction.x, spec.direction.y);
    require(norm > 0.0, Errc::invalid_params, "direction must be nonzero");

    const double ux = spec.direction.x / norm;
    const double uy = spec.direction.y / norm;
    const double px = -uy;  // +90 degree rotation
    const double py = ux;

    std::vector<Point> pts;
    pts.reserve(spec.count);
    for (std::uint32_t i = 0; i < spec.count; ++i) {
        const double along = i * spec.dx;
        const double offset = (i % 2) * spec.s * spec.dx;
        pts.push_back(Point{spec.origin.x + along * ux + offset * px,
                            spec.origin.y + along * uy + offset * py});
    }
    return PointSet(std::move(pts));
}

bool zigzag_is_spanner(double s, double t) {
    require(t > 1.0, Errc::invalid_stretch, "stretch factor must exceed 1");
    require(s >= 0.0, Errc::invalid_params, "zig-zag stretch must be nonnegative");
    return s <= std::sqrt(t * t - 1.0);
}

PointSet three_band_arrangement(const ArrangementSpec& spec) {
    require(spec.dx > 0.0, Errc::invalid_params, "dx must be positive");
    require(spec.columns >= 2, Errc::invalid_params, "at least 2 columns required");
    require(spec.delta > 0.0, Errc::invalid_params, "delta must be positive");
    require(spec.t > kMinT && spec.t + spec.delta < 2.0, Errc::invalid_params,
            "need sqrt(4/3) < t and t + delta < 2 for valid zig-zag angles");

    const double s_outer = band_stretch(spec.t);
    const double s_mid = band_stretch(spec.t + spec.delta);
    const double y1 = 0.0;
    const double y2 = -s_outer * spec.dx;
    const double y3 = y2 - s_mid * spec.dx;
    const double y4 = y3 - s_outer * spec.dx;

    std::vector<Point> pts;
    pts.reserve(2 * spec.columns);
    for (std::uint32_t c = 0; c < spec.columns; ++c) {
        const double x = c * spec.dx;
        if (c % 2 != 0) {
            pts.push_back(Point{x, y1});
            pts.push_back(Point{x, y3});
        } else {
            pts.push_back(Point{x, y2});
            pts.push_back(Point{x, y4});
        }
    }
    return PointSet(std::move(pts));
}

BandThresholds thresholds(double t, double delta) {
    require(t > 1.0, Errc::invalid_stretch, "stretch factor must exceed 1");
    require(delta > 0.0, Errc::invalid_params, "delta must be positive");
    BandThresholds th;
    th.no_edge_below = t * (t * t - 1.0) / (2.0 * delta);
    th.edge_forced_at = 9.0 * t * ((t + delta) * (t + delta) - 1.0) / (2.0 * delta);
    return th;
}

LongEdgeReport analyze_long_edge(const SpannerGraph& g, const ArrangementSpec& spec) {
    const PointSet expected = three_band_arrangement(spec);
    require(g.vertex_count() == expected.size(), Errc::invalid_params,
            "graph does not match the arrangement");
    for (std::size_t v = 0; v < expected.size(); ++v) {
        require(g.points()[v] == expected[v], Errc::invalid_params,
                "graph does not match the arrangement");
    }

    const BandThresholds th = thresholds(spec.t, spec.delta);

    // Middle-band zig-zag edges: consecutive columns between rows 2 and 3.
    std::vector<Segment> middle_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ge = g.edges()[e];
        const int r1 = row_of(ge.i);
        const int r2 = row_of(ge.j);
        if (std::min(r1, r2) == 2 && std::max(r1, r2) == 3 &&
            std::abs(column_of(ge.i) - column_of(ge.j)) == 1) {
            middle_edges.push_back(g.segment(e));
        }
    }

    LongEdgeReport best;
    best.thresholds = th;
    bool found = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ge = g.edges()[e];
        const int r_i = row_of(ge.i);
        const int r_j = row_of(ge.j);
        const bool upper_i = r_i <= 2;
        const bool upper_j = r_j <= 2;
        if (upper_i == upper_j) continue;
        const auto gap = static_cast<std::uint32_t>(
            std::abs(column_of(ge.i) - column_of(ge.j)));
        if (static_cast<double>(gap) <= th.no_edge_below) continue;

        const Segment seg = g.segment(e);
        std::uint32_t crossings = 0;
        for (const Segment& m : middle_edges) {
            if (segments_cross(seg, m)) ++crossings;
        }
        if (!found || crossings > best.middle_crossings) {
            found = true;
            best.u = upper_i ? ge.i : ge.j;
            best.b = upper_i ? ge.j : ge.i;
            best.column_gap = gap;
            best.middle_crossings = crossings;
        }
    }
    require(found, Errc::no_long_edge,
            "no edge joins the outer bands beyond the no-edge threshold");
    return best;
}

}  // namespace spanner
