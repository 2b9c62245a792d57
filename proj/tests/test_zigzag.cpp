#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "spanner/zigzag.hpp"

using namespace spanner;

namespace {

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const SpannerGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const GraphEdge& e : g.edges()) out.push_back({e.i, e.j});
    return out;
}

bool only_consecutive_edges(const SpannerGraph& g) {
    if (g.edge_count() != g.vertex_count() - 1) return false;
    for (std::size_t k = 0; k + 1 < g.vertex_count(); ++k) {
        const auto& e = g.edges()[k];
        if (e.i != k || e.j != k + 1) return false;
    }
    return true;
}

// Interior vertex angle of a generated zig-zag, in degrees.
double interior_angle_deg(const PointSet& pts, std::size_t i) {
    const Point& a = pts[i - 1];
    const Point& b = pts[i];
    const Point& c = pts[i + 1];
    const double ux = a.x - b.x, uy = a.y - b.y;
    const double vx = c.x - b.x, vy = c.y - b.y;
    const double cosv = (ux * vx + uy * vy) /
                        (std::hypot(ux, uy) * std::hypot(vx, vy));
    return std::acos(std::clamp(cosv, -1.0, 1.0)) * 180.0 / std::acos(-1.0);
}

}  // namespace

TEST_CASE("zig-zag point formula") {
    ZigZagSpec flat{{0, 0}, 1.0, 0.0, 4, {1, 0}};
    const PointSet f = zigzag_points(flat);
    REQUIRE(f.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(f[i].x == static_cast<double>(i));
        CHECK(f[i].y == 0.0);
    }

    ZigZagSpec tent{{0, 0}, 1.0, 1.0, 3, {1, 0}};
    const PointSet t = zigzag_points(tent);
    CHECK(t[0] == Point{0, 0});
    CHECK(t[1] == Point{1, 1});
    CHECK(t[2] == Point{2, 0});

    const double s = std::sqrt(3.0);
    ZigZagSpec tall{{0, 0}, 1.0, s, 3, {1, 0}};
    const PointSet u = zigzag_points(tall);
    CHECK(u[1].x == doctest::Approx(1.0));
    CHECK(u[1].y == doctest::Approx(s));
}

TEST_CASE("zig-zag points satisfy the defining formula bit for bit") {
    ZigZagSpec spec{{0.25, -1.5}, 0.75, 1.2, 9, {3, 4}};
    const PointSet pts = zigzag_points(spec);
    const double norm = std::hypot(spec.direction.x, spec.direction.y);
    const double ux = spec.direction.x / norm, uy = spec.direction.y / norm;
    const double px = -uy, py = ux;
    for (std::uint32_t i = 0; i < spec.count; ++i) {
        const double along = i * spec.dx;
        const double offset = (i % 2) * spec.s * spec.dx;
        CHECK(pts[i].x == spec.origin.x + along * ux + offset * px);
        CHECK(pts[i].y == spec.origin.y + along * uy + offset * py);
    }
}

TEST_CASE("zig-zag spanner boundary") {
    CHECK(zigzag_is_spanner(std::sqrt(3.0), 2.0));
    CHECK(zigzag_is_spanner(0.0, 1.01));
    CHECK_FALSE(zigzag_is_spanner(std::sqrt(3.0) + 0.01, 2.0));
    CHECK_THROWS_AS((void)zigzag_is_spanner(1.0, 0.9), Error);
}

TEST_CASE("greedy output on zig-zags matches the boundary rule") {
    const double s = std::sqrt(3.0);
    ZigZagSpec at{{0, 0}, 1.0, s, 8, {1, 0}};
    const SpannerGraph g1 = greedy_spanner_naive(zigzag_points(at), {2.0});
    CHECK(only_consecutive_edges(g1));

    ZigZagSpec over{{0, 0}, 1.0, s * 1.02, 8, {1, 0}};
    const SpannerGraph g2 = greedy_spanner_naive(zigzag_points(over), {2.0});
    CHECK(g2.edge_count() > 7);
}

TEST_CASE("zig-zag interior angles obey the stretch window") {
    // Angles sit strictly between 60 and 120 degrees iff the stretch
    // factor lies in (1/sqrt(3), sqrt(3)).
    const double lo = 1.0 / std::sqrt(3.0);
    for (double s : {lo * 1.05, 1.0, std::sqrt(3.0) * 0.95}) {
        const PointSet pts = zigzag_points({{0, 0}, 1.0, s, 5, {1, 0}});
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            const double a = interior_angle_deg(pts, i);
            CHECK(a > 60.0);
            CHECK(a < 120.0);
        }
    }
    for (double s : {lo * 0.95, std::sqrt(3.0) * 1.05}) {
        const PointSet pts = zigzag_points({{0, 0}, 1.0, s, 5, {1, 0}});
        const double a = interior_angle_deg(pts, 1);
        CHECK((a <= 60.0 || a >= 120.0));
    }
}

TEST_CASE("arrangement geometry") {
    ArrangementSpec spec{1.5, 0.2, 4, 1.0};
    const PointSet pts = three_band_arrangement(spec);
    REQUIRE(pts.size() == 8);

    const double s_outer = std::sqrt(1.5 * 1.5 - 1.0);
    const double s_mid = std::sqrt(1.7 * 1.7 - 1.0);
    CHECK(s_outer == doctest::Approx(std::sqrt(1.25)));
    CHECK(s_mid == doctest::Approx(std::sqrt(1.89)));

    // Column 0 (even): rows 2 and 4.  Column 1 (odd): rows 1 and 3.
    CHECK(pts[0] == Point{0.0, -s_outer});
    CHECK(pts[1] == Point{0.0, -(s_outer + s_mid + s_outer)});
    CHECK(pts[2] == Point{1.0, 0.0});
    CHECK(pts[3] == Point{1.0, -(s_outer + s_mid)});

    // Total height equals the sum of the three band heights.
    double lo = 0.0;
    for (const Point& p : pts) lo = std::min(lo, p.y);
    CHECK(-lo == doctest::Approx(2.0 * s_outer + s_mid));

    CHECK(three_band_arrangement({1.5, 0.2, 2, 1.0}).size() == 4);
}

TEST_CASE("arrangement validity window") {
    CHECK_THROWS_AS((void)three_band_arrangement({1.1, 0.2, 8, 1.0}), Error);
    CHECK_THROWS_AS((void)three_band_arrangement({1.9, 0.2, 8, 1.0}), Error);
    CHECK_THROWS_AS((void)three_band_arrangement({1.5, -0.1, 8, 1.0}), Error);
    CHECK_THROWS_AS((void)three_band_arrangement({1.5, 0.2, 1, 1.0}), Error);
}

TEST_CASE("band thresholds formulas") {
    const BandThresholds a = thresholds(2.0, 0.1);
    CHECK(a.no_edge_below == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(a.edge_forced_at == doctest::Approx(306.9).epsilon(1e-12));

    const BandThresholds b = thresholds(1.5, 0.2);
    CHECK(b.no_edge_below == doctest::Approx(4.6875).epsilon(1e-12));
    CHECK(b.edge_forced_at == doctest::Approx(63.7875).epsilon(1e-12));

    // The no-edge threshold falls off as 1/delta; the forced threshold
    // is dominated by the same 1/delta term for small delta.
    const BandThresholds c = thresholds(2.0, 0.01);
    const BandThresholds d = thresholds(2.0, 0.1);
    CHECK(c.no_edge_below > d.no_edge_below);
    CHECK(c.edge_forced_at > d.edge_forced_at);
    CHECK(d.no_edge_below > 0.0);
}

TEST_CASE("outer bands never gain internal edges") {
    ArrangementSpec spec{1.5, 0.2, 40, 1.0};
    const SpannerGraph g = greedy_spanner_naive(three_band_arrangement(spec), {spec.t});
    // Row of a point: see three_band_arrangement's column layout.
    auto row = [](VertexId v) {
        const bool odd_col = ((v / 2) % 2) != 0;
        const bool upper = (v % 2) == 0;
        return odd_col ? (upper ? 1 : 3) : (upper ? 2 : 4);
    };
    auto col = [](VertexId v) { return static_cast<int>(v / 2); };
    for (const GraphEdge& e : g.edges()) {
        const int r1 = std::min(row(e.i), row(e.j));
        const int r2 = std::max(row(e.i), row(e.j));
        const bool in_upper_band = r1 >= 1 && r2 <= 2;
        const bool in_lower_band = r1 >= 3 && r2 <= 4;
        if (in_upper_band || in_lower_band) {
            // Only the band's own zig-zag edges: consecutive columns.
            CHECK(std::abs(col(e.i) - col(e.j)) == 1);
            CHECK(r1 != r2);
        }
    }
}

TEST_CASE("long edge analysis on a small arrangement") {
    ArrangementSpec spec{1.5, 0.2, 40, 1.0};
    const SpannerGraph g = greedy_spanner_naive(three_band_arrangement(spec), {spec.t});
    const LongEdgeReport rep = analyze_long_edge(g, spec);
    CHECK(rep.thresholds.no_edge_below == doctest::Approx(4.6875));
    CHECK(static_cast<double>(rep.column_gap) > rep.thresholds.no_edge_below);
    CHECK(rep.middle_crossings + 2 >= rep.column_gap);
    // Frozen from the reference construction: the first band-to-band
    // edges appear at column gap 9 and cross 7 middle edges.
    CHECK(rep.column_gap == 9);
    CHECK(rep.middle_crossings == 7);
}

TEST_CASE("crossing counts grow as delta shrinks") {
    std::vector<std::uint32_t> counts;
    for (double delta : {0.4, 0.2, 0.1}) {
        ArrangementSpec spec{1.5, delta, 48, 1.0};
        const SpannerGraph g = greedy_spanner_naive(three_band_arrangement(spec), {spec.t});
        counts.push_back(analyze_long_edge(g, spec).middle_crossings);
    }
    // Frozen counts: 1/delta scaling of the forced column gap.
    CHECK(counts == std::vector<std::uint32_t>{3, 7, 11});
}

TEST_CASE("no long edge below the threshold") {
    ArrangementSpec spec{1.5, 0.2, 4, 1.0};
    const SpannerGraph g = greedy_spanner_naive(three_band_arrangement(spec), {spec.t});
    CHECK_THROWS_AS((void)analyze_long_edge(g, spec), Error);
    try {
        (void)analyze_long_edge(g, spec);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_long_edge);
    }
}

TEST_CASE("analysis rejects mismatched graphs") {
    ArrangementSpec spec{1.5, 0.2, 8, 1.0};
    const SpannerGraph other = greedy_spanner_naive(
        PointSet({{0, 0}, {1, 0}, {2, 0}}), {1.5});
    CHECK_THROWS_AS((void)analyze_long_edge(other, spec), Error);
}
