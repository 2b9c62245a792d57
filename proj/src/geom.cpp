#include "spanner/geom.hpp"

#include <algorithm>
#include <cmath>

namespace spanner {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "OK";
        case Errc::invalid_params: return "E_INVALID_PARAMS";
        case Errc::duplicate_points: return "E_DUPLICATE_POINTS";
        case Errc::invalid_stretch: return "E_INVALID_STRETCH";
        case Errc::unknown_vertex: return "E_UNKNOWN_VERTEX";
        case Errc::unknown_edge: return "E_UNKNOWN_EDGE";
        case Errc::degenerate_overlap: return "E_DEGENERATE_OVERLAP";
        case Errc::coincident_crossings: return "E_COINCIDENT_CROSSINGS";
        case Errc::not_crossing: return "E_NOT_CROSSING";
        case Errc::disconnected: return "E_DISCONNECTED";
        case Errc::no_long_edge: return "E_NO_LONG_EDGE";
        case Errc::separator_guarantee: return "E_SEPARATOR_GUARANTEE";
        case Errc::io_error: return "E_IO";
        case Errc::parse_error: return "E_PARSE";
        case Errc::internal: return "E_INTERNAL";
    }
    return "E_UNKNOWN";
}

int orient(const Point& p, const Point& q, const Point& r) {
    const double det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (det > 0.0) return 1;
    if (det < 0.0) return -1;
    return 0;
}

namespace {

// 1-D interval overlap of two collinear segments, projected on the
// dominant axis.  Returns overlap length (< 0 means disjoint).
double collinear_overlap(const Segment& s1, const Segment& s2) {
    const bool use_x = std::abs(s1.b.x - s1.a.x) >= std::abs(s1.b.y - s1.a.y);
    auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
    const double lo1 = std::min(coord(s1.a), coord(s1.b));
    const double hi1 = std::max(coord(s1.a), coord(s1.b));
    const double lo2 = std::min(coord(s2.a), coord(s2.b));
    const double hi2 = std::max(coord(s2.a), coord(s2.b));
    return std::min(hi1, hi2) - std::max(lo1, lo2);
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
    const int o1 = orient(s1.a, s1.b, s2.a);
    const int o2 = orient(s1.a, s1.b, s2.b);
    const int o3 = orient(s2.a, s2.b, s1.a);
    const int o4 = orient(s2.a, s2.b, s1.b);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        if (collinear_overlap(s1, s2) > 0.0) {
            raise(Errc::degenerate_overlap,
                  "collinear segments overlap in more than one point");
        }
        return false;
    }
    // Proper crossing: each segment's endpoints are strictly on opposite
    // sides of the other's supporting line.
    return (o1 * o2 < 0) && (o3 * o4 < 0);
}

Point crossing_point(const Segment& s1, const Segment& s2) {
    require(segments_cross(s1, s2), Errc::not_crossing,
            "segments do not cross at an interior point");

    const double d1x = s1.b.x - s1.a.x;
    const double d1y = s1.b.y - s1.a.y;
    const double d2x = s2.b.x - s2.a.x;
    const double d2y = s2.b.y - s2.a.y;

    const double denom = d1x * d2y - d1y * d2x;
    const double rx = s2.a.x - s1.a.x;
    const double ry = s2.a.y - s1.a.y;
    const double u = (rx * d2y - ry * d2x) / denom;
    return Point{s1.a.x + u * d1x, s1.a.y + u * d1y};
}

double angle_between(const Segment& s1, const Segment& s2) {
    const double d1x = s1.b.x - s1.a.x;
    const double d1y = s1.b.y - s1.a.y;
    const double d2x = s2.b.x - s2.a.x;
    const double d2y = s2.b.y - s2.a.y;
    const double cross = std::abs(d1x * d2y - d1y * d2x);
    const double dot = std::abs(d1x * d2x + d1y * d2y);
    return std::atan2(cross, dot);
}

std::pair<double, double> project_interval(const Segment& seg, const Segment& baseline) {
    const double bx = baseline.b.x - baseline.a.x;
    const double by = baseline.b.y - baseline.a.y;
    const double len = std::sqrt(bx * bx + by * by);
    require(len > 0.0, Errc::invalid_params, "baseline has zero length");
    const double ux = bx / len;
    const double uy = by / len;
    auto scalar = [&](const Point& p) {
        return (p.x - baseline.a.x) * ux + (p.y - baseline.a.y) * uy;
    };
    return {scalar(seg.a), scalar(seg.b)};
}

double line_angle(const Segment& s) {
    double a = std::atan2(s.b.y - s.a.y, s.b.x - s.a.x);
    if (a < 0.0) a += std::acos(-1.0);
    const double pi = std::acos(-1.0);
    if (a >= pi) a -= pi;
    return a;
}

}  // namespace spanner
