#pragma once

#include <cmath>
#include <utility>

#include "spanner/errors.hpp"

namespace spanner {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline bool is_finite(const Point& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

inline double dist(const Point& a, const Point& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy);
}

struct Segment {
    Point a;
    Point b;

    double length() const { return dist(a, b); }
};

/// Sign of the signed area of triangle pqr: +1 counter-clockwise,
/// -1 clockwise, 0 collinear (plain double determinant).
int orient(const Point& p, const Point& q, const Point& r);

/// True iff the open interiors of the two segments share a point.
/// Segments that only touch at an endpoint do not cross.  Collinear
/// segments overlapping in more than one point raise degenerate_overlap.
bool segments_cross(const Segment& s1, const Segment& s2);

/// The unique interior intersection point of two crossing segments,
/// from the 2x2 linear system of the supporting lines.  Raises
/// not_crossing when segments_cross(s1, s2) is false.
Point crossing_point(const Segment& s1, const Segment& s2);

/// Unsigned acute angle between the supporting lines, in [0, pi/2].
/// Insensitive to the direction of either segment.
double angle_between(const Segment& s1, const Segment& s2);

/// Scalar parameters of the orthogonal projections of seg's endpoints
/// onto baseline's supporting line, measured along baseline's unit
/// direction from baseline.a.  Returned as (proj of seg.a, proj of
/// seg.b) without reordering.
std::pair<double, double> project_interval(const Segment& seg, const Segment& baseline);

/// Angle of the supporting line in [0, pi).  Used to pick the baseline
/// of a set of nearly-parallel segments (smallest line angle), which
/// stays well defined for vertical segments.
double line_angle(const Segment& s);

}  // namespace spanner
