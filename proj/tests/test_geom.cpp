#include <doctest.h>

#include <cmath>
#include <optional>

#include "spanner/geom.hpp"
#include "spanner/util.hpp"

using namespace spanner;

namespace {

const double kPi = std::acos(-1.0);

// Independent crossing oracle: solve the segment parameterization
// s1.a + u d1 = s2.a + v d2 and test both parameters strictly inside
// (0, 1).  Near-parallel pairs are treated as non-crossing.
bool cross_oracle(const Segment& s1, const Segment& s2) {
    const double d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
    const double d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
    const double det = d1x * d2y - d1y * d2x;
    const double scale = std::abs(d1x * d2y) + std::abs(d1y * d2x);
    if (std::abs(det) <= 1e-14 * scale) return false;
    const double rx = s2.a.x - s1.a.x, ry = s2.a.y - s1.a.y;
    const double u = (rx * d2y - ry * d2x) / det;
    const double v = (rx * d1y - ry * d1x) / det;
    return u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0;
}

Segment random_segment(SplitMix64& rng) {
    const Point a{rng.next_double(), rng.next_double()};
    Point b{rng.next_double(), rng.next_double()};
    while (a == b) b = Point{rng.next_double(), rng.next_double()};
    return Segment{a, b};
}

}  // namespace

TEST_CASE("orientation signs") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("segment crossing basics") {
    CHECK(segments_cross({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
    CHECK_FALSE(segments_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}));
    CHECK_FALSE(segments_cross({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
}

TEST_CASE("endpoint touch does not cross") {
    // T-junction: an endpoint in the other segment's interior.
    CHECK_FALSE(segments_cross({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}));
    // Collinear, touching at exactly one point.
    CHECK_FALSE(segments_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));
}

TEST_CASE("collinear overlap raises") {
    CHECK_THROWS_AS((void)segments_cross({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}), Error);
    CHECK_THROWS_AS((void)segments_cross({{0, 0}, {3, 0}}, {{1, 0}, {2, 0}}), Error);
    try {
        (void)segments_cross({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_overlap);
    }
}

TEST_CASE("crossing point examples") {
    const Point p1 = crossing_point({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
    CHECK(p1.x == doctest::Approx(0.5));
    CHECK(p1.y == doctest::Approx(0.5));
    const Point p2 = crossing_point({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}});
    CHECK(p2.x == doctest::Approx(1.0));
    CHECK(p2.y == doctest::Approx(0.0).epsilon(1e-12));
    const Point p3 = crossing_point({{0, 0}, {4, 4}}, {{0, 4}, {4, 0}});
    CHECK(p3.x == doctest::Approx(2.0));
    CHECK(p3.y == doctest::Approx(2.0));
}

TEST_CASE("crossing point requires a crossing") {
    CHECK_THROWS_AS((void)crossing_point({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}), Error);
}

TEST_CASE("angle between lines") {
    CHECK(angle_between({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}) == doctest::Approx(kPi / 2));
    CHECK(angle_between({{0, 0}, {1, 0}}, {{5, 5}, {9, 5}}) == doctest::Approx(0.0));
    CHECK(angle_between({{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}) == doctest::Approx(kPi / 4));
}

TEST_CASE("angle is direction insensitive") {
    SplitMix64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Segment s1 = random_segment(rng);
        const Segment s2 = random_segment(rng);
        const double a = angle_between(s1, s2);
        CHECK(a >= 0.0);
        CHECK(a <= kPi / 2 + 1e-12);
        CHECK(angle_between(s2, s1) == doctest::Approx(a));
        CHECK(angle_between({s1.b, s1.a}, s2) == doctest::Approx(a));
        CHECK(angle_between(s1, {s2.b, s2.a}) == doctest::Approx(a));
    }
}

TEST_CASE("projection intervals") {
    const auto [a1, b1] = project_interval({{0, 1}, {2, 1}}, {{0, 0}, {1, 0}});
    CHECK(a1 == doctest::Approx(0.0));
    CHECK(b1 == doctest::Approx(2.0));
    const auto [a2, b2] = project_interval({{3, 7}, {3, 9}}, {{0, 0}, {1, 0}});
    CHECK(a2 == doctest::Approx(3.0));
    CHECK(b2 == doctest::Approx(3.0));
    const auto [a3, b3] = project_interval({{1, 1}, {2, 2}}, {{0, 0}, {0, 1}});
    CHECK(a3 == doctest::Approx(1.0));
    CHECK(b3 == doctest::Approx(2.0));
}

TEST_CASE("crossing agrees with the parametric oracle") {
    SplitMix64 rng(42);
    int crossings = 0;
    for (int k = 0; k < 1000; ++k) {
        const Segment s1 = random_segment(rng);
        const Segment s2 = random_segment(rng);
        const bool got = segments_cross(s1, s2);
        CHECK(got == cross_oracle(s1, s2));
        CHECK(segments_cross(s2, s1) == got);
        if (got) ++crossings;
    }
    CHECK(crossings > 100);  // the sample actually exercises both outcomes
}

TEST_CASE("crossing point lies strictly inside both segments") {
    SplitMix64 rng(7);
    int checked = 0;
    while (checked < 300) {
        const Segment s1 = random_segment(rng);
        const Segment s2 = random_segment(rng);
        if (!segments_cross(s1, s2)) continue;
        ++checked;
        const Point x = crossing_point(s1, s2);
        for (const Segment& s : {s1, s2}) {
            const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
            const double u = ((x.x - s.a.x) * dx + (x.y - s.a.y) * dy) / (dx * dx + dy * dy);
            CHECK(u > 1e-12);
            CHECK(u < 1.0 - 1e-12);
        }
    }
}

TEST_CASE("line angle stays in [0, pi) and handles verticals") {
    CHECK(line_angle({{0, 0}, {1, 0}}) == doctest::Approx(0.0));
    CHECK(line_angle({{0, 0}, {0, 3}}) == doctest::Approx(kPi / 2));
    CHECK(line_angle({{0, 0}, {0, -3}}) == doctest::Approx(kPi / 2));
    CHECK(line_angle({{1, 1}, {0, 0}}) == doctest::Approx(kPi / 4));
    SplitMix64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const Segment s = random_segment(rng);
        const double a = line_angle(s);
        CHECK(a >= 0.0);
        CHECK(a < kPi);
        CHECK(line_angle({s.b, s.a}) == doctest::Approx(a));
    }
}
