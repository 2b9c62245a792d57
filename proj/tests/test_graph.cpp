#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/io.hpp"
#include "spanner/util.hpp"

using namespace spanner;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Brute-force all-pairs oracle (Floyd-Warshall), independent of the
// Dijkstra implementation under test.
std::vector<std::vector<double>> apsp_oracle(const SpannerGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const GraphEdge& e : g.edges()) {
        d[e.i][e.j] = std::min(d[e.i][e.j], e.length);
        d[e.j][e.i] = d[e.i][e.j];
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

// Independent greedy construction oracle: pair scan plus incremental
// Floyd-Warshall relaxation after every inserted edge.
std::vector<std::pair<VertexId, VertexId>> greedy_oracle(const PointSet& pts, double t) {
    const std::size_t n = pts.size();
    struct Rec {
        double d;
        VertexId i, j;
    };
    std::vector<Rec> pairs;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) pairs.push_back({dist(pts[i], pts[j]), i, j});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Rec& a, const Rec& b) {
        return a.d != b.d ? a.d < b.d : (a.i != b.i ? a.i < b.i : a.j < b.j);
    });
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Rec& r : pairs) {
        if (d[r.i][r.j] > t * r.d * (1.0 + 1e-12)) {
            edges.push_back({r.i, r.j});
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    const double via = std::min(d[a][r.i] + r.d + d[r.j][b],
                                                d[a][r.j] + r.d + d[r.i][b]);
                    if (via < d[a][b]) d[a][b] = via;
                }
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const SpannerGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const GraphEdge& e : g.edges()) out.push_back({e.i, e.j});
    return out;
}

PointSet unit_square() {
    return PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("single pair gets its edge") {
    const SpannerGraph g = greedy_spanner_naive(PointSet({{0, 0}, {1, 0}}), {2.0});
    CHECK(edge_pairs(g) == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
}

TEST_CASE("collinear evenly spaced points keep only path edges") {
    const PointSet pts({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    for (double t : {1.01, 1.5, 2.0, 10.0}) {
        const SpannerGraph g = greedy_spanner_naive(pts, {t});
        CHECK(edge_pairs(g) ==
              std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {2, 3}});
    }
}

TEST_CASE("unit square at t=1.5 keeps only the sides") {
    const SpannerGraph g = greedy_spanner_naive(unit_square(), {1.5});
    CHECK(edge_pairs(g) ==
          std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    // Confirm against the all-pairs oracle: diagonals are covered.
    const auto d = apsp_oracle(g);
    CHECK(d[0][2] == doctest::Approx(2.0));
    CHECK(d[0][2] <= 1.5 * std::sqrt(2.0));
}

TEST_CASE("singleton yields an empty edge set") {
    const SpannerGraph g = greedy_spanner_fast(PointSet({{0.25, 0.5}}), {2.0});
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex_count() == 1);
}

TEST_CASE("build input validation") {
    CHECK_THROWS_AS((void)greedy_spanner_naive(PointSet({{0, 0}, {0, 0}}), {2.0}), Error);
    CHECK_THROWS_AS((void)greedy_spanner_naive(PointSet({{0, 0}, {1, 0}}), {1.0}), Error);
    CHECK_THROWS_AS((void)greedy_spanner_naive(PointSet{}, {2.0}), Error);
    try {
        (void)greedy_spanner_naive(PointSet({{0, 0}, {1, 0}}), {0.5});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_stretch);
    }
}

TEST_CASE("fast builder matches naive on the basic examples") {
    for (double t : {1.1, 1.5, 2.0}) {
        const PointSet sets[] = {PointSet({{0, 0}, {1, 0}}),
                                 PointSet({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), unit_square()};
        for (const PointSet& pts : sets) {
            CHECK(edge_pairs(greedy_spanner_fast(pts, {t})) ==
                  edge_pairs(greedy_spanner_naive(pts, {t})));
        }
    }
}

TEST_CASE("fast builder matches naive on seeded random sets") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const PointSet pts = generate_uniform(60, seed);
        const SpannerGraph a = greedy_spanner_naive(pts, {1.5});
        const SpannerGraph b = greedy_spanner_fast(pts, {1.5});
        REQUIRE(edge_pairs(a) == edge_pairs(b));
    }
}

TEST_CASE("construction matches the independent greedy oracle") {
    for (std::uint64_t seed : {3u, 17u, 99u}) {
        const PointSet pts = generate_uniform(40, seed);
        for (double t : {1.2, 2.0}) {
            CHECK(edge_pairs(greedy_spanner_naive(pts, {t})) == greedy_oracle(pts, t));
        }
    }
}

TEST_CASE("construction is deterministic") {
    const PointSet pts = generate_uniform(50, 5);
    const SpannerGraph a = greedy_spanner_fast(pts, {1.3});
    const SpannerGraph b = greedy_spanner_fast(pts, {1.3});
    REQUIRE(a.edge_count() == b.edge_count());
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edges()[e].i == b.edges()[e].i);
        CHECK(a.edges()[e].j == b.edges()[e].j);
        CHECK(a.edges()[e].length == b.edges()[e].length);
    }
}

TEST_CASE("smaller stretch never needs fewer edges on the seeded corpus") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const PointSet pts = generate_uniform(70, seed);
        const std::size_t tight = greedy_spanner_fast(pts, {1.1}).edge_count();
        const std::size_t loose = greedy_spanner_fast(pts, {2.0}).edge_count();
        CHECK(tight >= loose);
    }
}

TEST_CASE("stored lengths equal point distances") {
    const PointSet pts = generate_uniform(30, 2);
    const SpannerGraph g = greedy_spanner_fast(pts, {1.5});
    for (const GraphEdge& e : g.edges()) {
        CHECK(e.length == doctest::Approx(dist(pts[e.i], pts[e.j])).epsilon(1e-12));
        CHECK(e.i < e.j);
    }
    CHECK(g.connected());
}

TEST_CASE("shortest path basics") {
    const SpannerGraph path =
        SpannerGraph::from_edges(PointSet({{0, 0}, {1, 0}, {2, 0}}), {{0, 1}, {1, 2}}, 2.0);
    const PathResult r = shortest_path(path, 0, 2);
    CHECK(r.length == doctest::Approx(2.0));
    CHECK(r.path == std::vector<VertexId>{0, 1, 2});

    const PathResult self = shortest_path(path, 1, 1);
    CHECK(self.length == 0.0);
    CHECK(self.path == std::vector<VertexId>{1});

    CHECK_THROWS_AS((void)shortest_path(path, 0, 9), Error);
}

TEST_CASE("shortest path on the square spanner diagonal") {
    const SpannerGraph g = greedy_spanner_naive(unit_square(), {1.5});
    const PathResult r = shortest_path(g, 0, 2);
    CHECK(r.length == doctest::Approx(2.0));
    CHECK(r.path.size() == 3);
    CHECK((r.path == std::vector<VertexId>{0, 1, 2} ||
           r.path == std::vector<VertexId>{0, 3, 2}));
}

TEST_CASE("disconnected query returns infinity") {
    const SpannerGraph g =
        SpannerGraph::from_edges(PointSet({{0, 0}, {1, 0}, {5, 0}, {6, 0}}),
                                 {{0, 1}, {2, 3}}, 2.0);
    const PathResult r = shortest_path(g, 0, 3);
    CHECK(r.length == kInf);
    CHECK(r.path.empty());
}

TEST_CASE("sssp baseline") {
    const SpannerGraph path = SpannerGraph::from_edges(
        PointSet({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), {{0, 1}, {1, 2}, {2, 3}}, 2.0);
    const auto d = sssp_baseline(path, 0);
    CHECK(d == std::vector<double>{0.0, 1.0, 2.0, 3.0});

    const SpannerGraph square = greedy_spanner_naive(unit_square(), {1.5});
    const auto ds = sssp_baseline(square, 0);
    CHECK(ds[0] == doctest::Approx(0.0));
    CHECK(ds[1] == doctest::Approx(1.0));
    CHECK(ds[2] == doctest::Approx(2.0));
    CHECK(ds[3] == doctest::Approx(1.0));

    const SpannerGraph single = greedy_spanner_naive(PointSet({{4, 2}}), {2.0});
    CHECK(sssp_baseline(single, 0) == std::vector<double>{0.0});
}

TEST_CASE("sssp agrees with the all-pairs oracle") {
    const SpannerGraph g = greedy_spanner_fast(generate_uniform(45, 8), {1.4});
    const auto oracle = apsp_oracle(g);
    for (VertexId s : {0u, 7u, 31u}) {
        const auto d = sssp_baseline(g, s);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            CHECK(d[v] == doctest::Approx(oracle[s][v]).epsilon(1e-12));
        }
    }
}

TEST_CASE("verify_stretch on clean spanners") {
    const SpannerGraph path = greedy_spanner_naive(
        PointSet({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), {1.01});
    const StretchReport r1 = verify_stretch(path, 1.01);
    CHECK(r1.max_observed_ratio == doctest::Approx(1.0));
    CHECK(r1.violating_pairs.empty());

    const SpannerGraph square = greedy_spanner_naive(unit_square(), {1.5});
    const StretchReport r2 = verify_stretch(square, 1.5);
    CHECK(r2.max_observed_ratio == doctest::Approx(std::sqrt(2.0)));
    CHECK(r2.violating_pairs.empty());
}

TEST_CASE("verify_stretch flags the square graph against t=1.3") {
    const SpannerGraph square = greedy_spanner_naive(unit_square(), {1.5});
    const StretchReport r = verify_stretch(square, 1.3);
    REQUIRE(r.violating_pairs.size() == 2);  // the two diagonals
    CHECK(r.violating_pairs[0].ratio == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("verify_no_shortcut accepts greedy output") {
    const SpannerGraph single = greedy_spanner_naive(PointSet({{0, 0}, {1, 0}}), {2.0});
    const ShortcutReport r1 = verify_no_shortcut(single, 2.0);
    CHECK(r1.violating_edges.empty());
    CHECK(r1.worst_margin == kInf);

    const SpannerGraph square = greedy_spanner_naive(unit_square(), {1.5});
    const ShortcutReport r2 = verify_no_shortcut(square, 1.5);
    CHECK(r2.violating_edges.empty());
    CHECK(r2.worst_margin == doctest::Approx(3.0 / 1.5));
}

TEST_CASE("verify_no_shortcut flags planted diagonals") {
    const SpannerGraph bad = SpannerGraph::from_edges(
        unit_square(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}}, 1.5);
    const ShortcutReport r = verify_no_shortcut(bad, 1.5);
    std::vector<std::pair<VertexId, VertexId>> flagged;
    for (EdgeId e : r.violating_edges) flagged.push_back({bad.edges()[e].i, bad.edges()[e].j});
    CHECK(flagged == std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {1, 3}});
}

TEST_CASE("every constructed spanner passes stretch and shortcut checks") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (double t : {1.2, 1.7}) {
            const SpannerGraph g = greedy_spanner_fast(generate_uniform(50, seed), {t});
            CHECK(verify_stretch(g, t).violating_pairs.empty());
            CHECK(verify_no_shortcut(g, t).violating_edges.empty());
        }
    }
}
