#include "spanner.h"

#include <cstring>
#include <new>
#include <string>

#include "spanner/crossing.hpp"
#include "spanner/graph.hpp"
#include "spanner/io.hpp"
#include "spanner/zigzag.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
spanner_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SPANNER_OK;
    } catch (const spanner::Error& e) {
        g_last_error = e.what();
        return static_cast<spanner_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SPANNER_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SPANNER_E_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct spanner_points {
    spanner::PointSet value;
};

struct spanner_graph {
    spanner::SpannerGraph value;
};

const char* spanner_status_name(spanner_status status) {
    return spanner::errc_name(static_cast<spanner::Errc>(status));
}

const char* spanner_last_error(void) { return g_last_error.c_str(); }

spanner_status spanner_points_uniform(uint32_t n, uint64_t seed, spanner_points** out) {
    return guarded([&] { *out = new spanner_points{spanner::generate_uniform(n, seed)}; });
}

spanner_status spanner_points_zigzag(double origin_x, double origin_y, double dx,
                                     double s, uint32_t count, double dir_x,
                                     double dir_y, spanner_points** out) {
    return guarded([&] {
        spanner::ZigZagSpec spec;
        spec.origin = {origin_x, origin_y};
        spec.dx = dx;
        spec.s = s;
        spec.count = count;
        spec.direction = {dir_x, dir_y};
        *out = new spanner_points{spanner::zigzag_points(spec)};
    });
}

spanner_status spanner_points_arrangement(double t, double delta, uint32_t columns,
                                          double dx, spanner_points** out) {
    return guarded([&] {
        spanner::ArrangementSpec spec;
        spec.t = t;
        spec.delta = delta;
        spec.columns = columns;
        spec.dx = dx;
        *out = new spanner_points{spanner::three_band_arrangement(spec)};
    });
}

spanner_status spanner_points_from_array(const double* xy, size_t n,
                                         spanner_points** out) {
    return guarded([&] {
        std::vector<spanner::Point> pts(n);
        for (size_t k = 0; k < n; ++k) pts[k] = {xy[2 * k], xy[2 * k + 1]};
        *out = new spanner_points{spanner::PointSet(std::move(pts))};
    });
}

spanner_status spanner_points_read(const char* path, spanner_points** out) {
    return guarded([&] { *out = new spanner_points{spanner::read_points_file(path)}; });
}

spanner_status spanner_points_write(const spanner_points* pts, const char* path) {
    return guarded([&] { spanner::write_points_file(path, pts->value); });
}

spanner_status spanner_points_perturb(const spanner_points* pts, double eps,
                                      uint64_t seed, spanner_points** out) {
    return guarded(
        [&] { *out = new spanner_points{spanner::perturbed(pts->value, eps, seed)}; });
}

size_t spanner_points_count(const spanner_points* pts) { return pts->value.size(); }

spanner_status spanner_points_get(const spanner_points* pts, size_t id, double* x,
                                  double* y) {
    return guarded([&] {
        spanner::require(id < pts->value.size(), spanner::Errc::unknown_vertex,
                         "point id out of range");
        *x = pts->value[id].x;
        *y = pts->value[id].y;
    });
}

void spanner_points_free(spanner_points* pts) { delete pts; }

spanner_status spanner_build(const spanner_points* pts, double t, int algo,
                             spanner_graph** out) {
    return guarded([&] {
        spanner::require(algo == SPANNER_ALGO_NAIVE || algo == SPANNER_ALGO_FAST,
                         spanner::Errc::invalid_params, "unknown algorithm");
        spanner::SpannerConfig cfg;
        cfg.t = t;
        *out = new spanner_graph{algo == SPANNER_ALGO_NAIVE
                                     ? spanner::greedy_spanner_naive(pts->value, cfg)
                                     : spanner::greedy_spanner_fast(pts->value, cfg)};
    });
}

spanner_status spanner_graph_read(const char* points_path, const char* edges_path,
                                  double t, spanner_graph** out) {
    return guarded(
        [&] { *out = new spanner_graph{spanner::read_graph(points_path, edges_path, t)}; });
}

spanner_status spanner_graph_from_points(const spanner_points* pts,
                                         const char* edges_path, double t,
                                         spanner_graph** out) {
    return guarded([&] {
        const auto edges = spanner::read_edges_file(edges_path, pts->value.size());
        *out = new spanner_graph{spanner::SpannerGraph::from_edges(pts->value, edges, t)};
    });
}

spanner_status spanner_graph_write_edges(const spanner_graph* g, const char* path) {
    return guarded([&] { spanner::write_edges_file(path, g->value); });
}

size_t spanner_graph_vertex_count(const spanner_graph* g) {
    return g->value.vertex_count();
}

size_t spanner_graph_edge_count(const spanner_graph* g) { return g->value.edge_count(); }

spanner_status spanner_graph_edge(const spanner_graph* g, size_t index, uint32_t* i,
                                  uint32_t* j, double* length) {
    return guarded([&] {
        spanner::require(index < g->value.edge_count(), spanner::Errc::unknown_edge,
                         "edge index out of range");
        const auto& e = g->value.edges()[index];
        *i = e.i;
        *j = e.j;
        *length = e.length;
    });
}

void spanner_graph_free(spanner_graph* g) { delete g; }

spanner_status spanner_stats_json(const spanner_graph* g, int with_separator,
                                  char** out_json) {
    return guarded(
        [&] { *out_json = copy_string(spanner::stats_json(g->value, with_separator != 0)); });
}

spanner_status spanner_verify_json(const spanner_graph* g, double t, char** out_json) {
    return guarded([&] { *out_json = copy_string(spanner::verify_json(g->value, t)); });
}

spanner_status spanner_crossings_json(const spanner_graph* g, char** out_json) {
    return guarded([&] { *out_json = copy_string(spanner::crossings_json(g->value)); });
}

spanner_status spanner_separator_json(const spanner_graph* g, uint32_t cutoff,
                                      char** out_json) {
    return guarded(
        [&] { *out_json = copy_string(spanner::separator_json(g->value, cutoff)); });
}

spanner_status spanner_svg(const spanner_graph* g, int highlight_crossings,
                           char** out_svg) {
    return guarded([&] {
        *out_svg = copy_string(spanner::render_svg(g->value, highlight_crossings != 0));
    });
}

void spanner_string_free(char* s) { delete[] s; }

spanner_status spanner_bound_long_parallel(double t, double theta, double* out) {
    return guarded([&] { *out = spanner::bound_long_parallel(t, theta); });
}

spanner_status spanner_bound_band(double t, double alpha, double beta, double* out) {
    return guarded(
        [&] { *out = spanner::bound_band(t, spanner::BandParams{alpha, beta, alpha}); });
}

spanner_status spanner_bound_total(double t, double epsilon, double* c1, double* c2,
                                   double* total) {
    return guarded([&] {
        const spanner::BoundReport r = spanner::bound_total_not_smaller(t, epsilon);
        if (c1) *c1 = r.c1;
        if (c2) *c2 = r.c2;
        if (total) *total = r.total;
    });
}

spanner_status spanner_band_thresholds(double t, double delta, double* no_edge_below,
                                       double* edge_forced_at) {
    return guarded([&] {
        const spanner::BandThresholds th = spanner::thresholds(t, delta);
        if (no_edge_below) *no_edge_below = th.no_edge_below;
        if (edge_forced_at) *edge_forced_at = th.edge_forced_at;
    });
}
