/* C API for the greedy-spanner toolkit.
 *
 * All functions return a status code (SPANNER_OK on success); results
 * come back through out-parameters.  Objects are opaque handles owned
 * by the caller and released with the matching *_free function.  After
 * a failure, spanner_last_error() returns a message for the calling
 * thread and spanner_status_name() the short machine-parsable code.
 */
#ifndef SPANNER_H
#define SPANNER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int spanner_status;

#define SPANNER_OK 0
#define SPANNER_E_INVALID_PARAMS 1
#define SPANNER_E_DUPLICATE_POINTS 2
#define SPANNER_E_INVALID_STRETCH 3
#define SPANNER_E_UNKNOWN_VERTEX 4
#define SPANNER_E_UNKNOWN_EDGE 5
#define SPANNER_E_DEGENERATE_OVERLAP 6
#define SPANNER_E_COINCIDENT_CROSSINGS 7
#define SPANNER_E_NOT_CROSSING 8
#define SPANNER_E_DISCONNECTED 9
#define SPANNER_E_NO_LONG_EDGE 10
#define SPANNER_E_SEPARATOR_GUARANTEE 11
#define SPANNER_E_IO 12
#define SPANNER_E_PARSE 13
#define SPANNER_E_INTERNAL 14

#define SPANNER_ALGO_NAIVE 0
#define SPANNER_ALGO_FAST 1

typedef struct spanner_points spanner_points;
typedef struct spanner_graph spanner_graph;

const char* spanner_status_name(spanner_status status);
const char* spanner_last_error(void);

/* ── point sets ─────────────────────────────────────────────────── */

spanner_status spanner_points_uniform(uint32_t n, uint64_t seed, spanner_points** out);
spanner_status spanner_points_zigzag(double origin_x, double origin_y, double dx,
                                     double s, uint32_t count, double dir_x,
                                     double dir_y, spanner_points** out);
spanner_status spanner_points_arrangement(double t, double delta, uint32_t columns,
                                          double dx, spanner_points** out);
spanner_status spanner_points_from_array(const double* xy, size_t n,
                                         spanner_points** out);
spanner_status spanner_points_read(const char* path, spanner_points** out);
spanner_status spanner_points_write(const spanner_points* pts, const char* path);
spanner_status spanner_points_perturb(const spanner_points* pts, double eps,
                                      uint64_t seed, spanner_points** out);
size_t spanner_points_count(const spanner_points* pts);
spanner_status spanner_points_get(const spanner_points* pts, size_t id, double* x,
                                  double* y);
void spanner_points_free(spanner_points* pts);

/* ── spanner graphs ─────────────────────────────────────────────── */

spanner_status spanner_build(const spanner_points* pts, double t, int algo,
                             spanner_graph** out);
spanner_status spanner_graph_read(const char* points_path, const char* edges_path,
                                  double t, spanner_graph** out);
spanner_status spanner_graph_from_points(const spanner_points* pts,
                                         const char* edges_path, double t,
                                         spanner_graph** out);
spanner_status spanner_graph_write_edges(const spanner_graph* g, const char* path);
size_t spanner_graph_vertex_count(const spanner_graph* g);
size_t spanner_graph_edge_count(const spanner_graph* g);
spanner_status spanner_graph_edge(const spanner_graph* g, size_t index, uint32_t* i,
                                  uint32_t* j, double* length);
void spanner_graph_free(spanner_graph* g);

/* ── analysis documents (JSON strings, caller frees) ────────────── */

spanner_status spanner_stats_json(const spanner_graph* g, int with_separator,
                                  char** out_json);
spanner_status spanner_verify_json(const spanner_graph* g, double t, char** out_json);
spanner_status spanner_crossings_json(const spanner_graph* g, char** out_json);
spanner_status spanner_separator_json(const spanner_graph* g, uint32_t cutoff,
                                      char** out_json);
spanner_status spanner_svg(const spanner_graph* g, int highlight_crossings,
                           char** out_svg);
void spanner_string_free(char* s);

/* ── formula evaluators ─────────────────────────────────────────── */

spanner_status spanner_bound_long_parallel(double t, double theta, double* out);
spanner_status spanner_bound_band(double t, double alpha, double beta, double* out);
spanner_status spanner_bound_total(double t, double epsilon, double* c1, double* c2,
                                   double* total);
spanner_status spanner_band_thresholds(double t, double delta, double* no_edge_below,
                                       double* edge_forced_at);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPANNER_H */
