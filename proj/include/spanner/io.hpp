#pragma once

#include <cstdint>
#include <string>

#include "spanner/graph.hpp"
#include "spanner/planar.hpp"

namespace spanner {

/// n points sampled i.i.d. from the unit square with the project RNG
/// (splitmix64); exact duplicates are rejected and resampled.
PointSet generate_uniform(std::uint32_t n, std::uint64_t seed);

/// Points file: one "x y" pair per line, 17 significant digits,
/// '#' comments allowed.  Writes are whole-file atomic.
void write_points_file(const std::string& path, const PointSet& ps);
PointSet read_points_file(const std::string& path);

/// Edge file: one "i j" pair of zero-based point indices per line.
void write_edges_file(const std::string& path, const SpannerGraph& g);
std::vector<std::pair<VertexId, VertexId>> read_edges_file(const std::string& path,
                                                           std::size_t n);
SpannerGraph read_graph(const std::string& points_path, const std::string& edges_path,
                        double stretch);

/// Serializes a point exactly (17 significant digits round-trip).
std::string format_coord(double v);

/// Stats document with a stable schema: keys sorted, no timestamps.
/// with_separator additionally runs spanner_separator.
std::string stats_json(const SpannerGraph& g, bool with_separator);

/// Verification document: stretch, shortcut, gap and endpoint-ordering
/// reports against the given t.
std::string verify_json(const SpannerGraph& g, double t);

/// Crossing-structure document: crossing count, per-edge maxima,
/// degeneracy, bound evaluations.
std::string crossings_json(const SpannerGraph& g);

/// Separator document; cutoff == 0 runs a single-shot separator,
/// otherwise the full hierarchy.
std::string separator_json(const SpannerGraph& g, std::uint32_t cutoff);

/// Deterministic SVG rendering: one line per edge, one circle per point,
/// optionally highlighted crossing points; viewBox pads the bounding box
/// by 5 percent.
std::string render_svg(const SpannerGraph& g, bool highlight_crossings);

/// Whole-file atomic write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace spanner
