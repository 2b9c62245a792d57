#include "spanner/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spanner/crossing.hpp"
#include "spanner/util.hpp"
#include "spanner/zigzag.hpp"

namespace spanner {

using nlohmann::json;

PointSet generate_uniform(std::uint32_t n, std::uint64_t seed) {
    require(n >= 1, Errc::invalid_params, "need at least one point");
    SplitMix64 rng(seed);
    std::set<std::pair<double, double>> seen;
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const double x = rng.next_double();
        const double y = rng.next_double();
        if (seen.insert({x, y}).second) {
            pts.push_back(Point{x, y});
        }
    }
    return PointSet(std::move(pts));
}

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(out.good(), Errc::io_error, "cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        require(out.good(), Errc::io_error, "write to " + tmp + " failed");
    }
    require(std::rename(tmp.c_str(), path.c_str()) == 0, Errc::io_error,
            "cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_points_file(const std::string& path, const PointSet& ps) {
    std::string out;
    for (const Point& p : ps) {
        out += format_coord(p.x);
        out += ' ';
        out += format_coord(p.y);
        out += '\n';
    }
    write_file_atomic(path, out);
}

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string clean_line(const std::string& line) {
    std::string s = line;
    if (const auto pos = s.find('#'); pos != std::string::npos) s.resize(pos);
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t lineno,
                             const std::string& what) {
    raise(Errc::parse_error, path + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open " + path);
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = clean_line(line);
        if (s.empty()) continue;
        std::istringstream ss(s);
        double x = 0.0, y = 0.0;
        std::string extra;
        if (!(ss >> x >> y) || (ss >> extra)) {
            parse_fail(path, lineno, "expected 'x y'");
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            parse_fail(path, lineno, "coordinates must be finite");
        }
        pts.push_back(Point{x, y});
    }
    return PointSet(std::move(pts));
}

void write_edges_file(const std::string& path, const SpannerGraph& g) {
    std::string out;
    for (const GraphEdge& e : g.edges()) {
        out += std::to_string(e.i);
        out += ' ';
        out += std::to_string(e.j);
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<std::pair<VertexId, VertexId>> read_edges_file(const std::string& path,
                                                           std::size_t n) {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, "cannot open " + path);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = clean_line(line);
        if (s.empty()) continue;
        std::istringstream ss(s);
        long long i = -1, j = -1;
        std::string extra;
        if (!(ss >> i >> j) || (ss >> extra)) {
            parse_fail(path, lineno, "expected 'i j'");
        }
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
            static_cast<std::size_t>(j) >= n) {
            parse_fail(path, lineno, "vertex index out of range");
        }
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    }
    return edges;
}

SpannerGraph read_graph(const std::string& points_path, const std::string& edges_path,
                        double stretch) {
    const PointSet pts = read_points_file(points_path);
    const auto edges = read_edges_file(edges_path, pts.size());
    return SpannerGraph::from_edges(pts, edges, stretch);
}

namespace {

std::uint64_t max_crossings_per_edge(const CrossingGraph& cg) {
    std::uint64_t worst = 0;
    for (const auto& nbrs : cg.adj) worst = std::max<std::uint64_t>(worst, nbrs.size());
    return worst;
}

}  // namespace

std::string stats_json(const SpannerGraph& g, bool with_separator) {
    const CrossingGraph cg = build_crossing_graph(g);
    const DegeneracyResult deg = degeneracy(cg);

    json doc;
    doc["schema_version"] = 1;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["t"] = g.stretch();
    doc["total_weight"] = g.total_weight();
    doc["max_degree"] = g.max_degree();
    doc["crossings"] = cg.crossing_count();
    doc["max_crossings_per_edge"] = max_crossings_per_edge(cg);
    doc["degeneracy"] = deg.k;
    if (g.stretch() > 1.0) {
        doc["crossing_bound_not_smaller"] = bound_total_not_smaller(g.stretch(), 1.0).total;
    }
    if (with_separator) {
        const Planarization p = planarize(g);
        const Separator sep = spanner_separator(g);
        doc["separator"] = {{"size", sep.vertices.size()},
                            {"balance", sep.balance},
                            {"planarization_vertices", p.vertex_count()}};
    }
    return doc.dump(2) + "\n";
}

std::string verify_json(const SpannerGraph& g, double t) {
    constexpr std::size_t kListCap = 100;
    json doc;
    doc["schema_version"] = 1;
    doc["t"] = t;

    const StretchReport stretch = verify_stretch(g, t);
    doc["stretch"] = {{"max_observed_ratio", stretch.max_observed_ratio},
                      {"violations", stretch.violating_pairs.size()}};
    json pairs = json::array();
    for (std::size_t k = 0; k < std::min(kListCap, stretch.violating_pairs.size()); ++k) {
        const auto& v = stretch.violating_pairs[k];
        pairs.push_back({{"u", v.u}, {"v", v.v}, {"ratio", v.ratio}});
    }
    doc["stretch"]["violating_pairs"] = pairs;

    const ShortcutReport shortcut = verify_no_shortcut(g, t);
    doc["shortcut"] = {{"worst_margin", shortcut.worst_margin},
                       {"violations", shortcut.violating_edges.size()},
                       {"violating_edges", shortcut.violating_edges}};

    json gap_doc;
    const GapReport gap = verify_gap_property(g);
    gap_doc["worst_ratio"] = gap.worst_ratio;
    gap_doc["violations"] = gap.violations.size();
    json gap_pairs = json::array();
    for (std::size_t k = 0; k < std::min(kListCap, gap.violations.size()); ++k) {
        const auto& v = gap.violations[k];
        gap_pairs.push_back({{"e1", v.e1}, {"e2", v.e2}, {"ratio", v.ratio}});
    }
    gap_doc["violating_pairs"] = gap_pairs;
    doc["gap"] = gap_doc;

    const double theta = (t - 1.0) / (2.0 * (t + 1.0)) * (1.0 - 1e-6);
    std::size_t nested = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        nested += verify_endpoint_ordering(g, e, AngleBucketConfig{theta}).nested_pairs.size();
    }
    doc["endpoint_ordering"] = {{"theta", theta}, {"nested_pairs", nested}};
    return doc.dump(2) + "\n";
}

std::string crossings_json(const SpannerGraph& g) {
    const CrossingGraph cg = build_crossing_graph(g);
    const DegeneracyResult deg = degeneracy(cg);
    json doc;
    doc["schema_version"] = 1;
    doc["m"] = g.edge_count();
    doc["crossings"] = cg.crossing_count();
    doc["max_crossings_per_edge"] = max_crossings_per_edge(cg);
    doc["degeneracy"] = deg.k;
    if (g.stretch() > 1.0) {
        const BoundReport bound = bound_total_not_smaller(g.stretch(), 1.0);
        doc["bound"] = {{"c1", bound.c1}, {"c2", bound.c2}, {"total", bound.total}};
        // Largest observed count of crossings by edges at least as long.
        std::uint64_t worst_not_smaller = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const double len = g.edges()[e].length;
            std::uint64_t count = 0;
            for (EdgeId other : cg.adj[e]) {
                if (g.edges()[other].length >= len) ++count;
            }
            worst_not_smaller = std::max(worst_not_smaller, count);
        }
        doc["max_not_smaller_crossings"] = worst_not_smaller;
    }
    return doc.dump(2) + "\n";
}

std::string separator_json(const SpannerGraph& g, std::uint32_t cutoff) {
    json doc;
    doc["schema_version"] = 1;
    doc["n"] = g.vertex_count();
    const Planarization p = planarize(g);
    doc["planarization_vertices"] = p.vertex_count();
    if (cutoff == 0) {
        const Separator sep = spanner_separator(g);
        doc["separator"] = {{"size", sep.vertices.size()},
                            {"balance", sep.balance},
                            {"side_a", sep.side_a.size()},
                            {"side_b", sep.side_b.size()}};
    } else {
        const SeparatorTree tree = separator_hierarchy(g, cutoff);
        std::size_t leaves = 0, max_leaf = 0, separator_total = 0;
        std::function<void(const SeparatorTree&)> walk = [&](const SeparatorTree& node) {
            if (node.is_leaf()) {
                ++leaves;
                max_leaf = std::max(max_leaf, node.leaf_vertices.size());
                return;
            }
            separator_total += node.separator.vertices.size();
            for (const auto& child : node.children) walk(child);
        };
        walk(tree);
        doc["hierarchy"] = {{"cutoff", cutoff},
                            {"depth", tree.depth()},
                            {"leaves", leaves},
                            {"max_leaf_size", max_leaf},
                            {"separator_vertices", separator_total}};
    }
    return doc.dump(2) + "\n";
}

std::string render_svg(const SpannerGraph& g, bool highlight_crossings) {
    double lox = 0.0, loy = 0.0, hix = 1.0, hiy = 1.0;
    if (!g.points().empty()) {
        lox = hix = g.points()[0].x;
        loy = hiy = g.points()[0].y;
        for (const Point& p : g.points()) {
            lox = std::min(lox, p.x);
            hix = std::max(hix, p.x);
            loy = std::min(loy, p.y);
            hiy = std::max(hiy, p.y);
        }
    }
    const double extent = std::max({hix - lox, hiy - loy, 1e-9});
    const double margin = 0.05 * extent;
    // Flip y so the drawing matches the usual mathematical orientation.
    auto fy = [&](double y) { return hiy - y; };

    char buf[256];
    std::string svg;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g %.6g %.6g\">\n",
                  lox - margin, -margin, (hix - lox) + 2 * margin, (hiy - loy) + 2 * margin);
    svg += buf;

    const double stroke = 0.002 * extent;
    const double radius = 0.005 * extent;
    for (const GraphEdge& e : g.edges()) {
        const Point& a = g.points()[e.i];
        const Point& b = g.points()[e.j];
        std::snprintf(buf, sizeof(buf),
                      "  <line x1=\"%.6g\" y1=\"%.6g\" x2=\"%.6g\" y2=\"%.6g\" "
                      "stroke=\"black\" stroke-width=\"%.6g\"/>\n",
                      a.x, fy(a.y), b.x, fy(b.y), stroke);
        svg += buf;
    }
    for (const Point& p : g.points()) {
        std::snprintf(buf, sizeof(buf),
                      "  <circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.6g\" fill=\"#1f4e9c\"/>\n",
                      p.x, fy(p.y), radius);
        svg += buf;
    }
    if (highlight_crossings) {
        const CrossingGraph cg = build_crossing_graph(g);
        for (const auto& c : cg.crossings) {
            std::snprintf(buf, sizeof(buf),
                          "  <circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.6g\" fill=\"none\" "
                          "stroke=\"#c0392b\" stroke-width=\"%.6g\"/>\n",
                          c.at.x, fy(c.at.y), 2.0 * radius, stroke);
            svg += buf;
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace spanner
