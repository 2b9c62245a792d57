// Command-line driver for the greedy-spanner toolkit.  Talks to the
// shared library exclusively through the C API in spanner.h; every
// failure exits nonzero with a one-line "error: E_CODE: message" prefix.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spanner.h"

namespace {

struct PointsDeleter {
    void operator()(spanner_points* p) const { spanner_points_free(p); }
};
struct GraphDeleter {
    void operator()(spanner_graph* g) const { spanner_graph_free(g); }
};
using PointsPtr = std::unique_ptr<spanner_points, PointsDeleter>;
using GraphPtr = std::unique_ptr<spanner_graph, GraphDeleter>;

[[noreturn]] void fail(spanner_status status) {
    std::fprintf(stderr, "error: %s: %s\n", spanner_status_name(status),
                 spanner_last_error());
    std::exit(1);
}

void check(spanner_status status) {
    if (status != SPANNER_OK) fail(status);
}

std::string slurp_json(spanner_status status, char** text) {
    check(status);
    std::string out(*text);
    spanner_string_free(*text);
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "error: E_IO: cannot open %s for writing\n", path.c_str());
        std::exit(1);
    }
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
}

PointsPtr load_points(const std::string& path, double perturb, std::uint64_t seed) {
    spanner_points* raw = nullptr;
    check(spanner_points_read(path.c_str(), &raw));
    PointsPtr pts(raw);
    if (perturb > 0.0) {
        spanner_points* jittered = nullptr;
        check(spanner_points_perturb(pts.get(), perturb, seed, &jittered));
        pts.reset(jittered);
    }
    return pts;
}

GraphPtr build_graph(const spanner_points* pts, double t, const std::string& algo) {
    spanner_graph* raw = nullptr;
    check(spanner_build(pts, t, algo == "naive" ? SPANNER_ALGO_NAIVE : SPANNER_ALGO_FAST,
                        &raw));
    return GraphPtr(raw);
}

GraphPtr load_graph(const std::string& points_path, const std::string& edges_path,
                    double t) {
    spanner_graph* raw = nullptr;
    check(spanner_graph_read(points_path.c_str(), edges_path.c_str(), t, &raw));
    return GraphPtr(raw);
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int run_bench(const std::string& suite) {
    const bool build = suite == "build" || suite == "default";
    const bool separator = suite == "separator" || suite == "default";
    if (!build && !separator) {
        std::fprintf(stderr, "error: E_INVALID_PARAMS: unknown bench suite '%s'\n",
                     suite.c_str());
        return 1;
    }
    if (build) {
        for (std::uint32_t n : {128u, 256u, 512u}) {
            spanner_points* pts = nullptr;
            check(spanner_points_uniform(n, 7, &pts));
            PointsPtr guard(pts);
            for (int algo : {SPANNER_ALGO_NAIVE, SPANNER_ALGO_FAST}) {
                if (algo == SPANNER_ALGO_NAIVE && n > 256) continue;
                const double start = now_seconds();
                spanner_graph* g = nullptr;
                check(spanner_build(pts, 1.5, algo, &g));
                const double secs = now_seconds() - start;
                std::printf("{\"suite\":\"build\",\"n\":%u,\"algo\":\"%s\",\"m\":%zu,"
                            "\"seconds\":%.4f}\n",
                            n, algo == SPANNER_ALGO_NAIVE ? "naive" : "fast",
                            spanner_graph_edge_count(g), secs);
                spanner_graph_free(g);
            }
        }
    }
    if (separator) {
        for (std::uint32_t n : {256u, 1024u}) {
            spanner_points* pts = nullptr;
            check(spanner_points_uniform(n, 7, &pts));
            PointsPtr guard(pts);
            GraphPtr g = build_graph(pts, 2.0, "fast");
            const double start = now_seconds();
            char* json = nullptr;
            check(spanner_separator_json(g.get(), 0, &json));
            const double secs = now_seconds() - start;
            spanner_string_free(json);
            std::printf("{\"suite\":\"separator\",\"n\":%u,\"seconds\":%.4f}\n", n, secs);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy t-spanner construction and crossing analysis"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a points file");
    std::string gen_kind = "uniform";
    std::uint32_t gen_n = 128;
    double gen_t = 1.5, gen_delta = 0.2, gen_s = 0.5, gen_dx = 1.0;
    std::uint32_t gen_columns = 16, gen_count = 16;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "uniform|zigzag|arrangement")
        ->check(CLI::IsMember({"uniform", "zigzag", "arrangement"}));
    gen->add_option("--n", gen_n, "point count (uniform)");
    gen->add_option("--count", gen_count, "point count (zigzag)");
    gen->add_option("--t", gen_t, "stretch factor (arrangement)");
    gen->add_option("--s", gen_s, "zig-zag stretch factor");
    gen->add_option("--delta", gen_delta, "middle-band excess (arrangement)");
    gen->add_option("--columns", gen_columns, "x-columns (arrangement)");
    gen->add_option("--dx", gen_dx, "column spacing");
    gen->add_option("--seed", gen_seed, "RNG seed (uniform)");
    gen->add_option("--out", gen_out, "output points file")->required();

    // build
    auto* build = app.add_subcommand("build", "build a greedy spanner");
    std::string build_in, build_out, build_stats, build_algo = "fast";
    double build_t = 2.0, build_perturb = 0.0;
    std::uint64_t build_seed = 1;
    bool build_with_sep = false;
    build->add_option("--in", build_in, "input points file")->required();
    build->add_option("--t", build_t, "stretch factor")->required();
    build->add_option("--algo", build_algo, "naive|fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    build->add_option("--out", build_out, "output edge file");
    build->add_option("--stats", build_stats, "output stats JSON file");
    build->add_option("--perturb", build_perturb, "seeded jitter as fraction of diameter");
    build->add_option("--seed", build_seed, "jitter seed");
    build->add_flag("--separator", build_with_sep, "include separator stats");
    std::string build_out_points;
    build->add_option("--out-points", build_out_points,
                      "write the (possibly perturbed) coordinates actually used");

    // verify
    auto* verify = app.add_subcommand("verify", "check spanner properties");
    std::string verify_points, verify_graph;
    double verify_t = 2.0;
    verify->add_option("--in-points", verify_points, "points file")->required();
    verify->add_option("--in-graph", verify_graph, "edge file")->required();
    verify->add_option("--t", verify_t, "stretch factor")->required();

    // crossings
    auto* crossings = app.add_subcommand("crossings", "crossing-structure stats");
    std::string cr_points, cr_graph, cr_stats;
    double cr_t = 0.0, cr_perturb = 0.0;
    std::uint64_t cr_seed = 1;
    crossings->add_option("--in-points", cr_points, "points file")->required();
    crossings->add_option("--in-graph", cr_graph, "edge file")->required();
    crossings->add_option("--t", cr_t, "stretch factor used to build the graph");
    crossings->add_option("--stats", cr_stats, "output stats JSON file");
    crossings->add_option("--perturb", cr_perturb, "seeded jitter as fraction of diameter");
    crossings->add_option("--seed", cr_seed, "jitter seed");

    // separator
    auto* separator = app.add_subcommand("separator", "balanced separator / hierarchy");
    std::string sep_points, sep_graph, sep_stats;
    double sep_t = 0.0;
    std::uint32_t sep_cutoff = 0;
    separator->add_option("--in-points", sep_points, "points file")->required();
    separator->add_option("--in-graph", sep_graph, "edge file")->required();
    separator->add_option("--t", sep_t, "stretch factor used to build the graph");
    separator->add_option("--cutoff", sep_cutoff, "hierarchy leaf cutoff (0 = one shot)");
    separator->add_option("--stats", sep_stats, "output stats JSON file");

    // svg
    auto* svg = app.add_subcommand("svg", "render the embedded graph");
    std::string svg_points, svg_graph, svg_out;
    bool svg_highlight = false;
    svg->add_option("--in-points", svg_points, "points file")->required();
    svg->add_option("--in-graph", svg_graph, "edge file")->required();
    svg->add_option("--out", svg_out, "output SVG file")->required();
    svg->add_flag("--highlight-crossings", svg_highlight, "circle the crossing points");

    // bench
    auto* bench = app.add_subcommand("bench", "timing suites");
    std::string bench_suite = "default";
    bench->add_option("--suite", bench_suite, "default|build|separator");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        spanner_points* raw = nullptr;
        if (gen_kind == "uniform") {
            check(spanner_points_uniform(gen_n, gen_seed, &raw));
        } else if (gen_kind == "zigzag") {
            check(spanner_points_zigzag(0.0, 0.0, gen_dx, gen_s, gen_count, 1.0, 0.0, &raw));
        } else {
            check(spanner_points_arrangement(gen_t, gen_delta, gen_columns, gen_dx, &raw));
        }
        PointsPtr pts(raw);
        check(spanner_points_write(pts.get(), gen_out.c_str()));
        std::printf("wrote %zu points to %s\n", spanner_points_count(pts.get()),
                    gen_out.c_str());
        return 0;
    }

    if (build->parsed()) {
        PointsPtr pts = load_points(build_in, build_perturb, build_seed);
        GraphPtr g = build_graph(pts.get(), build_t, build_algo);
        if (!build_out.empty()) {
            check(spanner_graph_write_edges(g.get(), build_out.c_str()));
        }
        if (!build_out_points.empty()) {
            check(spanner_points_write(pts.get(), build_out_points.c_str()));
        }
        if (!build_stats.empty()) {
            char* json = nullptr;
            write_text_file(build_stats,
                            slurp_json(spanner_stats_json(g.get(), build_with_sep, &json),
                                       &json));
        }
        std::printf("built spanner: n=%zu m=%zu\n", spanner_graph_vertex_count(g.get()),
                    spanner_graph_edge_count(g.get()));
        return 0;
    }

    if (verify->parsed()) {
        GraphPtr g = load_graph(verify_points, verify_graph, verify_t);
        char* json = nullptr;
        const std::string doc = slurp_json(spanner_verify_json(g.get(), verify_t, &json), &json);
        std::fputs(doc.c_str(), stdout);
        const bool clean = doc.find("\"violations\": 0") != std::string::npos &&
                           doc.find("\"nested_pairs\": 0") != std::string::npos;
        return clean ? 0 : 2;
    }

    if (crossings->parsed()) {
        PointsPtr pts = load_points(cr_points, cr_perturb, cr_seed);
        spanner_graph* raw = nullptr;
        check(spanner_graph_from_points(pts.get(), cr_graph.c_str(), cr_t, &raw));
        GraphPtr g(raw);
        char* json = nullptr;
        const std::string doc = slurp_json(spanner_crossings_json(g.get(), &json), &json);
        if (!cr_stats.empty()) {
            write_text_file(cr_stats, doc);
        } else {
            std::fputs(doc.c_str(), stdout);
        }
        return 0;
    }

    if (separator->parsed()) {
        GraphPtr g = load_graph(sep_points, sep_graph, sep_t);
        char* json = nullptr;
        const std::string doc =
            slurp_json(spanner_separator_json(g.get(), sep_cutoff, &json), &json);
        if (!sep_stats.empty()) {
            write_text_file(sep_stats, doc);
        } else {
            std::fputs(doc.c_str(), stdout);
        }
        return 0;
    }

    if (svg->parsed()) {
        GraphPtr g = load_graph(svg_points, svg_graph, 0.0);
        char* text = nullptr;
        write_text_file(svg_out, slurp_json(spanner_svg(g.get(), svg_highlight, &text), &text));
        std::printf("wrote %s\n", svg_out.c_str());
        return 0;
    }

    if (bench->parsed()) return run_bench(bench_suite);
    return 0;
}
