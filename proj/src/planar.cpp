#include "spanner/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace spanner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr VertexId kNone = static_cast<VertexId>(-1);

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::vector<std::vector<VertexId>> adjacency_of(std::size_t n, const EdgeList& edges) {
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// ── Rotation-system multigraph ──────────────────────────────────────
//
// Half-edges 2e (u→v) and 2e+1 (v→u); rotations are circular linked
// lists in counter-clockwise order, so the face to the left of h
// continues at next(twin(h)).  Supports edge deletion, contraction of
// an edge (merging its target into its origin), and face walks; this
// is all the structure the separator's cycle step needs.
class RotationGraph {
public:
    static constexpr std::uint32_t kNoHalf = 0xffffffffu;

    RotationGraph(const std::vector<Point>& coords, const EdgeList& edges,
                  const std::vector<char>& in_subset)
        : coords_(coords) {
        const std::size_t n = coords.size();
        entry_.assign(n, kNoHalf);
        vert_alive_.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) vert_alive_[v] = in_subset[v];
        for (const auto& [a, b] : edges) {
            if (!in_subset[a] || !in_subset[b]) continue;
            new_edge_pair(a, b);
        }
        // CCW rotations by angle.
        std::vector<std::vector<std::pair<double, std::uint32_t>>> rot(n);
        for (std::uint32_t h = 0; h < origin_.size(); ++h) {
            const Point& from = coords_[origin_[h]];
            const Point& to = coords_[origin_[h ^ 1]];
            rot[origin_[h]].push_back({std::atan2(to.y - from.y, to.x - from.x), h});
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto& r = rot[v];
            std::sort(r.begin(), r.end());
            link_cycle(static_cast<VertexId>(v), r);
        }
    }

    std::size_t edge_slots() const { return origin_.size() / 2; }
    bool edge_alive(std::uint32_t e) const { return edge_alive_[e]; }
    bool vertex_alive(VertexId v) const { return vert_alive_[v]; }
    VertexId origin(std::uint32_t h) const { return origin_[h]; }
    VertexId target(std::uint32_t h) const { return origin_[h ^ 1]; }
    std::uint32_t entry(VertexId v) const { return entry_[v]; }
    std::uint32_t rot_next(std::uint32_t h) const { return next_[h]; }
    std::uint32_t face_next(std::uint32_t h) const { return next_[h ^ 1]; }

    void remove_edge(std::uint32_t e) {
        unlink(2 * e);
        unlink(2 * e + 1);
        edge_alive_[e] = 0;
    }

    /// Merges target(h) into origin(h) along edge h/2, preserving the
    /// rotation system; removes any self-loops the merge creates.
    void contract(std::uint32_t h) {
        const VertexId u = origin_[h];
        const VertexId v = origin_[h ^ 1];
        const std::uint32_t hv = h ^ 1;

        // v's remaining rotation, in order, starting after hv.
        std::vector<std::uint32_t> seq;
        for (std::uint32_t s = next_[hv]; s != hv; s = next_[s]) seq.push_back(s);

        const std::uint32_t after = next_[h];  // may equal h (degree-1 u)
        const std::uint32_t before = prev_[h];
        const bool u_solo = (next_[h] == h);
        unlink(h);
        edge_alive_[h / 2] = 0;

        for (std::uint32_t s : seq) origin_[s] = u;
        if (!seq.empty()) {
            if (u_solo) {
                // seq becomes u's whole rotation.
                for (std::size_t k = 0; k < seq.size(); ++k) {
                    next_[seq[k]] = seq[(k + 1) % seq.size()];
                    prev_[seq[(k + 1) % seq.size()]] = seq[k];
                }
                entry_[u] = seq.front();
            } else {
                std::uint32_t left = before;
                for (std::uint32_t s : seq) {
                    next_[left] = s;
                    prev_[s] = left;
                    left = s;
                }
                next_[left] = after;
                prev_[after] = left;
            }
        }
        vert_alive_[v] = 0;
        entry_[v] = kNoHalf;

        // Drop self-loops produced by parallel u-v edges.
        std::vector<std::uint32_t> loops;
        for_each_rotation(u, [&](std::uint32_t h2) {
            if (origin_[h2 ^ 1] == u && (h2 & 1u) == 0) loops.push_back(h2);
        });
        for (std::uint32_t h2 : loops) remove_edge(h2 / 2);
    }

    /// New edge (a, b); caller must splice both half-edges.
    std::pair<std::uint32_t, std::uint32_t> add_edge(VertexId a, VertexId b) {
        const std::uint32_t h = new_edge_pair(a, b);
        return {h, h ^ 1};
    }

    void insert_after(std::uint32_t pos, std::uint32_t h) {
        next_[h] = next_[pos];
        prev_[next_[pos]] = h;
        next_[pos] = h;
        prev_[h] = pos;
    }

    void insert_before(std::uint32_t pos, std::uint32_t h) { insert_after(prev_[pos], h); }

    /// Makes h the sole rotation entry of an isolated vertex.
    void link_single(VertexId v, std::uint32_t h) {
        next_[h] = h;
        prev_[h] = h;
        entry_[v] = h;
    }

    template <typename Fn>
    void for_each_rotation(VertexId v, Fn&& fn) const {
        const std::uint32_t start = entry_[v];
        if (start == kNoHalf) return;
        std::uint32_t h = start;
        do {
            fn(h);
            h = next_[h];
        } while (h != start);
    }

    std::vector<std::vector<std::uint32_t>> faces() const {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<char> seen(origin_.size(), 0);
        for (std::uint32_t h = 0; h < origin_.size(); ++h) {
            if (!edge_alive_[h / 2] || seen[h]) continue;
            std::vector<std::uint32_t> walk;
            std::uint32_t cur = h;
            do {
                seen[cur] = 1;
                walk.push_back(cur);
                cur = face_next(cur);
            } while (cur != h);
            out.push_back(std::move(walk));
        }
        return out;
    }

private:
    std::uint32_t new_edge_pair(VertexId a, VertexId b) {
        const std::uint32_t h = static_cast<std::uint32_t>(origin_.size());
        origin_.push_back(a);
        origin_.push_back(b);
        next_.push_back(h);
        next_.push_back(h + 1);
        prev_.push_back(h);
        prev_.push_back(h + 1);
        edge_alive_.push_back(1);
        return h;
    }

    void link_cycle(VertexId v, const std::vector<std::pair<double, std::uint32_t>>& r) {
        if (r.empty()) {
            entry_[v] = kNoHalf;
            return;
        }
        for (std::size_t k = 0; k < r.size(); ++k) {
            const std::uint32_t h = r[k].second;
            const std::uint32_t nh = r[(k + 1) % r.size()].second;
            next_[h] = nh;
            prev_[nh] = h;
        }
        entry_[v] = r.front().second;
    }

    void unlink(std::uint32_t h) {
        const VertexId v = origin_[h];
        if (next_[h] == h) {
            entry_[v] = kNoHalf;
        } else {
            next_[prev_[h]] = next_[h];
            prev_[next_[h]] = prev_[h];
            if (entry_[v] == h) entry_[v] = next_[h];
        }
        next_[h] = h;
        prev_[h] = h;
    }

    const std::vector<Point>& coords_;
    std::vector<VertexId> origin_;
    std::vector<std::uint32_t> next_, prev_;
    std::vector<std::uint32_t> entry_;
    std::vector<char> edge_alive_;
    std::vector<char> vert_alive_;
};

/// Deletes one edge of every two-edge face bounded by distinct parallel
/// edges; leaves bridge walks (h, twin) alone.
void remove_bigons(RotationGraph& rg) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& walk : rg.faces()) {
            if (walk.size() == 2 && walk[1] != (walk[0] ^ 1)) {
                rg.remove_edge(walk[1] / 2);
                changed = true;
                break;
            }
        }
    }
}

/// Ear-cuts every face down to triangles.  Raises internal if a face
/// cannot be cut (only pure bigon walks do that, which remove_bigons
/// and the small-graph guards exclude).
void triangulate(RotationGraph& rg) {
    for (auto walk : rg.faces()) {
        while (walk.size() > 3) {
            const std::size_t m = walk.size();
            bool cut = false;
            for (std::size_t i = 0; i < m; ++i) {
                const std::uint32_t h_prev = walk[(i + m - 1) % m];
                const std::uint32_t h_cur = walk[i];
                const VertexId a = rg.origin(h_prev);
                const VertexId c = rg.target(h_cur);
                if (a == c) continue;
                auto [d1, d2] = rg.add_edge(a, c);
                rg.insert_before(h_prev, d1);
                rg.insert_after(h_cur ^ 1, d2);
                std::vector<std::uint32_t> next_walk;
                next_walk.reserve(m - 1);
                for (std::size_t k = 0; k < m; ++k) {
                    if (k == i) continue;
                    if (k == (i + m - 1) % m) {
                        next_walk.push_back(d1);
                    } else {
                        next_walk.push_back(walk[k]);
                    }
                }
                walk = std::move(next_walk);
                cut = true;
                break;
            }
            require(cut, Errc::internal, "face cannot be triangulated");
        }
    }
}

struct Component {
    std::vector<VertexId> vertices;
    double weight = 0.0;
};

std::vector<Component> components_excluding(
    const std::vector<std::vector<VertexId>>& adj, const std::vector<double>& weights,
    const std::vector<char>& excluded, const std::vector<char>* universe = nullptr) {
    const std::size_t n = adj.size();
    std::vector<Component> comps;
    std::vector<char> seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || excluded[s]) continue;
        if (universe && !(*universe)[s]) continue;
        Component comp;
        std::vector<VertexId> stack{static_cast<VertexId>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            comp.weight += weights[v];
            for (VertexId w : adj[v]) {
                if (seen[w] || excluded[w]) continue;
                if (universe && !(*universe)[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Greedy two-bin packing of components, heaviest first into the
/// lighter side.  Every component must weigh at most 2/3 of total.
Separator pack_sides(std::vector<Component> comps, std::vector<VertexId> separator,
                     const std::vector<double>& weights, double total) {
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.vertices < b.vertices;
    });
    Separator sep;
    sep.vertices = std::move(separator);
    double wa = 0.0, wb = 0.0;
    for (auto& comp : comps) {
        require(comp.weight <= total * (2.0 / 3.0 + 1e-9), Errc::separator_guarantee,
                "a residual component exceeds the 2/3 balance bound");
        auto& side = (wa <= wb) ? sep.side_a : sep.side_b;
        auto& w = (wa <= wb) ? wa : wb;
        side.insert(side.end(), comp.vertices.begin(), comp.vertices.end());
        w += comp.weight;
    }
    std::sort(sep.vertices.begin(), sep.vertices.end());
    std::sort(sep.side_a.begin(), sep.side_a.end());
    std::sort(sep.side_b.begin(), sep.side_b.end());
    sep.balance = total > 0.0 ? std::max(wa, wb) / total : 0.0;
    (void)weights;
    return sep;
}

struct BfsLevels {
    std::vector<std::uint32_t> level;   // kNone-level for unreachable
    std::vector<VertexId> parent;
    std::vector<std::vector<VertexId>> by_level;
};

BfsLevels bfs_levels(const std::vector<std::vector<VertexId>>& adj, VertexId root) {
    BfsLevels out;
    out.level.assign(adj.size(), static_cast<std::uint32_t>(-1));
    out.parent.assign(adj.size(), kNone);
    std::queue<VertexId> q;
    out.level[root] = 0;
    q.push(root);
    out.by_level.push_back({root});
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        for (VertexId w : adj[v]) {
            if (out.level[w] != static_cast<std::uint32_t>(-1)) continue;
            out.level[w] = out.level[v] + 1;
            out.parent[w] = v;
            if (out.by_level.size() <= out.level[w]) out.by_level.resize(out.level[w] + 1);
            out.by_level[out.level[w]].push_back(w);
            q.push(w);
        }
    }
    return out;
}

/// Fundamental-cycle refinement of a heavy middle slab.  Contracts
/// levels [0, l0] into the BFS root, triangulates, and scans non-tree
/// edges for a cycle whose removal leaves every piece at most
/// 2/3 * total_weight.  Returns the cycle vertices (root excluded).
std::vector<VertexId> middle_cycle(const Planarization& p,
                                   const std::vector<double>& weights,
                                   const BfsLevels& levels, VertexId root,
                                   std::uint32_t l0, std::uint32_t l2, double total) {
    const std::size_t n = p.vertex_count();
    std::vector<char> in_subset(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        in_subset[v] = levels.level[v] != static_cast<std::uint32_t>(-1) &&
                       levels.level[v] < l2;
    }

    RotationGraph rg(p.coords, p.edges, in_subset);
    const std::size_t real_edges = rg.edge_slots();

    // Contract levels [0, l0] into the root, walking the BFS order so a
    // vertex is merged only after its parent.
    for (std::uint32_t l = 1; l <= l0; ++l) {
        if (l >= levels.by_level.size()) break;
        for (VertexId v : levels.by_level[l]) {
            std::uint32_t h_to_v = RotationGraph::kNoHalf;
            rg.for_each_rotation(root, [&](std::uint32_t h) {
                if (h_to_v == RotationGraph::kNoHalf && rg.target(h) == v) h_to_v = h;
            });
            require(h_to_v != RotationGraph::kNoHalf, Errc::internal,
                    "contraction lost a tree edge");
            rg.contract(h_to_v);
        }
    }

    remove_bigons(rg);

    // BFS tree of the contracted graph over surviving real edges.
    std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> cadj(n);
    for (std::uint32_t e = 0; e < real_edges; ++e) {
        if (!rg.edge_alive(e)) continue;
        const VertexId a = rg.origin(2 * e);
        const VertexId b = rg.origin(2 * e + 1);
        cadj[a].push_back({b, e});
        cadj[b].push_back({a, e});
    }
    std::vector<std::uint32_t> depth(n, static_cast<std::uint32_t>(-1));
    std::vector<VertexId> parent(n, kNone);
    std::vector<char> tree_edge(rg.edge_slots(), 0);
    {
        std::queue<VertexId> q;
        depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (const auto& [w, e] : cadj[v]) {
                if (depth[w] != static_cast<std::uint32_t>(-1)) continue;
                depth[w] = depth[v] + 1;
                parent[w] = v;
                tree_edge[e] = 1;
                q.push(w);
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        require(!rg.vertex_alive(v) || depth[v] != static_cast<std::uint32_t>(-1),
                Errc::internal, "contracted slab is disconnected");
    }

    triangulate(rg);
    tree_edge.resize(rg.edge_slots(), 0);

    // Real adjacency for piece evaluation (parallel edges are harmless).
    std::vector<std::vector<VertexId>> radj(n);
    for (std::uint32_t e = 0; e < real_edges; ++e) {
        if (!rg.edge_alive(e)) continue;
        radj[rg.origin(2 * e)].push_back(rg.origin(2 * e + 1));
        radj[rg.origin(2 * e + 1)].push_back(rg.origin(2 * e));
    }

    // Cycle balance is evaluated over the contracted graph: merged
    // vertices are gone and the root stands in for them with no weight
    // (its constituents land in the separator levels or the top part).
    std::vector<char> alive(n, 0);
    for (std::size_t v = 0; v < n; ++v) alive[v] = rg.vertex_alive(v) ? 1 : 0;
    std::vector<double> mweights(weights);
    mweights[root] = 0.0;

    auto cycle_of = [&](std::uint32_t e) {
        VertexId a = rg.origin(2 * e);
        VertexId b = rg.origin(2 * e + 1);
        std::vector<VertexId> left, right;
        while (depth[a] > depth[b]) {
            left.push_back(a);
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            right.push_back(b);
            b = parent[b];
        }
        while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        left.push_back(a);
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
    };

    std::vector<char> on_cycle(n, 0);
    std::vector<VertexId> best_cycle;
    double best_piece = kInf;
    const double accept = total * (2.0 / 3.0 + 1e-12);
    for (std::uint32_t e = 0; e < rg.edge_slots() && best_piece > total * 0.5; ++e) {
        if (!rg.edge_alive(e) || tree_edge[e]) continue;
        if (rg.origin(2 * e) == rg.origin(2 * e + 1)) continue;
        const auto cycle = cycle_of(e);
        for (VertexId v : cycle) on_cycle[v] = 1;
        double heaviest = 0.0;
        for (const auto& comp : components_excluding(radj, mweights, on_cycle, &alive)) {
            heaviest = std::max(heaviest, comp.weight);
        }
        for (VertexId v : cycle) on_cycle[v] = 0;
        if (heaviest < best_piece) {
            best_piece = heaviest;
            best_cycle = cycle;
        }
    }
    require(best_piece <= accept, Errc::separator_guarantee,
            "no fundamental cycle balances the middle slab");

    std::vector<VertexId> out;
    for (VertexId v : best_cycle) {
        if (v != root) out.push_back(v);
    }
    return out;
}

Separator finalize(const std::vector<std::vector<VertexId>>& adj,
                   const std::vector<double>& weights,
                   std::vector<VertexId> separator, double total, double size_limit) {
    std::vector<char> excluded(adj.size(), 0);
    std::sort(separator.begin(), separator.end());
    separator.erase(std::unique(separator.begin(), separator.end()), separator.end());
    for (VertexId v : separator) excluded[v] = 1;
    require(static_cast<double>(separator.size()) <= size_limit + 1e-9,
            Errc::separator_guarantee, "separator exceeds its declared size bound");
    auto comps = components_excluding(adj, weights, excluded);
    return pack_sides(std::move(comps), std::move(separator), weights, total);
}

}  // namespace

Planarization Planarization::plane_graph(std::vector<Point> coords, EdgeList edges) {
    Planarization p;
    p.coords = std::move(coords);
    p.original_count = p.coords.size();
    p.edges = std::move(edges);
    p.edge_origin.assign(p.edges.size(), static_cast<EdgeId>(-1));
    return p;
}

Planarization planarize(const SpannerGraph& g) {
    const CrossingGraph cg = build_crossing_graph(g);
    const std::size_t n = g.vertex_count();

    Planarization p;
    p.original_count = n;
    p.coords.assign(g.points().begin(), g.points().end());
    p.dummy_origins.reserve(cg.crossing_count());

    // One dummy per crossing, in (e1, e2) order.
    std::vector<std::vector<std::pair<double, VertexId>>> cuts(g.edge_count());
    for (const auto& c : cg.crossings) {
        const VertexId dummy = static_cast<VertexId>(p.coords.size());
        p.coords.push_back(c.at);
        p.dummy_origins.push_back({c.e1, c.e2});
        for (EdgeId e : {c.e1, c.e2}) {
            const Segment s = g.segment(e);
            const double dx = s.b.x - s.a.x;
            const double dy = s.b.y - s.a.y;
            const double param =
                ((c.at.x - s.a.x) * dx + (c.at.y - s.a.y) * dy) / (dx * dx + dy * dy);
            cuts[e].push_back({param, dummy});
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto& list = cuts[e];
        std::sort(list.begin(), list.end());
        VertexId prev = g.edges()[e].i;
        for (const auto& [param, dummy] : list) {
            p.edges.push_back({prev, dummy});
            p.edge_origin.push_back(e);
            prev = dummy;
        }
        p.edges.push_back({prev, g.edges()[e].j});
        p.edge_origin.push_back(e);
    }
    return p;
}

Separator planar_separator(const Planarization& p, const std::vector<double>& weights) {
    const std::size_t n = p.vertex_count();
    require(n > 0, Errc::invalid_params, "empty graph");
    require(weights.size() == n, Errc::invalid_params, "one weight per vertex required");
    double total = 0.0;
    for (double w : weights) {
        require(w >= 0.0 && std::isfinite(w), Errc::invalid_params,
                "weights must be finite and nonnegative");
        total += w;
    }
    require(total > 0.0, Errc::invalid_params, "total weight must be positive");

    const auto adj = adjacency_of(n, p.edges);
    {
        std::vector<char> none(n, 0);
        require(components_excluding(adj, weights, none).size() == 1, Errc::disconnected,
                "graph must be connected");
    }

    const double size_limit = kSeparatorSizeFactor * std::sqrt(static_cast<double>(n));

    if (n <= 2) {
        VertexId heavy = 0;
        for (VertexId v = 1; v < n; ++v) {
            if (weights[v] > weights[heavy]) heavy = v;
        }
        return finalize(adj, weights, {heavy}, total, size_limit);
    }

    const VertexId root = 0;
    const BfsLevels levels = bfs_levels(adj, root);
    const std::size_t height = levels.by_level.size();  // levels 0..height-1

    std::vector<double> level_weight(height, 0.0);
    for (std::size_t l = 0; l < height; ++l) {
        for (VertexId v : levels.by_level[l]) level_weight[l] += weights[v];
    }

    std::uint32_t l1 = 0;
    {
        double cum = 0.0;
        for (std::size_t l = 0; l < height; ++l) {
            cum += level_weight[l];
            if (cum >= total * 0.5) {
                l1 = static_cast<std::uint32_t>(l);
                break;
            }
        }
    }

    // A thin median level separates on its own.
    if (static_cast<double>(levels.by_level[l1].size()) <=
        2.0 * std::sqrt(2.0 * static_cast<double>(n))) {
        return finalize(adj, weights, levels.by_level[l1], total, size_limit);
    }

    std::size_t k_size = 0;
    for (std::uint32_t l = 0; l <= l1; ++l) k_size += levels.by_level[l].size();
    const std::size_t rest = n - k_size;

    std::uint32_t l0 = 0;
    {
        bool found = false;
        const double bound = 2.0 * std::sqrt(static_cast<double>(k_size));
        for (std::uint32_t l = l1;; --l) {
            if (static_cast<double>(levels.by_level[l].size()) + 2.0 * (l1 - l) <= bound) {
                l0 = l;
                found = true;
                break;
            }
            if (l == 0) break;
        }
        require(found, Errc::internal, "no thin level at or below the median");
    }
    std::uint32_t l2 = static_cast<std::uint32_t>(height);  // may be one past the end
    {
        bool found = false;
        const double bound = 2.0 * std::sqrt(static_cast<double>(rest));
        for (std::uint32_t l = l1 + 1; l <= height; ++l) {
            const double sz = l < height ? static_cast<double>(levels.by_level[l].size()) : 0.0;
            if (sz + 2.0 * (l - l1 - 1) <= bound) {
                l2 = l;
                found = true;
                break;
            }
        }
        require(found, Errc::internal, "no thin level above the median");
    }

    std::vector<VertexId> sep;
    for (VertexId v : levels.by_level[l0]) sep.push_back(v);
    if (l2 < height) {
        for (VertexId v : levels.by_level[l2]) sep.push_back(v);
    }

    double middle_weight = 0.0;
    std::size_t middle_size = 0;
    for (std::uint32_t l = l0 + 1; l < l2 && l < height; ++l) {
        middle_weight += level_weight[l];
        middle_size += levels.by_level[l].size();
    }

    if (middle_weight > total * (2.0 / 3.0)) {
        if (middle_size <= 3) {
            for (std::uint32_t l = l0 + 1; l < l2 && l < height; ++l) {
                for (VertexId v : levels.by_level[l]) sep.push_back(v);
            }
        } else {
            const auto cycle = middle_cycle(p, weights, levels, root, l0, l2, total);
            sep.insert(sep.end(), cycle.begin(), cycle.end());
        }
    }
    return finalize(adj, weights, std::move(sep), total, size_limit);
}

Separator spanner_separator(const SpannerGraph& g) {
    require(g.connected(), Errc::disconnected, "graph must be connected");
    const Planarization p = planarize(g);
    const std::size_t big_n = p.vertex_count();

    std::vector<double> weights(big_n, 0.0);
    for (std::size_t v = 0; v < p.original_count; ++v) weights[v] = 1.0;

    const Separator planar = planar_separator(p, weights);

    // A selected dummy is resolved by deleting the endpoints of the
    // shorter of its two crossing edges, which removes that edge and
    // with it the crossing.  The surviving crossing edge can still
    // bridge the two sides; when the flood fill below detects that,
    // the affected crossings escalate to both edges' endpoints.
    auto mapped = [&](bool both_edges) {
        std::vector<VertexId> sep;
        for (VertexId v : planar.vertices) {
            if (!p.is_dummy(v)) {
                sep.push_back(v);
                continue;
            }
            const auto [e1, e2] = p.dummy_origins[v - p.original_count];
            const EdgeId shorter = (g.edges()[e2].length < g.edges()[e1].length) ? e2 : e1;
            sep.push_back(g.edges()[shorter].i);
            sep.push_back(g.edges()[shorter].j);
            if (both_edges) {
                const EdgeId longer = shorter == e1 ? e2 : e1;
                sep.push_back(g.edges()[longer].i);
                sep.push_back(g.edges()[longer].j);
            }
        }
        std::sort(sep.begin(), sep.end());
        sep.erase(std::unique(sep.begin(), sep.end()), sep.end());
        return sep;
    };

    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (const GraphEdge& e : g.edges()) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<double> unit(n, 1.0);

    std::vector<VertexId> sep = mapped(false);
    std::size_t escalated = 0;
    {
        std::vector<char> excluded(n, 0);
        for (VertexId v : sep) excluded[v] = 1;
        double heaviest = 0.0;
        for (const auto& comp : components_excluding(adj, unit, excluded)) {
            heaviest = std::max(heaviest, comp.weight);
        }
        if (heaviest > static_cast<double>(n) * (2.0 / 3.0 + 1e-9)) {
            sep = mapped(true);
            for (VertexId v : planar.vertices) {
                if (p.is_dummy(v)) ++escalated;
            }
        }
    }

    const double size_limit =
        2.0 * kSeparatorSizeFactor * std::sqrt(static_cast<double>(big_n)) +
        2.0 * static_cast<double>(escalated);
    return finalize(adj, unit, std::move(sep), static_cast<double>(n), size_limit);
}

namespace {

SpannerGraph induced_subgraph(const SpannerGraph& g, const std::vector<VertexId>& verts,
                              std::vector<VertexId>& to_original) {
    std::vector<VertexId> remap(g.vertex_count(), kNone);
    to_original = verts;
    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k) {
        remap[verts[k]] = static_cast<VertexId>(k);
        pts.push_back(g.points()[verts[k]]);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const GraphEdge& e : g.edges()) {
        if (remap[e.i] != kNone && remap[e.j] != kNone) {
            edges.push_back({remap[e.i], remap[e.j]});
        }
    }
    return SpannerGraph::from_edges(PointSet(std::move(pts)), edges, g.stretch());
}

SeparatorTree build_hierarchy(const SpannerGraph& g, std::vector<VertexId> subset,
                              std::uint32_t cutoff) {
    SeparatorTree node;
    std::sort(subset.begin(), subset.end());
    if (subset.size() <= cutoff) {
        node.leaf_vertices = std::move(subset);
        return node;
    }

    std::vector<VertexId> to_original;
    const SpannerGraph sub = induced_subgraph(g, subset, to_original);
    const double total = static_cast<double>(subset.size());

    std::vector<std::vector<VertexId>> adj(sub.vertex_count());
    for (const GraphEdge& e : sub.edges()) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<double> unit(sub.vertex_count(), 1.0);
    std::vector<char> none(sub.vertex_count(), 0);
    auto comps = components_excluding(adj, unit, none);

    std::vector<Component> pieces;
    std::vector<VertexId> separator;
    auto heaviest = std::max_element(
        comps.begin(), comps.end(),
        [](const Component& a, const Component& b) { return a.weight < b.weight; });

    if (heaviest->weight > total * (2.0 / 3.0)) {
        // Separate the dominant component; the rest are small pieces.
        std::vector<VertexId> comp_orig;
        comp_orig.reserve(heaviest->vertices.size());
        std::vector<VertexId> comp_sorted = heaviest->vertices;
        std::sort(comp_sorted.begin(), comp_sorted.end());
        for (VertexId v : comp_sorted) comp_orig.push_back(to_original[v]);

        std::vector<VertexId> comp_to_orig;
        const SpannerGraph comp_graph = induced_subgraph(g, comp_orig, comp_to_orig);
        const Separator sep = spanner_separator(comp_graph);

        for (VertexId v : sep.vertices) separator.push_back(comp_to_orig[v]);
        for (const auto* side : {&sep.side_a, &sep.side_b}) {
            Component piece;
            for (VertexId v : *side) piece.vertices.push_back(comp_to_orig[v]);
            piece.weight = static_cast<double>(piece.vertices.size());
            if (!piece.vertices.empty()) pieces.push_back(std::move(piece));
        }
        for (auto& comp : comps) {
            if (&comp == &*heaviest) continue;
            Component piece;
            for (VertexId v : comp.vertices) piece.vertices.push_back(to_original[v]);
            piece.weight = comp.weight;
            pieces.push_back(std::move(piece));
        }
    } else {
        for (auto& comp : comps) {
            Component piece;
            for (VertexId v : comp.vertices) piece.vertices.push_back(to_original[v]);
            piece.weight = comp.weight;
            pieces.push_back(std::move(piece));
        }
    }

    node.separator = pack_sides(std::move(pieces), std::move(separator),
                                std::vector<double>(), total);
    for (const auto* side : {&node.separator.side_a, &node.separator.side_b}) {
        if (!side->empty()) {
            node.children.push_back(build_hierarchy(g, *side, cutoff));
        }
    }
    return node;
}

}  // namespace

std::size_t SeparatorTree::depth() const {
    if (is_leaf()) return 0;
    std::size_t d = 0;
    for (const auto& child : children) d = std::max(d, child.depth());
    return d + 1;
}

SeparatorTree separator_hierarchy(const SpannerGraph& g, std::uint32_t cutoff) {
    require(cutoff >= 1, Errc::invalid_params, "cutoff must be at least 1");
    std::vector<VertexId> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return build_hierarchy(g, std::move(all), cutoff);
}

}  // namespace spanner
