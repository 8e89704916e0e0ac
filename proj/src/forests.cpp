#include "msf/forests.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace msf {

double ZValue::value(const Labeling& u) const {
    switch (kind) {
        case Kind::Finite: return u.value(witness);
        case Kind::Infinite: return std::numeric_limits<double>::infinity();
        case Kind::Bottom: return -std::numeric_limits<double>::infinity();
        case Kind::One: return 1.0;
    }
    return 0.0;
}

bool ZValue::admits(EdgeId e, const Labeling& u) const {
    switch (kind) {
        case Kind::Finite: return u.less(e, witness);
        case Kind::Infinite: return true;
        case Kind::Bottom: return false;
        case Kind::One: return u.value(e) < 1.0;
    }
    return false;
}

ForestMask kruskal_mst(const MultiGraph& g, const Labeling& u) {
    ForestMask t(g.edge_count());
    Partition part(g.vertex_count);
    for (EdgeId e : u.sorted_edges()) {
        auto [a, b] = g.endpoints[e];
        if (a != b && part.unite(a, b)) t.set(e);
    }
    return t;
}

ForestMask criterion_tree(const MultiGraph& g, const Labeling& u) {
    ForestMask t(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints[e];
        if (a == b) continue;  // empty path joins a loop's endpoints
        Partition part(g.vertex_count);
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (f != e && u.less(f, e))
                part.unite(g.endpoints[f].first, g.endpoints[f].second);
        if (!part.same(a, b)) t.set(e);
    }
    return t;
}

ZValue z_free(const MultiGraph& g, const Labeling& u, EdgeId e) {
    auto [a, b] = g.endpoints[e];
    if (a == b) return ZValue::bottom();
    Partition part(g.vertex_count);
    for (EdgeId f : u.sorted_edges()) {
        if (f == e) continue;
        part.unite(g.endpoints[f].first, g.endpoints[f].second);
        if (part.same(a, b)) return ZValue::finite(f);
    }
    return ZValue::infinite();
}

ZValue z_free_cut(const MultiGraph& g, const Labeling& u, EdgeId e) {
    auto [x, y] = g.endpoints[e];
    if (x == y) return ZValue::bottom();
    int n = g.vertex_count;
    if (n > 24) throw std::length_error("z_free_cut: graph too large");

    // Enumerate W with x in W, y not in W over the other n-2 vertices.
    std::vector<VertexId> others;
    for (VertexId v = 0; v < n; ++v)
        if (v != x && v != y) others.push_back(v);
    int k = static_cast<int>(others.size());

    bool best_set = false;
    ZValue best = ZValue::bottom();
    std::vector<char> in_w(n, 0);
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
        std::fill(in_w.begin(), in_w.end(), 0);
        in_w[x] = 1;
        for (int i = 0; i < k; ++i)
            if (mask & (1ULL << i)) in_w[others[i]] = 1;
        // min label over the cut minus e; empty -> infinite
        bool found = false;
        EdgeId min_edge = -1;
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
            if (f == e) continue;
            auto [p, q] = g.endpoints[f];
            if (in_w[p] == in_w[q]) continue;
            if (!found || u.less(f, min_edge)) min_edge = f;
            found = true;
        }
        ZValue cand = found ? ZValue::finite(min_edge) : ZValue::infinite();
        if (!best_set) {
            best = cand;
            best_set = true;
        } else if (best.kind != ZValue::Kind::Infinite) {
            if (cand.kind == ZValue::Kind::Infinite ||
                u.less(best.witness, cand.witness))
                best = cand;
        }
        if (best.kind == ZValue::Kind::Infinite) break;
    }
    return best;
}

ZValue z_wired(const MultiGraph& g, const std::vector<VertexId>& boundary,
               const Labeling& u, EdgeId e) {
    WiredQuotient q = wired_quotient(g, boundary);
    if (q.edge_map[e] < 0)
        throw std::invalid_argument("z_wired: edge dropped by the quotient");
    Labeling uq = restrict_labels(u, q.orig_of);
    ZValue z = z_free(q.graph, uq, q.edge_map[e]);
    if (z.is_finite()) z.witness = q.orig_of[z.witness];
    return z;
}

ForestMask wired_mst(const MultiGraph& g,
                     const std::vector<VertexId>& boundary,
                     const Labeling& u) {
    WiredQuotient q = wired_quotient(g, boundary);
    Labeling uq = restrict_labels(u, q.orig_of);
    ForestMask tq = kruskal_mst(q.graph, uq);
    ForestMask t(g.edge_count());
    for (EdgeId eq = 0; eq < q.graph.edge_count(); ++eq)
        if (tq.test(eq)) t.set(q.orig_of[eq]);
    return t;
}

bool forest_gap_event(const MultiGraph& g,
                      const std::vector<VertexId>& boundary, const Labeling& u,
                      EdgeId e) {
    if (boundary.empty()) return false;
    auto [a, b] = g.endpoints[e];
    if (a == b) return false;
    Partition part(g.vertex_count);
    for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (f != e && u.less(f, e))
            part.unite(g.endpoints[f].first, g.endpoints[f].second);
    if (part.same(a, b)) return false;
    std::vector<char> touches(g.vertex_count, 0);
    for (VertexId v : boundary) touches[part.representative(v)] = 1;
    return touches[part.representative(a)] && touches[part.representative(b)];
}

namespace {

std::uint64_t geometric_edge_key(int dimension, const std::vector<int>& coord,
                                 int axis) {
    // lexicographically smaller endpoint coordinates, 20 bits each, axis low
    constexpr int kOffset = 1 << 19;
    std::uint64_t key = static_cast<std::uint64_t>(axis);
    for (int d = 0; d < dimension; ++d)
        key = (key << 20) | static_cast<std::uint64_t>(coord[d] + kOffset);
    return key;
}

}  // namespace

LatticeBox lattice_box(int dimension, int half_width) {
    if (dimension < 1 || dimension > 3 || half_width < 0)
        throw std::invalid_argument("lattice_box: bad parameters");
    int side = 2 * half_width + 1;
    long long n = 1;
    for (int d = 0; d < dimension; ++d) n *= side;
    if (n > 20'000'000) throw std::length_error("lattice_box: too large");

    std::vector<long long> stride(dimension, 1);
    for (int d = 1; d < dimension; ++d) stride[d] = stride[d - 1] * side;

    LatticeBox box;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> coord(dimension, -half_width);
    for (long long v = 0; v < n; ++v) {
        for (int d = 0; d < dimension; ++d) {
            if (coord[d] + 1 <= half_width) {
                edges.emplace_back(static_cast<VertexId>(v),
                                   static_cast<VertexId>(v + stride[d]));
                box.edge_keys.push_back(geometric_edge_key(dimension, coord, d));
            }
        }
        for (int d = 0; d < dimension; ++d) {
            if (++coord[d] <= half_width) break;
            coord[d] = -half_width;
        }
    }
    box.graph = build_graph(static_cast<int>(n), edges);
    std::fill(coord.begin(), coord.end(), -half_width);
    for (long long v = 0; v < n; ++v) {
        for (int d = 0; d < dimension; ++d) {
            if (coord[d] == -half_width || coord[d] == half_width) {
                box.graph.vertex_tags[v] = "boundary";
                break;
            }
        }
        for (int d = 0; d < dimension; ++d) {
            if (++coord[d] <= half_width) break;
            coord[d] = -half_width;
        }
    }
    return box;
}

ExhaustionReport exhaustion_run(int dimension, const std::vector<int>& sides,
                                std::uint64_t seed, int window) {
    ExhaustionReport report;
    for (int half : sides) {
        LatticeBox box = lattice_box(dimension, half);
        Labeling u =
            sample_labels_keyed(box.graph.edge_count(), seed, box.edge_keys);
        ExhaustionLevel level;
        level.side = 2 * half + 1;
        level.free_tree = kruskal_mst(box.graph, u);
        level.wired_tree =
            wired_mst(box.graph, tagged_vertices(box.graph, "boundary"), u);
        level.graph = std::move(box.graph);
        level.edge_keys = std::move(box.edge_keys);
        report.levels.push_back(std::move(level));
    }
    int L = static_cast<int>(report.levels.size());
    if (L < window || window < 1) return report;  // inconclusive
    report.conclusive = true;

    const ExhaustionLevel& last = report.levels.back();
    // boxes are nested, so "present at all levels" = present at the first
    std::unordered_set<std::uint64_t> first_level_keys(
        report.levels.front().edge_keys.begin(),
        report.levels.front().edge_keys.end());
    // membership by key across the last `window` levels
    std::vector<std::unordered_map<std::uint64_t, std::pair<bool, bool>>> maps;
    for (int i = L - window; i < L; ++i) {
        std::unordered_map<std::uint64_t, std::pair<bool, bool>> m;
        const ExhaustionLevel& lev = report.levels[i];
        for (EdgeId e = 0; e < lev.graph.edge_count(); ++e)
            m[lev.edge_keys[e]] = {lev.free_tree.test(e),
                                   lev.wired_tree.test(e)};
        maps.push_back(std::move(m));
    }
    for (EdgeId e = 0; e < last.graph.edge_count(); ++e) {
        std::uint64_t key = last.edge_keys[e];
        bool present_everywhere = true;
        bool free_const = true, wired_const = true;
        auto first = maps.front().find(key);
        for (auto& m : maps) {
            auto it = m.find(key);
            if (it == m.end()) {
                present_everywhere = false;
                break;
            }
            if (it->second.first != first->second.first) free_const = false;
            if (it->second.second != first->second.second) wired_const = false;
        }
        if (!present_everywhere) continue;
        if (free_const) {
            (first->second.first ? report.stabilized_in_free
                                 : report.stabilized_out_free)
                .push_back(key);
        }
        if (wired_const) {
            (first->second.second ? report.stabilized_in_wired
                                  : report.stabilized_out_wired)
                .push_back(key);
        }
        if (first_level_keys.count(key) && last.free_tree.test(e) &&
            !last.wired_tree.test(e))
            report.gap.push_back(key);
    }
    return report;
}

}  // namespace msf
