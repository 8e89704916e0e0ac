#include "msf/planar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace msf {

namespace {

// directed edge helpers: 2e + d, d = 0 walks first -> second
VertexId head_of(const MultiGraph& g, int dir_edge) {
    EdgeId e = dir_edge >> 1;
    return (dir_edge & 1) ? g.endpoints[e].first : g.endpoints[e].second;
}

}  // namespace

PlaneEmbedding make_embedding(
    MultiGraph graph,
    std::vector<std::vector<std::pair<EdgeId, int>>> rotation) {
    PlaneEmbedding emb;
    emb.graph = std::move(graph);
    emb.rotation = std::move(rotation);
    const MultiGraph& g = emb.graph;

    if (static_cast<int>(emb.rotation.size()) != g.vertex_count)
        throw std::invalid_argument("make_embedding: rotation size mismatch");

    // position of each edge end inside its vertex rotation
    std::vector<std::array<int, 2>> end_pos(g.edge_count(), {-1, -1});
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i) {
            auto [e, end] = emb.rotation[v][i];
            if (e < 0 || e >= g.edge_count() || end < 0 || end > 1)
                throw std::invalid_argument("make_embedding: bad rotation entry");
            VertexId expect =
                end == 0 ? g.endpoints[e].first : g.endpoints[e].second;
            if (expect != v)
                throw std::invalid_argument(
                    "make_embedding: edge end listed at wrong vertex");
            if (end_pos[e][end] != -1)
                throw std::invalid_argument(
                    "make_embedding: duplicate edge end in rotation");
            end_pos[e][end] = i;
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (end_pos[e][0] < 0 || end_pos[e][1] < 0)
            throw std::invalid_argument("make_embedding: missing edge end");

    emb.face_of_dir.assign(2 * g.edge_count(), -1);
    for (int start = 0; start < 2 * g.edge_count(); ++start) {
        if (emb.face_of_dir[start] != -1) continue;
        int face = static_cast<int>(emb.faces.size());
        emb.faces.emplace_back();
        int d = start;
        do {
            emb.face_of_dir[d] = face;
            emb.faces[face].push_back(d);
            EdgeId e = d >> 1;
            int arriving_end = (d & 1) ? 0 : 1;
            VertexId v = head_of(g, d);
            int pos = end_pos[e][arriving_end];
            int deg = static_cast<int>(emb.rotation[v].size());
            auto [ne, nend] = emb.rotation[v][(pos + 1) % deg];
            d = 2 * ne + (nend == 0 ? 0 : 1);
        } while (d != start);
    }

    if (components_all(g).component_count() == 1) {
        int euler = g.vertex_count - g.edge_count() + emb.face_count();
        if (euler != 2)
            throw std::invalid_argument(
                "make_embedding: rotation system is not planar");
    }
    // Outer face defaults to a largest face; grid embeddings override it.
    int best = 0;
    for (int f = 1; f < emb.face_count(); ++f)
        if (emb.faces[f].size() > emb.faces[best].size()) best = f;
    emb.outer_face = best;
    return emb;
}

PlaneEmbedding embed_grid(int side) {
    if (side < 1) throw std::invalid_argument("embed_grid: side must be >= 1");
    auto vid = [side](int x, int y) { return y * side + x; };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<std::pair<VertexId, VertexId>, EdgeId> index;
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            if (x + 1 < side) {
                index[{vid(x, y), vid(x + 1, y)}] =
                    static_cast<EdgeId>(edges.size());
                edges.emplace_back(vid(x, y), vid(x + 1, y));
            }
            if (y + 1 < side) {
                index[{vid(x, y), vid(x, y + 1)}] =
                    static_cast<EdgeId>(edges.size());
                edges.emplace_back(vid(x, y), vid(x, y + 1));
            }
        }
    }
    MultiGraph g = build_graph(side * side, edges);

    auto end_at = [&](VertexId v, VertexId w) -> std::pair<EdgeId, int> {
        auto it = index.find({v, w});
        if (it != index.end()) return {it->second, 0};
        return {index.at({w, v}), 1};
    };

    // counterclockwise: east, north, west, south
    std::vector<std::vector<std::pair<EdgeId, int>>> rotation(g.vertex_count);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            VertexId v = vid(x, y);
            if (x + 1 < side) rotation[v].push_back(end_at(v, vid(x + 1, y)));
            if (y + 1 < side) rotation[v].push_back(end_at(v, vid(x, y + 1)));
            if (x > 0) rotation[v].push_back(end_at(v, vid(x - 1, y)));
            if (y > 0) rotation[v].push_back(end_at(v, vid(x, y - 1)));
        }
    }
    PlaneEmbedding emb = make_embedding(std::move(g), std::move(rotation));
    if (side >= 2) {
        // the face walked along the bottom boundary heading left
        EdgeId bottom = index.at({vid(0, 0), vid(1, 0)});
        emb.outer_face = emb.face_of_dir[2 * bottom + 1];
    }
    return emb;
}

DualPair dual_graph(PlaneEmbedding embedding) {
    if (components_all(embedding.graph).component_count() != 1)
        throw std::invalid_argument("dual_graph: disconnected embedding");
    DualPair pair;
    int m = embedding.graph.edge_count();
    std::vector<std::pair<VertexId, VertexId>> dual_edges;
    dual_edges.reserve(m);
    pair.edge_bijection.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        int f1 = embedding.face_of_dir[2 * e];
        int f2 = embedding.face_of_dir[2 * e + 1];
        pair.edge_bijection[e] = e;
        dual_edges.emplace_back(f1, f2);  // loop when f1 == f2 (bridge)
    }
    pair.dual = build_graph(embedding.face_count(), dual_edges);
    pair.primal = std::move(embedding);
    return pair;
}

ForestMask forest_complement_dual(const DualPair& pair,
                                  const ForestMask& gamma) {
    ForestMask out(pair.dual.edge_count());
    for (EdgeId e = 0; e < pair.primal.graph.edge_count(); ++e)
        if (!gamma.test(e)) out.set(pair.edge_bijection[e]);
    return out;
}

bool verify_tree_duality(const DualPair& pair, const Labeling& u) {
    ForestMask t = kruskal_mst(pair.primal.graph, u);
    Labeling ud = dual_labeling(u, pair.edge_bijection);
    ForestMask d = kruskal_mst(pair.dual, ud);
    return forest_complement_dual(pair, t) == d;
}

}  // namespace msf
