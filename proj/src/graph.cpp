#include "msf/graph.hpp"

#include <algorithm>
#include <numeric>

namespace msf {

Partition::Partition(int n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

VertexId Partition::representative(VertexId v) const {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        VertexId next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

bool Partition::unite(VertexId a, VertexId b) {
    a = representative(a);
    b = representative(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
}

MultiGraph build_graph(
    int n_vertices, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
    MultiGraph g;
    g.vertex_count = n_vertices;
    g.adj.resize(n_vertices);
    g.loops.resize(n_vertices);
    g.vertex_tags.resize(n_vertices);
    g.endpoints.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw std::out_of_range("edge endpoint out of range");
        EdgeId e = static_cast<EdgeId>(g.endpoints.size());
        g.endpoints.emplace_back(u, v);
        if (u == v) {
            g.loops[u].push_back(e);
        } else {
            g.adj[u].emplace_back(e, v);
            g.adj[v].emplace_back(e, u);
        }
    }
    return g;
}

MultiGraph grid_box(int dimension, int side, Topology topology) {
    if (dimension < 1 || side < 1)
        throw std::invalid_argument("grid_box: dimension and side must be >= 1");
    double count = 1.0;
    for (int d = 0; d < dimension; ++d) count *= side;
    if (count > 1e8) throw std::length_error("grid_box: vertex count too large");

    long long n = 1;
    for (int d = 0; d < dimension; ++d) n *= side;

    std::vector<long long> stride(dimension, 1);
    for (int d = 1; d < dimension; ++d) stride[d] = stride[d - 1] * side;

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> coord(dimension, 0);
    for (long long v = 0; v < n; ++v) {
        for (int d = 0; d < dimension; ++d) {
            if (coord[d] + 1 < side) {
                edges.emplace_back(static_cast<VertexId>(v),
                                   static_cast<VertexId>(v + stride[d]));
            } else if (topology == Topology::Torus && side > 1) {
                edges.emplace_back(
                    static_cast<VertexId>(v),
                    static_cast<VertexId>(v - stride[d] * (side - 1)));
            }
        }
        for (int d = 0; d < dimension; ++d) {
            if (++coord[d] < side) break;
            coord[d] = 0;
        }
    }
    MultiGraph g = build_graph(static_cast<int>(n), edges);
    if (topology == Topology::Free) {
        std::fill(coord.begin(), coord.end(), 0);
        for (long long v = 0; v < n; ++v) {
            for (int d = 0; d < dimension; ++d) {
                if (coord[d] == 0 || coord[d] == side - 1) {
                    g.vertex_tags[v] = "boundary";
                    break;
                }
            }
            for (int d = 0; d < dimension; ++d) {
                if (++coord[d] < side) break;
                coord[d] = 0;
            }
        }
    }
    return g;
}

MultiGraph half_plane_strip(int width, int height,
                            const std::vector<int>& slits) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("half_plane_strip: bad window");
    for (int s : slits)
        if (s < 0 || s >= width)
            throw std::out_of_range("half_plane_strip: slit column out of range");

    // Rows -height+1..0 below the junction, rows 1..height above; vertex
    // (col, row) with row index r in [0, 2*height).
    auto vid = [&](int col, int r) { return r * width + col; };
    int rows = 2 * height;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < width; ++c) {
            if (c + 1 < width) edges.emplace_back(vid(c, r), vid(c + 1, r));
            if (r + 1 < rows && r + 1 != height)
                edges.emplace_back(vid(c, r), vid(c, r + 1));
        }
    }
    for (int c : slits)
        edges.emplace_back(vid(c, height - 1), vid(c, height));
    return build_graph(rows * width, edges);
}

std::vector<VertexId> tagged_vertices(const MultiGraph& g,
                                      const std::string& tag) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (g.vertex_tags[v] == tag) out.push_back(v);
    return out;
}

WiredQuotient wired_quotient(const MultiGraph& g,
                             const std::vector<VertexId>& boundary) {
    if (boundary.empty())
        throw std::invalid_argument("wired_quotient: empty boundary");
    std::vector<char> is_boundary(g.vertex_count, 0);
    for (VertexId v : boundary) {
        if (v < 0 || v >= g.vertex_count)
            throw std::out_of_range("wired_quotient: boundary vertex out of range");
        is_boundary[v] = 1;
    }

    WiredQuotient q;
    q.vertex_map.assign(g.vertex_count, -1);
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (!is_boundary[v]) q.vertex_map[v] = next++;
    q.wired = next;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (is_boundary[v]) q.vertex_map[v] = q.wired;

    std::vector<std::pair<VertexId, VertexId>> edges;
    q.edge_map.assign(g.edge_count(), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = q.vertex_map[g.endpoints[e].first];
        VertexId v = q.vertex_map[g.endpoints[e].second];
        if (u == q.wired && v == q.wired) continue;  // loop at the wired vertex
        q.edge_map[e] = static_cast<EdgeId>(edges.size());
        q.orig_of.push_back(e);
        edges.emplace_back(u, v);
    }
    q.graph = build_graph(next + 1, edges);
    q.graph.vertex_tags[q.wired] = "wired";
    return q;
}

Contraction contract(const MultiGraph& g, const std::vector<EdgeId>& f) {
    Partition part(g.vertex_count);
    for (EdgeId e : f) {
        if (e < 0 || e >= g.edge_count())
            throw std::out_of_range("contract: unknown edge");
        part.unite(g.endpoints[e].first, g.endpoints[e].second);
    }
    Contraction c;
    c.vertex_map.assign(g.vertex_count, -1);
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        VertexId r = part.representative(v);
        if (c.vertex_map[r] < 0) c.vertex_map[r] = next++;
        c.vertex_map[v] = c.vertex_map[r];
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.endpoints.size());
    for (auto [u, v] : g.endpoints)
        edges.emplace_back(c.vertex_map[u], c.vertex_map[v]);
    c.graph = build_graph(next, edges);
    return c;
}

int non_loop_count(const MultiGraph& g, const std::vector<EdgeId>& f) {
    Partition part(g.vertex_count);
    for (EdgeId e : f) {
        if (e < 0 || e >= g.edge_count())
            throw std::out_of_range("non_loop_count: unknown edge");
        part.unite(g.endpoints[e].first, g.endpoints[e].second);
    }
    int n = 0;
    for (auto [u, v] : g.endpoints)
        if (!part.same(u, v)) ++n;
    return n;
}

std::vector<EdgeId> edge_cut(const MultiGraph& g,
                             const std::vector<VertexId>& w) {
    std::vector<char> in(g.vertex_count, 0);
    for (VertexId v : w) in[v] = 1;
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints[e];
        if (in[u] != in[v]) cut.push_back(e);
    }
    return cut;
}

Partition components(const MultiGraph& g, const std::vector<char>& keep) {
    Partition part(g.vertex_count);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (e < static_cast<EdgeId>(keep.size()) && keep[e])
            part.unite(g.endpoints[e].first, g.endpoints[e].second);
    return part;
}

Partition components_all(const MultiGraph& g) {
    Partition part(g.vertex_count);
    for (auto [u, v] : g.endpoints) part.unite(u, v);
    return part;
}

}  // namespace msf
