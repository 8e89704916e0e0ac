#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msf {

using VertexId = int;
using EdgeId = int;

// Finite multigraph with loops and parallel edges. Edge identities are the
// positions in `endpoints` and never change under contraction or quotients
// (those return new graphs plus mapping tables). Immutable after build.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> endpoints;
    // Non-loop incidences only; a loop appears once in `loops[v]` and
    // contributes 2 to the degree of v.
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj;
    std::vector<std::vector<EdgeId>> loops;
    std::vector<std::string> vertex_tags;

    int edge_count() const { return static_cast<int>(endpoints.size()); }
    bool is_loop(EdgeId e) const {
        return endpoints[e].first == endpoints[e].second;
    }
    int degree(VertexId v) const {
        return static_cast<int>(adj[v].size()) +
               2 * static_cast<int>(loops[v].size());
    }
};

// Union-find component labeling over the vertices of one graph.
class Partition {
public:
    explicit Partition(int n);

    VertexId representative(VertexId v) const;
    bool same(VertexId a, VertexId b) const {
        return representative(a) == representative(b);
    }
    // Returns true when a and b were in distinct components.
    bool unite(VertexId a, VertexId b);
    int component_count() const { return components_; }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    mutable std::vector<VertexId> parent_;
    std::vector<int> rank_;
    int components_;
};

enum class Topology { Free, Torus };

MultiGraph build_graph(int n_vertices,
                       const std::vector<std::pair<VertexId, VertexId>>& edges);

// Box [0, side)^dimension with nearest-neighbor edges. Torus wraps each
// coordinate; in free mode the surface vertices are tagged "boundary".
MultiGraph grid_box(int dimension, int side, Topology topology);

// Two grid strips (the rows below and at/above a junction line), truncated to
// a width x height window, joined only at the listed slit columns.
MultiGraph half_plane_strip(int width, int height,
                            const std::vector<int>& slits);

std::vector<VertexId> tagged_vertices(const MultiGraph& g,
                                      const std::string& tag);

struct WiredQuotient {
    MultiGraph graph;
    VertexId wired;                // the merged boundary vertex
    std::vector<EdgeId> edge_map;  // original EdgeId -> quotient EdgeId, -1 if dropped
    std::vector<EdgeId> orig_of;   // quotient EdgeId -> original EdgeId
    std::vector<VertexId> vertex_map;  // original VertexId -> quotient VertexId
};

// Merge all boundary vertices into one new vertex; edges inside the boundary
// become loops at the wired vertex and are dropped.
WiredQuotient wired_quotient(const MultiGraph& g,
                             const std::vector<VertexId>& boundary);

struct Contraction {
    MultiGraph graph;                  // same edge ids as the input graph
    std::vector<VertexId> vertex_map;  // original VertexId -> contracted VertexId
};

// Identify the endpoints of each edge in F. Every edge keeps its id; edges
// whose endpoints coincide afterwards become loops but are not deleted.
Contraction contract(const MultiGraph& g, const std::vector<EdgeId>& f);

// N(F): the number of edges of g whose endpoints lie in distinct components
// of (V, F).
int non_loop_count(const MultiGraph& g, const std::vector<EdgeId>& f);

std::vector<EdgeId> edge_cut(const MultiGraph& g,
                             const std::vector<VertexId>& w);

Partition components(const MultiGraph& g, const std::vector<char>& keep);
Partition components_all(const MultiGraph& g);

}  // namespace msf
