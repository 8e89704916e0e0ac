#pragma once

#include <vector>

#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/labeling.hpp"

namespace msf {

// Combinatorial plane embedding: a rotation system plus derived face
// traversals. A directed edge is 2*e + d where d = 0 walks u -> v.
struct PlaneEmbedding {
    MultiGraph graph;
    // counterclockwise cyclic order of edge ends at each vertex; a loop
    // contributes both its ends
    std::vector<std::vector<std::pair<EdgeId, int>>> rotation;
    std::vector<std::vector<int>> faces;  // cycles of directed edges
    std::vector<int> face_of_dir;         // directed edge -> face index
    int outer_face = -1;

    int face_count() const { return static_cast<int>(faces.size()); }
};

// Derive faces from graph + rotation; checks Euler's formula for connected
// embeddings.
PlaneEmbedding make_embedding(
    MultiGraph graph,
    std::vector<std::vector<std::pair<EdgeId, int>>> rotation);

// Standard planar embedding of the side x side grid, outer face marked.
PlaneEmbedding embed_grid(int side);

struct DualPair {
    PlaneEmbedding primal;
    MultiGraph dual;                    // one vertex per face
    std::vector<EdgeId> edge_bijection;  // e -> e-dagger (same index here)
};

DualPair dual_graph(PlaneEmbedding embedding);

// Gamma* = duals of the non-Gamma edges.
ForestMask forest_complement_dual(const DualPair& pair, const ForestMask& gamma);

// Finite instance of the free/wired duality: the complement-dual of the
// primal MST equals the dual MST under the reversed labels.
bool verify_tree_duality(const DualPair& pair, const Labeling& u);

}  // namespace msf
