#pragma once

#include <optional>
#include <vector>

#include "msf/graph.hpp"
#include "msf/labeling.hpp"

namespace msf {

// Minimax label value with explicit infinity conventions. Finite values
// carry the bottleneck edge as witness so comparisons against edges can use
// the strict tie-broken label order. Bottom marks loops (never in a forest);
// One is the Z_inf sentinel when no qualifying path exists.
struct ZValue {
    enum class Kind { Finite, Infinite, Bottom, One };
    Kind kind = Kind::Infinite;
    EdgeId witness = -1;

    static ZValue finite(EdgeId w) { return {Kind::Finite, w}; }
    static ZValue infinite() { return {Kind::Infinite, -1}; }
    static ZValue bottom() { return {Kind::Bottom, -1}; }
    static ZValue one() { return {Kind::One, -1}; }

    bool is_finite() const { return kind == Kind::Finite; }
    double value(const Labeling& u) const;
    // Strict membership test U(e) < Z under the tie-broken order.
    bool admits(EdgeId e, const Labeling& u) const;
    bool operator==(const ZValue& o) const = default;
};

// The unique minimal spanning tree/forest T_U under the label order; a
// spanning forest when g is disconnected; loops never included.
ForestMask kruskal_mst(const MultiGraph& g, const Labeling& u);

// Independent oracle: include e iff no path of strictly smaller edges joins
// its endpoints, decided by explicit search. Small graphs only.
ForestMask criterion_tree(const MultiGraph& g, const Labeling& u);

// Z_f(e): min over simple endpoint-joining paths in g \ {e} of the max label.
ZValue z_free(const MultiGraph& g, const Labeling& u, EdgeId e);

// Maximin cut form of Z_f: sup over cuts containing e of the min label of
// the cut minus e. Exhaustive over vertex subsets; small graphs only.
ZValue z_free_cut(const MultiGraph& g, const Labeling& u, EdgeId e);

// Z_w(e) on (g, boundary): z_free on the wired quotient; an extended path
// through infinity is a simple path through the wired vertex.
ZValue z_wired(const MultiGraph& g, const std::vector<VertexId>& boundary,
               const Labeling& u, EdgeId e);

// MST of the wired quotient, mapped back to original edge ids.
ForestMask wired_mst(const MultiGraph& g, const std::vector<VertexId>& boundary,
                     const Labeling& u);

// Finite proxy of the event A(e): both endpoints of e lie in distinct
// boundary-touching components of (g \ e)[U(e)].
bool forest_gap_event(const MultiGraph& g,
                      const std::vector<VertexId>& boundary, const Labeling& u,
                      EdgeId e);

struct ExhaustionLevel {
    int side = 0;
    MultiGraph graph;
    std::vector<std::uint64_t> edge_keys;  // level-independent geometric keys
    ForestMask free_tree;
    ForestMask wired_tree;
};

struct ExhaustionReport {
    std::vector<ExhaustionLevel> levels;
    // Keyed by the geometric edge key; only edges present at all of the last
    // k levels are classified.
    std::vector<std::uint64_t> stabilized_in_free;
    std::vector<std::uint64_t> stabilized_out_free;
    std::vector<std::uint64_t> stabilized_in_wired;
    std::vector<std::uint64_t> stabilized_out_wired;
    std::vector<std::uint64_t> gap;  // free \ wired membership at the final level
    bool conclusive = false;
};

// Nested centered boxes [-L, L]^dim with one labeling of the infinite lattice
// restricted to each level (labels keyed by geometric edge coordinates).
// Stabilization = constant membership over the last `window` levels; reported
// as evidence only.
ExhaustionReport exhaustion_run(int dimension, const std::vector<int>& sides,
                                std::uint64_t seed, int window = 3);

// Lattice box on vertices [-half, half]^dim with geometric edge keys, free
// boundary; surface vertices tagged "boundary".
struct LatticeBox {
    MultiGraph graph;
    std::vector<std::uint64_t> edge_keys;
};
LatticeBox lattice_box(int dimension, int half_width);

}  // namespace msf
