#pragma once

#include <vector>

#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/labeling.hpp"

namespace msf {

struct InvasionTrace {
    VertexId source = -1;
    std::vector<EdgeId> edges_in_order;
    std::vector<double> frontier_maxima;  // running record of invaded labels
    bool saturated = false;               // frontier exhausted before max_steps

    ForestMask mask(const MultiGraph& g) const {
        ForestMask m(g.edge_count());
        for (EdgeId e : edges_in_order) m.set(e);
        return m;
    }
};

// Prim-style growth: always accept the least frontier edge leading to a new
// vertex. Stops at max_steps accepted edges or when the component of v is
// exhausted. When stop_at >= 0, growth halts right after that vertex is
// invaded (the wired vertex stands in for infinity).
InvasionTrace invasion_tree(const MultiGraph& g, const Labeling& u, VertexId v,
                            long long max_steps, VertexId stop_at = -1);

// Accepts the least edge incident to the invaded set even when it closes a
// cycle; same vertex trajectory as the invasion tree, extra edges allowed.
InvasionTrace invasion_basin(const MultiGraph& g, const Labeling& u, VertexId v,
                             long long max_steps, VertexId stop_at = -1);

// Union over all quotient vertices (including the wired one) of invasion
// trees in the wired quotient, mapped back; equals wired_mst exactly.
ForestMask invasion_union(const MultiGraph& g,
                          const std::vector<VertexId>& boundary,
                          const Labeling& u);

struct SymDiffReport {
    long long basin_symdiff = 0;
    long long tree_symdiff = 0;
    bool same_component = false;
};

SymDiffReport invasion_symdiff(const MultiGraph& g, const Labeling& u,
                               VertexId x, VertexId y, long long max_steps);

// Finite proxy of Z_inf(e): minimum over boundary-to-boundary simple paths
// through e (two vertex-disjoint arms from the endpoints) of the maximum
// label excluding e; the sentinel One when no such path exists.
ZValue z_infinity_proxy(const MultiGraph& g,
                        const std::vector<VertexId>& boundary,
                        const Labeling& u, EdgeId e);

// Z_inf for every edge at once; entries for edges dropped by the quotient are
// Bottom.
std::vector<ZValue> z_infinity_all(const MultiGraph& g,
                                   const std::vector<VertexId>& boundary,
                                   const Labeling& u);

// Edges e with U(e) < Z_inf(e) under the strict order.
ForestMask basin_of_infinity_proxy(const MultiGraph& g,
                                   const std::vector<VertexId>& boundary,
                                   const Labeling& u);

// Union over quotient vertices of invasion basins stopped once the wired
// vertex is invaded; sits between the wired forest and the basin of infinity.
ForestMask basin_union(const MultiGraph& g,
                       const std::vector<VertexId>& boundary,
                       const Labeling& u);

}  // namespace msf
