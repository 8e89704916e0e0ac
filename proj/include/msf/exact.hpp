#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "msf/graph.hpp"
#include "msf/labeling.hpp"

namespace msf {

using BigRational = mpq_class;

struct TreeCatalog {
    std::vector<std::vector<EdgeId>> trees;
    std::vector<BigRational> probabilities;  // sums exactly to 1
};

// All spanning trees of a connected multigraph as sorted edge-id sets;
// parallel edges yield distinct trees. Intended for |E| <= 16.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const MultiGraph& g);

// Exact probability that T is the minimal spanning tree, via the permutation
// sum over prefix products of N(.) collapsed to the subset lattice of T.
BigRational mst_probability(const MultiGraph& g, const std::vector<EdgeId>& t,
                            int max_tree_size = 10);

// Independent oracle: fraction of the |E|! edge orderings whose Kruskal tree
// is T, streamed with prefix pruning. Intended for |E| <= 11.
BigRational mst_probability_oracle(const MultiGraph& g,
                                   const std::vector<EdgeId>& t,
                                   int max_edges = 11);

// Full catalog from the ordering stream: every spanning tree with its exact
// ordering count over |E|!.
TreeCatalog ordering_catalog(const MultiGraph& g, int max_edges = 11);

// Catalog via the mst_probability formula applied to every spanning tree.
TreeCatalog formula_catalog(const MultiGraph& g, int max_tree_size = 10);

// Sum of tree probabilities over trees containing `required` and avoiding
// `forbidden`.
BigRational edge_event_probability(const MultiGraph& g,
                                   const std::vector<EdgeId>& required,
                                   const std::vector<EdgeId>& forbidden);

// K_4 with two non-adjacent edges replaced by three parallel edges each.
// Edge ids: 0..5 are e1..e6 (e1=(0,1), e2=(2,3), e3=(0,2), e4=(1,3),
// e5=(0,3), e6=(1,2)); 6,7 parallel to e1; 8,9 parallel to e2.
struct Section5Graph {
    MultiGraph graph;
    EdgeId e1 = 0, e2 = 1, e3 = 2, e4 = 3, e5 = 4, e6 = 5;
    std::vector<EdgeId> e1_class;  // {0,6,7}
    std::vector<EdgeId> e2_class;  // {1,8,9}
};
Section5Graph build_section5_graph();

struct FrequencyEstimate {
    double frequency = 0.0;
    double standard_error = 0.0;
    long long hits = 0;
    long long trials = 0;
};

FrequencyEstimate monte_carlo_tree_frequency(const MultiGraph& g,
                                             const std::vector<EdgeId>& t,
                                             long long trials,
                                             std::uint64_t seed);

// A spanning tree of K4 \ e whose probability under the MST measure of
// K4 \ e differs from its conditional probability given e not in T; both
// exact rationals returned.
struct ConditionalExhibit {
    std::vector<EdgeId> tree;          // edges of K4 (none equal to the deleted edge)
    BigRational conditional;           // MST_{K4}(T | e not in T)
    BigRational deleted_graph;         // MST_{K4 \ e}(T)
};
ConditionalExhibit k4_conditional_exhibit();

}  // namespace msf
