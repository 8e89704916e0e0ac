#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>

#include "msf/exact.hpp"
#include "msf/graph.hpp"

using namespace msf;

namespace {

std::map<std::vector<EdgeId>, BigRational> as_map(const TreeCatalog& c) {
    std::map<std::vector<EdgeId>, BigRational> m;
    for (std::size_t i = 0; i < c.trees.size(); ++i)
        m[c.trees[i]] = c.probabilities[i];
    return m;
}

BigRational catalog_sum(const TreeCatalog& c) {
    BigRational s = 0;
    for (const BigRational& p : c.probabilities) s += p;
    return s;
}

}  // namespace

TEST_CASE("spanning tree enumeration hits the known counts") {
    MultiGraph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3},
                                    {1, 2}, {1, 3}, {2, 3}});
    CHECK(enumerate_spanning_trees(k4).size() == 16);
    MultiGraph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(enumerate_spanning_trees(c5).size() == 5);
    CHECK(enumerate_spanning_trees(build_section5_graph().graph).size() == 64);
}

TEST_CASE("triangle trees are uniform by symmetry") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(mst_probability(g, {0, 1}) == BigRational(1, 3));
    CHECK(mst_probability(g, {0, 2}) == BigRational(1, 3));
    CHECK(mst_probability_oracle(g, {1, 2}) == BigRational(1, 3));
}

TEST_CASE("parallel edges split the mass evenly") {
    MultiGraph g = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
    for (EdgeId e = 0; e < 3; ++e)
        CHECK(mst_probability(g, {e}) == BigRational(1, 3));
}

TEST_CASE("formula and ordering oracle agree on random graphs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 1; v < n; ++v)
            edges.emplace_back(static_cast<VertexId>(rng() % v), v);
        int extra = static_cast<int>(rng() % (8 - n + 2));
        for (int i = 0; i < extra; ++i)
            edges.emplace_back(static_cast<VertexId>(rng() % n),
                               static_cast<VertexId>(rng() % n));
        MultiGraph g = build_graph(n, edges);
        TreeCatalog formula = formula_catalog(g);
        TreeCatalog oracle = ordering_catalog(g);
        CHECK(as_map(formula) == as_map(oracle));
        CHECK(catalog_sum(formula) == 1);
    }
}

TEST_CASE("loops change nothing in the tree measure") {
    MultiGraph plain = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    MultiGraph loopy = build_graph(3, {{0, 1}, {1, 2}, {0, 2}, {1, 1}});
    CHECK(mst_probability(loopy, {0, 1}) == mst_probability(plain, {0, 1}));
    CHECK(mst_probability_oracle(loopy, {0, 1}) == BigRational(1, 3));
}

TEST_CASE("reference catalog: classes, marginal, joint, ratio") {
    Section5Graph s5 = build_section5_graph();
    CHECK(s5.graph.vertex_count == 4);
    CHECK(s5.graph.edge_count() == 10);
    TreeCatalog cat = formula_catalog(s5.graph);
    REQUIRE(cat.trees.size() == 64);
    std::map<BigRational, int> classes;
    for (const BigRational& p : cat.probabilities) ++classes[p];
    std::map<BigRational, int> expected = {{BigRational(163, 12600), 12},
                                           {BigRational(109, 6300), 36},
                                           {BigRational(7, 600), 4},
                                           {BigRational(23, 1575), 12}};
    CHECK(classes == expected);
    CHECK(catalog_sum(cat) == 1);

    BigRational marginal = edge_event_probability(s5.graph, {s5.e1}, {});
    BigRational joint = edge_event_probability(s5.graph, {s5.e1, s5.e2}, {});
    CHECK(marginal == BigRational(331, 1260));
    CHECK(joint == BigRational(109, 1575));
    CHECK(joint / (marginal * marginal) == BigRational(109872, 109561));
    // positive association between the two far-apart edges
    CHECK(joint > marginal * marginal);
}

TEST_CASE("forbidden edges complement required ones") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    BigRational without = edge_event_probability(g, {}, {0});
    CHECK(without == BigRational(1, 3));
    CHECK(edge_event_probability(g, {0}, {}) + without == 1);
}

TEST_CASE("monte carlo frequencies track the exact value") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    FrequencyEstimate est = monte_carlo_tree_frequency(g, {0, 1}, 20000, 9);
    CHECK(est.trials == 20000);
    double exact = 1.0 / 3.0;
    CHECK(std::abs(est.frequency - exact) < 4.0 * est.standard_error + 1e-9);
}

TEST_CASE("conditional measure differs from the deleted-graph measure") {
    ConditionalExhibit ex = k4_conditional_exhibit();
    CHECK(ex.conditional != ex.deleted_graph);
    CHECK(ex.conditional > 0);
    CHECK(ex.conditional < 1);
    CHECK(ex.deleted_graph > 0);
    CHECK(ex.deleted_graph < 1);
    CHECK(ex.tree.size() == 3);  // spanning tree of K4 minus an edge
}
