#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/labeling.hpp"

using namespace msf;

namespace {

MultiGraph random_connected(std::mt19937_64& rng, int max_edges) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<VertexId>(rng() % v), v);
    int extra = static_cast<int>(rng() % (max_edges - n + 2));
    for (int i = 0; i < extra; ++i)
        edges.emplace_back(static_cast<VertexId>(rng() % n),
                           static_cast<VertexId>(rng() % n));
    return build_graph(n, edges);
}

}  // namespace

TEST_CASE("kruskal picks the light edges of a triangle") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Labeling u = labels_from_values({0.1, 0.2, 0.3});
    ForestMask t = kruskal_mst(g, u);
    CHECK(t.count == 2);
    CHECK(t.test(0));
    CHECK(t.test(1));
    CHECK_FALSE(t.test(2));
}

TEST_CASE("parallel edges and loops never duplicate in the tree") {
    MultiGraph g = build_graph(2, {{0, 1}, {0, 1}, {1, 1}});
    Labeling u = labels_from_values({0.6, 0.4, 0.01});
    ForestMask t = kruskal_mst(g, u);
    CHECK(t.count == 1);
    CHECK(t.test(1));
}

TEST_CASE("kruskal spans each component of a disconnected graph") {
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    Labeling u = sample_labels(g, 3);
    ForestMask t = kruskal_mst(g, u);
    CHECK(t.count == 3);  // |V| - #components
}

TEST_CASE("criterion tree agrees with kruskal on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        MultiGraph g = random_connected(rng, 12);
        Labeling u = sample_labels(g, rng());
        CHECK(kruskal_mst(g, u) == criterion_tree(g, u));
    }
}

TEST_CASE("tie-broken labels still give a unique tree") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Labeling u = labels_from_values({0.5, 0.5, 0.5});
    ForestMask t = kruskal_mst(g, u);
    CHECK(t.count == 2);
    CHECK(t.test(0));
    CHECK(t.test(1));  // ids break the ties
    CHECK(kruskal_mst(g, u) == criterion_tree(g, u));
}

TEST_CASE("z_free on a triangle is the heavier path edge") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Labeling u = labels_from_values({0.1, 0.2, 0.3});
    ZValue z = z_free(g, u, 2);
    REQUIRE(z.is_finite());
    CHECK(z.witness == 1);
    CHECK(z.value(u) == 0.2);
    CHECK_FALSE(z.admits(2, u));  // 0.3 > 0.2: edge 2 is outside the forest
    CHECK(z.admits(0, u));
}

TEST_CASE("z_free marks bridges infinite and loops bottom") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {2, 2}});
    Labeling u = labels_from_values({0.5, 0.5, 0.5});
    CHECK(z_free(g, u, 0).kind == ZValue::Kind::Infinite);
    CHECK(z_free(g, u, 2).kind == ZValue::Kind::Bottom);
    CHECK(z_free(g, u, 0).admits(0, u));      // infinity admits everything
    CHECK_FALSE(z_free(g, u, 2).admits(2, u));  // bottom admits nothing
}

TEST_CASE("path and cut forms of Z agree on random graphs") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        MultiGraph g = random_connected(rng, 10);
        Labeling u = sample_labels(g, rng());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            CHECK(z_free(g, u, e) == z_free_cut(g, u, e));
    }
}

TEST_CASE("z_wired sees paths through the wired vertex") {
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Labeling u = labels_from_values({0.9, 0.5, 0.2, 0.8});
    // removing the middle edge disconnects the free path...
    CHECK(z_free(g, u, 1).kind == ZValue::Kind::Infinite);
    // ...but the wired quotient closes a cycle through infinity
    ZValue zw = z_wired(g, {0, 4}, u, 1);
    REQUIRE(zw.is_finite());
    CHECK(zw.witness == 0);
    CHECK(zw.value(u) == 0.9);
}

TEST_CASE("wired tree drops the heaviest edge of the closed cycle") {
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Labeling u = labels_from_values({0.9, 0.5, 0.2, 0.8});
    ForestMask w = wired_mst(g, {0, 4}, u);
    CHECK(w.count == 3);
    CHECK_FALSE(w.test(0));
    ForestMask f = kruskal_mst(g, u);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (w.test(e)) CHECK(f.test(e));
}

TEST_CASE("forest gap event needs two boundary-touching sides") {
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Labeling u = labels_from_values({0.9, 0.5, 0.2, 0.8});
    CHECK(forest_gap_event(g, {0, 4}, u, 0));
    CHECK_FALSE(forest_gap_event(g, {0, 4}, u, 2));
}

TEST_CASE("lattice boxes nest through their geometric keys") {
    LatticeBox small = lattice_box(2, 1);
    LatticeBox big = lattice_box(2, 2);
    CHECK(small.graph.vertex_count == 9);
    CHECK(small.graph.edge_count() == 12);
    std::set<std::uint64_t> small_keys(small.edge_keys.begin(),
                                       small.edge_keys.end());
    std::set<std::uint64_t> big_keys(big.edge_keys.begin(),
                                     big.edge_keys.end());
    CHECK(small_keys.size() == small.edge_keys.size());
    CHECK(std::includes(big_keys.begin(), big_keys.end(), small_keys.begin(),
                        small_keys.end()));
}

TEST_CASE("exhaustion run classifies stabilized edges consistently") {
    ExhaustionReport report = exhaustion_run(2, {2, 3, 4, 5}, 77, 3);
    CHECK(report.levels.size() == 4);
    std::set<std::uint64_t> in_f(report.stabilized_in_free.begin(),
                                 report.stabilized_in_free.end());
    for (std::uint64_t k : report.stabilized_out_free)
        CHECK(in_f.count(k) == 0);
    std::set<std::uint64_t> in_w(report.stabilized_in_wired.begin(),
                                 report.stabilized_in_wired.end());
    for (std::uint64_t k : report.stabilized_out_wired)
        CHECK(in_w.count(k) == 0);
    // wired membership within free membership wherever both stabilized
    for (std::uint64_t k : report.stabilized_in_wired)
        CHECK(std::count(report.stabilized_out_free.begin(),
                         report.stabilized_out_free.end(), k) == 0);
}
