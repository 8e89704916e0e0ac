#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "msf/graph.hpp"

using namespace msf;

TEST_CASE("build_graph indexes incidences and loops") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {1, 1}});
    CHECK(g.vertex_count == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.is_loop(2));
    CHECK_FALSE(g.is_loop(0));
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 4);  // two incidences plus a loop counting twice
    CHECK(g.adj[1].size() == 2);
    CHECK(g.loops[1].size() == 1);
}

TEST_CASE("partition unites and counts components") {
    Partition p(5);
    CHECK(p.component_count() == 5);
    CHECK(p.unite(0, 1));
    CHECK_FALSE(p.unite(1, 0));
    CHECK(p.unite(2, 3));
    CHECK(p.component_count() == 3);
    CHECK(p.same(0, 1));
    CHECK_FALSE(p.same(0, 2));
}

TEST_CASE("grid_box free mode tags the surface") {
    MultiGraph g = grid_box(2, 3, Topology::Free);
    CHECK(g.vertex_count == 9);
    CHECK(g.edge_count() == 12);
    CHECK(tagged_vertices(g, "boundary").size() == 8);  // all but the center
}

TEST_CASE("grid_box torus is 2d-regular with no boundary") {
    MultiGraph g = grid_box(2, 3, Topology::Torus);
    CHECK(g.vertex_count == 9);
    CHECK(g.edge_count() == 18);
    for (VertexId v = 0; v < g.vertex_count; ++v) CHECK(g.degree(v) == 4);
    CHECK(tagged_vertices(g, "boundary").empty());
}

TEST_CASE("one-dimensional box is a path with two boundary vertices") {
    MultiGraph g = grid_box(1, 5, Topology::Free);
    CHECK(g.vertex_count == 5);
    CHECK(g.edge_count() == 4);
    CHECK(tagged_vertices(g, "boundary").size() == 2);
}

TEST_CASE("half_plane_strip joins the halves only through slits") {
    MultiGraph with_slit = half_plane_strip(4, 2, {1});
    CHECK(with_slit.vertex_count == 4 * 4);  // 2*height rows
    CHECK(components_all(with_slit).component_count() == 1);

    MultiGraph no_slit = half_plane_strip(4, 2, {});
    CHECK(components_all(no_slit).component_count() == 2);

    MultiGraph two_slits = half_plane_strip(4, 2, {0, 3});
    CHECK(two_slits.edge_count() == no_slit.edge_count() + 2);
}

TEST_CASE("wired_quotient merges the boundary and drops internal edges") {
    // path 0-1-2-3-4 plus a chord between the two boundary vertices
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    WiredQuotient q = wired_quotient(g, {0, 4});
    CHECK(q.graph.vertex_count == 4);
    CHECK(q.graph.edge_count() == 4);  // the chord becomes a wired loop, dropped
    CHECK(q.edge_map[4] == -1);
    for (EdgeId e = 0; e < 4; ++e) {
        CHECK(q.edge_map[e] >= 0);
        CHECK(q.orig_of[q.edge_map[e]] == e);
    }
    CHECK(q.vertex_map[0] == q.wired);
    CHECK(q.vertex_map[4] == q.wired);
    CHECK(q.graph.vertex_tags[q.wired] == "wired");
}

TEST_CASE("wired_quotient rejects an empty boundary") {
    MultiGraph g = build_graph(2, {{0, 1}});
    CHECK_THROWS_AS(wired_quotient(g, {}), std::invalid_argument);
}

TEST_CASE("contract keeps edge identities and makes loops explicit") {
    MultiGraph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Contraction c = contract(g, {0});
    CHECK(c.graph.edge_count() == 4);
    CHECK(c.graph.vertex_count == 3);
    CHECK(c.graph.is_loop(0));
    CHECK_FALSE(c.graph.is_loop(1));
    CHECK(c.vertex_map[0] == c.vertex_map[1]);
}

TEST_CASE("non_loop_count after contraction matches N(G; F)") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 1; v < n; ++v)
            edges.emplace_back(static_cast<VertexId>(rng() % v), v);
        for (int i = 0; i < 3; ++i)
            edges.emplace_back(static_cast<VertexId>(rng() % n),
                               static_cast<VertexId>(rng() % n));
        MultiGraph g = build_graph(n, edges);
        std::vector<EdgeId> f;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng() % 2) f.push_back(e);
        Contraction c = contract(g, f);
        CHECK(non_loop_count(g, f) == non_loop_count(c.graph, {}));
    }
}

TEST_CASE("edge_cut lists edges leaving the set") {
    MultiGraph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    std::vector<EdgeId> cut = edge_cut(g, {0, 1});
    std::sort(cut.begin(), cut.end());
    CHECK(cut == std::vector<EdgeId>{1, 3, 4});
}

TEST_CASE("components respects the keep mask") {
    MultiGraph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Partition p = components(g, {1, 0, 1});
    CHECK(p.component_count() == 2);
    CHECK(p.same(0, 1));
    CHECK(p.same(2, 3));
    CHECK_FALSE(p.same(1, 2));
}
