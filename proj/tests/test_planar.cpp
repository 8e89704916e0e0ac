#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/labeling.hpp"
#include "msf/planar.hpp"

using namespace msf;

TEST_CASE("grid embeddings satisfy Euler's formula") {
    for (int side = 2; side <= 6; ++side) {
        PlaneEmbedding emb = embed_grid(side);
        int v = emb.graph.vertex_count;
        int e = emb.graph.edge_count();
        int f = emb.face_count();
        CHECK(v == side * side);
        CHECK(e == 2 * side * (side - 1));
        CHECK(v - e + f == 2);
        CHECK(emb.outer_face >= 0);
        CHECK(emb.outer_face < f);
    }
}

TEST_CASE("the 2x2 grid dualizes to two vertices with four parallel edges") {
    DualPair pair = dual_graph(embed_grid(2));
    CHECK(pair.dual.vertex_count == 2);
    CHECK(pair.dual.edge_count() == 4);
    for (EdgeId e = 0; e < 4; ++e) {
        CHECK_FALSE(pair.dual.is_loop(e));
        CHECK(pair.edge_bijection[e] == e);
    }
}

TEST_CASE("dual edges pair the two faces along each primal edge") {
    DualPair pair = dual_graph(embed_grid(3));
    CHECK(pair.dual.vertex_count == 5);
    CHECK(pair.dual.edge_count() == 12);
    const PlaneEmbedding& emb = pair.primal;
    for (EdgeId e = 0; e < emb.graph.edge_count(); ++e) {
        auto [a, b] = pair.dual.endpoints[e];
        int left = emb.face_of_dir[2 * e];
        int right = emb.face_of_dir[2 * e + 1];
        CHECK(((a == left && b == right) || (a == right && b == left)));
    }
}

TEST_CASE("complement dual has complementary size") {
    DualPair pair = dual_graph(embed_grid(4));
    Labeling u = sample_labels(pair.primal.graph, 8);
    ForestMask t = kruskal_mst(pair.primal.graph, u);
    ForestMask star = forest_complement_dual(pair, t);
    CHECK(star.count == pair.primal.graph.edge_count() - t.count);
}

TEST_CASE("tree duality holds across random labelings") {
    std::mt19937_64 rng(53);
    for (int side = 2; side <= 6; ++side) {
        DualPair pair = dual_graph(embed_grid(side));
        for (int t = 0; t < 10; ++t) {
            Labeling u = sample_labels(pair.primal.graph, rng());
            CHECK(verify_tree_duality(pair, u));
        }
    }
}

TEST_CASE("tree duality survives full numeric ties") {
    // constant labels force every comparison through the tie-break order
    DualPair pair = dual_graph(embed_grid(3));
    std::vector<double> vals(pair.primal.graph.edge_count(), 0.5);
    Labeling u = labels_from_values(vals);
    CHECK(verify_tree_duality(pair, u));
}

TEST_CASE("make_embedding rejects a malformed rotation") {
    MultiGraph g = build_graph(2, {{0, 1}});
    std::vector<std::vector<std::pair<EdgeId, int>>> rotation(2);
    rotation[0] = {{0, 0}};
    // vertex 1 is missing the other end of edge 0
    CHECK_THROWS(make_embedding(g, rotation));
}
