#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "msf/analysis.hpp"
#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/labeling.hpp"

using namespace msf;

TEST_CASE("degree stats count loops twice and average to 2|F|/|V|") {
    MultiGraph g = build_graph(3, {{0, 1}, {1, 2}, {2, 2}});
    ForestMask f(3);
    f.set(0);
    f.set(2);  // not a forest, but degree bookkeeping is mask-agnostic
    DegreeStats stats = degree_stats(g, f);
    CHECK(stats.histogram[1] == 2);
    CHECK(stats.histogram[2] == 1);  // the loop gives vertex 2 degree 2
    CHECK(stats.mean == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("tree_count splits at the excluded vertices") {
    MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    ForestMask f(4);
    for (EdgeId e = 0; e < 4; ++e) f.set(e);
    CHECK(tree_count(g, f, {}) == 1);
    CHECK(tree_count(g, f, {2}) == 2);  // removing the middle splits the path
}

TEST_CASE("xi contains the tree and stays connected") {
    for (int side = 3; side <= 6; ++side) {
        MultiGraph g = grid_box(2, side, Topology::Free);
        for (int t = 0; t < 5; ++t) {
            Labeling u = sample_labels(g, 100 * side + t);
            for (double eps : {0.05, 0.2}) {
                ForestMask xi = xi_sample(g, u, eps);
                ForestMask mst = kruskal_mst(g, u);
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (mst.test(e)) CHECK(xi.test(e));
                CHECK(components(g, xi.in).component_count() == 1);
            }
        }
    }
}

TEST_CASE("xi rejects out-of-range eps") {
    MultiGraph g = grid_box(2, 3, Topology::Free);
    Labeling u = sample_labels(g, 1);
    CHECK_THROWS(xi_sample(g, u, 0.0));
    CHECK_THROWS(xi_sample(g, u, 1.0));
}

TEST_CASE("xi and the Bernoulli-union have matching marginals") {
    MultiGraph g = grid_box(2, 3, Topology::Free);
    LawCheckReport report = free_union_law_check(g, 0.2, 4000, 67);
    CHECK(report.trials == 4000);
    CHECK(report.max_discrepancy_sigma < 5.0);
}

TEST_CASE("ks statistic accepts uniform grids and rejects point masses") {
    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i) grid.push_back((i + 0.5) / 1000.0);
    KsResult good = ks_statistic(grid, 0.01);
    CHECK(good.pass);
    CHECK(good.critical ==
          doctest::Approx(1.6276 / std::sqrt(1000.0)).epsilon(1e-3));

    std::vector<double> lump(1000, 0.5);
    CHECK_FALSE(ks_statistic(lump, 0.01).pass);
}

TEST_CASE("free residuals land in the unit interval and look uniform") {
    MultiGraph g = grid_box(2, 6, Topology::Free);
    std::vector<double> pool;
    for (int s = 0; s < 60; ++s) {
        Labeling u = sample_labels(g, 500 + s);
        ResidualSample r = coupling_residuals_free(g, u);
        for (double v : r.values) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
        pool.insert(pool.end(), r.values.begin(), r.values.end());
    }
    CHECK(ks_statistic(pool, 0.005).pass);
}

TEST_CASE("wired residuals land in the unit interval and look uniform") {
    MultiGraph g = grid_box(2, 6, Topology::Free);
    std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
    std::vector<double> pool;
    for (int s = 0; s < 40; ++s) {
        Labeling u = sample_labels(g, 900 + s);
        ResidualSample r = coupling_residuals_wired(g, boundary, u);
        for (double v : r.values) {
            CHECK(v > 0.0);
            CHECK(v < 1.0);
        }
        pool.insert(pool.end(), r.values.begin(), r.values.end());
    }
    CHECK(ks_statistic(pool, 0.005).pass);
}

TEST_CASE("disjoint invasion probability is a calibrated estimate") {
    MultiGraph g = grid_box(2, 5, Topology::Free);
    std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
    ProbabilityEstimate est =
        disjoint_invasion_probability(g, boundary, {6, 18}, 200, 3);
    CHECK(est.trials == 200);
    CHECK(est.hits >= 0);
    CHECK(est.hits <= 200);
    CHECK(est.estimate >= 0.0);
    CHECK(est.estimate <= 1.0);
    CHECK_THROWS(disjoint_invasion_probability(g, boundary, {6, 6}, 10, 3));
}

TEST_CASE("uniqueness scan reports sane curves") {
    std::vector<ScanPoint> pts = ae_uniqueness_scan(4, {0.3, 0.7}, 30, 5);
    REQUIRE(pts.size() == 2);
    for (const ScanPoint& pt : pts) {
        CHECK(pt.mean_macroscopic >= 0.0);
        CHECK(pt.gap_frequency >= 0.0);
        CHECK(pt.gap_frequency <= 1.0);
    }
}

TEST_CASE("forest percolation probe is monotone in p by coupling") {
    MultiGraph g = grid_box(2, 8, Topology::Free);
    std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
    std::vector<ProbePoint> pts =
        pc_forest_probe(g, boundary, {0.2, 0.6, 0.95}, 40, 11);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].mean_normalized_largest <= pts[1].mean_normalized_largest);
    CHECK(pts[1].mean_normalized_largest <= pts[2].mean_normalized_largest);
    CHECK(pts[2].mean_normalized_largest <= 1.0);
}
