#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "msf/graph.hpp"
#include "msf/labeling.hpp"

using namespace msf;

TEST_CASE("uniform_label is a pure function of seed and key") {
    double a = uniform_label(42, 7);
    double b = uniform_label(42, 7);
    double c = uniform_label(42, 8);
    double d = uniform_label(43, 7);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a != d);
    CHECK(a >= 0.0);
    CHECK(a < 1.0);
}

TEST_CASE("sample_labels is deterministic and injective in practice") {
    MultiGraph g = grid_box(2, 4, Topology::Free);
    Labeling u1 = sample_labels(g, 99);
    Labeling u2 = sample_labels(g, 99);
    CHECK(u1.vals == u2.vals);
    std::vector<double> sorted = u1.vals;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("ties break by edge id so the order is strict and total") {
    Labeling u = labels_from_values({0.5, 0.5, 0.2});
    CHECK(u.less(2, 0));
    CHECK(u.less(0, 1));
    CHECK_FALSE(u.less(1, 0));
    CHECK_FALSE(u.less(0, 0));
    CHECK(u.sorted_edges() == std::vector<EdgeId>{2, 0, 1});
}

TEST_CASE("exact labels compare as true rationals") {
    // 1/3 > 333333333/1000000000 even though doubles would round together
    Labeling u = labels_from_rationals(
        {mpq_class(1, 3), mpq_class(333333333, 1000000000)});
    CHECK(u.mode == LabelMode::Exact);
    CHECK(u.less(1, 0));
    CHECK_FALSE(u.less(0, 1));
}

TEST_CASE("threshold is strict") {
    MultiGraph g = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
    Labeling u = labels_from_values({0.3, 0.2999, 0.30001});
    ForestMask open = threshold(g, u, 0.3);
    CHECK_FALSE(open.test(0));  // equal to p is excluded
    CHECK(open.test(1));
    CHECK_FALSE(open.test(2));
}

TEST_CASE("dual labeling reverses the order exactly, ties included") {
    Labeling u = labels_from_values({0.25, 0.25, 0.5, 0.1});
    std::vector<EdgeId> bijection = {0, 1, 2, 3};
    Labeling d = dual_labeling(u, bijection);
    std::vector<EdgeId> primal = u.sorted_edges();
    std::vector<EdgeId> dual = d.sorted_edges();
    std::reverse(dual.begin(), dual.end());
    CHECK(primal == dual);
    for (EdgeId e = 0; e < 4; ++e)
        CHECK(d.value(e) == doctest::Approx(1.0 - u.value(e)));
}

TEST_CASE("perturb replaces exactly the requested labels") {
    Labeling u = labels_from_values({0.1, 0.2, 0.3});
    Labeling v = perturb(u, {{1, 0.9}});
    CHECK(v.value(0) == 0.1);
    CHECK(v.value(1) == 0.9);
    CHECK(v.value(2) == 0.3);
    CHECK(u.value(1) == 0.2);  // input untouched
}

TEST_CASE("keyed sampling agrees across graphs sharing keys") {
    std::vector<std::uint64_t> small_keys = {11, 22, 33};
    std::vector<std::uint64_t> big_keys = {44, 11, 55, 33, 22};
    Labeling a = sample_labels_keyed(3, 5, small_keys);
    Labeling b = sample_labels_keyed(5, 5, big_keys);
    CHECK(a.value(0) == b.value(1));
    CHECK(a.value(1) == b.value(4));
    CHECK(a.value(2) == b.value(3));
}

TEST_CASE("restrict_labels pulls labels through an edge map") {
    Labeling u = labels_from_values({0.1, 0.2, 0.3, 0.4});
    Labeling r = restrict_labels(u, {2, 0});
    CHECK(r.size() == 2);
    CHECK(r.value(0) == 0.3);
    CHECK(r.value(1) == 0.1);
    // order among surviving edges is preserved
    CHECK(r.less(1, 0));
}
