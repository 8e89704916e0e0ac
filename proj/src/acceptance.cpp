#include "msf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "msf/analysis.hpp"
#include "msf/exact.hpp"
#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/invasion.hpp"
#include "msf/labeling.hpp"
#include "msf/planar.hpp"

namespace msf {

namespace {

MultiGraph random_connected_graph(std::mt19937_64& rng, int max_edges,
                                  bool allow_loops) {
    int max_v = std::min(max_edges + 1, 8);
    int n = 2 + static_cast<int>(rng() % (max_v - 1));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<VertexId>(rng() % v), v);
    int extra = static_cast<int>(rng() % (max_edges - (n - 1) + 1));
    for (int i = 0; i < extra; ++i) {
        VertexId a = static_cast<VertexId>(rng() % n);
        VertexId b = static_cast<VertexId>(rng() % n);
        while (a == b && !allow_loops) b = static_cast<VertexId>(rng() % n);
        edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

std::map<std::vector<EdgeId>, BigRational> catalog_map(const TreeCatalog& c) {
    std::map<std::vector<EdgeId>, BigRational> m;
    for (std::size_t i = 0; i < c.trees.size(); ++i)
        m[c.trees[i]] = c.probabilities[i];
    return m;
}

int largest_cluster(const MultiGraph& g, const std::vector<char>& keep_edge) {
    Partition part(g.vertex_count);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (keep_edge[e])
            part.unite(g.endpoints[e].first, g.endpoints[e].second);
    std::vector<int> size(g.vertex_count, 0);
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        best = std::max(best, ++size[part.representative(v)]);
    return best;
}

bool subset_of(const ForestMask& a, const ForestMask& b) {
    for (std::size_t e = 0; e < a.in.size(); ++e)
        if (a.in[e] && !b.in[e]) return false;
    return true;
}

int symdiff_size(const ForestMask& a, const ForestMask& b) {
    int d = 0;
    for (std::size_t e = 0; e < a.in.size(); ++e)
        if (a.in[e] != b.in[e]) ++d;
    return d;
}

struct Battery {
    AcceptanceOptions opt;
    std::vector<CriterionResult> results;
    // criteria 6 and 13 feed the containment verdict of criterion 14
    bool containment_ok = true;
    long long containment_trials = 0;

    long long scale(long long full, long long quick) const {
        return opt.quick ? quick : full;
    }

    template <typename Fn>
    void run(int id, const std::string& name, Fn fn) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::ostringstream detail;
            r.pass = fn(detail);
            r.detail = detail.str();
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        results.push_back(r);
    }

    void note_containment(const MultiGraph& g,
                          const std::vector<VertexId>& boundary,
                          const Labeling& u) {
        ForestMask wired = wired_mst(g, boundary, u);
        ForestMask free_t = kruskal_mst(g, u);
        ++containment_trials;
        if (!subset_of(wired, free_t)) containment_ok = false;
    }

    void criterion_1(std::ostringstream& out, bool& ok) {
        Section5Graph s5 = build_section5_graph();
        TreeCatalog cat = formula_catalog(s5.graph);
        ok = cat.trees.size() == 64;

        std::map<BigRational, int> classes;
        BigRational total = 0;
        for (const BigRational& p : cat.probabilities) {
            ++classes[p];
            total += p;
        }
        std::map<BigRational, int> expected = {
            {BigRational(163, 12600), 12},
            {BigRational(109, 6300), 36},
            {BigRational(7, 600), 4},
            {BigRational(23, 1575), 12},
        };
        ok = ok && classes == expected && total == 1;

        BigRational marginal = edge_event_probability(s5.graph, {s5.e1}, {});
        BigRational joint = edge_event_probability(s5.graph, {s5.e1, s5.e2}, {});
        BigRational ratio = joint / (marginal * marginal);
        ok = ok && marginal == BigRational(331, 1260) &&
             joint == BigRational(109, 1575) &&
             ratio == BigRational(109872, 109561);
        out << "64 trees, classes 12/36/4/12, marginal " << marginal.get_str()
            << ", joint " << joint.get_str() << ", ratio " << ratio.get_str();
    }

    // shared by criteria 2 and 3: catalogs agree and each sums to one
    bool catalogs_agree = false;
    bool catalogs_normalized = false;
    long long catalog_graphs = 0;

    void criteria_2_3() {
        catalogs_agree = true;
        catalogs_normalized = true;

        auto check = [&](const MultiGraph& g) {
            TreeCatalog formula = formula_catalog(g);
            TreeCatalog oracle = ordering_catalog(g);
            if (catalog_map(formula) != catalog_map(oracle))
                catalogs_agree = false;
            BigRational fsum = 0, osum = 0;
            for (const BigRational& p : formula.probabilities) fsum += p;
            for (const BigRational& p : oracle.probabilities) osum += p;
            if (fsum != 1 || osum != 1) catalogs_normalized = false;
            ++catalog_graphs;
        };

        Section5Graph s5 = build_section5_graph();
        check(s5.graph);

        std::mt19937_64 rng(mix64(opt.seed ^ 0x23ULL));
        long long n = scale(200, 25);
        for (long long t = 0; t < n; ++t)
            check(random_connected_graph(rng, 8, true));
    }

    void criterion_4(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x4ULL));
        long long n = scale(1000, 150);
        long long mismatches = 0;
        for (long long t = 0; t < n; ++t) {
            MultiGraph g = random_connected_graph(rng, 12, true);
            Labeling u = sample_labels(g, rng());
            if (!(kruskal_mst(g, u) == criterion_tree(g, u))) ++mismatches;
        }
        ok = mismatches == 0;
        out << n << " graphs, " << mismatches << " mismatches";
    }

    void criterion_5(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x5ULL));
        long long n = scale(500, 60);
        long long mismatches = 0, edges = 0;
        for (long long t = 0; t < n; ++t) {
            MultiGraph g = random_connected_graph(rng, 10, true);
            Labeling u = sample_labels(g, rng());
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                ++edges;
                if (!(z_free(g, u, e) == z_free_cut(g, u, e))) ++mismatches;
            }
        }
        ok = mismatches == 0;
        out << n << " graphs / " << edges << " edges, " << mismatches
            << " mismatches";
    }

    void criterion_6(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x6ULL));
        long long n = scale(500, 60);
        long long mismatches = 0;
        for (long long t = 0; t < n; ++t) {
            int dim = 1 + static_cast<int>(rng() % 2);
            int side = 4 + static_cast<int>(rng() % 5);
            MultiGraph g = grid_box(dim, side, Topology::Free);
            std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
            Labeling u = sample_labels(g, rng());
            if (!(invasion_union(g, boundary, u) == wired_mst(g, boundary, u)))
                ++mismatches;
            note_containment(g, boundary, u);
        }
        ok = mismatches == 0;
        out << n << " boxes, " << mismatches << " mismatches";
    }

    void criterion_7(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x7ULL));
        MultiGraph box = grid_box(2, 8, Topology::Free);
        long long singles = scale(10000, 500);
        long long worst_total = 0, worst_outside = 0;
        long long violations = 0;
        for (long long t = 0; t < singles; ++t) {
            bool use_box = (t % 5 == 0);
            MultiGraph g =
                use_box ? box : random_connected_graph(rng, 12, true);
            Labeling u = sample_labels(g, rng());
            EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
            double nv = uniform_label(rng(), 0);
            Labeling u2 = perturb(u, {{e, nv}});
            ForestMask t1 = kruskal_mst(g, u);
            ForestMask t2 = kruskal_mst(g, u2);
            int d = symdiff_size(t1, t2);
            int outside = d - (t1.test(e) != t2.test(e) ? 1 : 0);
            worst_total = std::max<long long>(worst_total, d);
            worst_outside = std::max<long long>(worst_outside, outside);
            if (d > 2 || outside > 1) ++violations;
        }
        long long multis = scale(1000, 100);
        for (long long t = 0; t < multis; ++t) {
            MultiGraph g = random_connected_graph(rng, 12, true);
            Labeling u = sample_labels(g, rng());
            int k = 2 + static_cast<int>(rng() % 4);
            std::vector<std::pair<EdgeId, double>> changes;
            std::vector<char> in_k(g.edge_count(), 0);
            for (int i = 0; i < k; ++i) {
                EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
                if (in_k[e]) continue;
                in_k[e] = 1;
                changes.emplace_back(e, uniform_label(rng(), 0));
            }
            Labeling u2 = perturb(u, changes);
            ForestMask t1 = kruskal_mst(g, u);
            ForestMask t2 = kruskal_mst(g, u2);
            int outside = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (t1.test(e) != t2.test(e) && !in_k[e]) ++outside;
            if (outside > static_cast<int>(changes.size())) ++violations;
        }
        ok = violations == 0;
        out << singles << " single + " << multis << " multi perturbations, "
            << violations << " violations, worst |diff| " << worst_total;
    }

    void criterion_8(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x8ULL));
        long long n = scale(1000, 150);
        long long violations = 0;
        for (long long t = 0; t < n; ++t) {
            MultiGraph g = random_connected_graph(rng, 12, false);
            Labeling u = sample_labels(g, rng());
            // random edge subset, restricted to one connected piece
            std::vector<char> in_s(g.edge_count(), 0);
            int picked = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (rng() % 10 < 6) {
                    in_s[e] = 1;
                    ++picked;
                }
            if (picked == 0) {
                in_s[static_cast<EdgeId>(rng() % g.edge_count())] = 1;
                picked = 1;
            }
            Partition part = components(g, in_s);
            VertexId root = -1;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (in_s[e]) {
                    root = g.endpoints[e].first;
                    break;
                }
            std::vector<VertexId> vmap(g.vertex_count, -1);
            VertexId next = 0;
            for (VertexId v = 0; v < g.vertex_count; ++v)
                if (part.same(v, root)) vmap[v] = next++;
            std::vector<std::pair<VertexId, VertexId>> h_edges;
            std::vector<EdgeId> orig_edge;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (!in_s[e]) continue;
                auto [a, b] = g.endpoints[e];
                if (vmap[a] < 0) continue;  // other component of (V, S)
                h_edges.emplace_back(vmap[a], vmap[b]);
                orig_edge.push_back(e);
            }
            MultiGraph h = build_graph(next, h_edges);
            Labeling uh;
            uh.mode = LabelMode::Float64;
            for (EdgeId i = 0; i < h.edge_count(); ++i) {
                uh.vals.push_back(u.value(orig_edge[i]));
                uh.tie.push_back(u.tie_rank(orig_edge[i]));
            }
            ForestMask tg = kruskal_mst(g, u);
            ForestMask th = kruskal_mst(h, uh);
            for (EdgeId i = 0; i < h.edge_count(); ++i)
                if (tg.test(orig_edge[i]) && !th.test(i)) ++violations;
        }
        ok = violations == 0;
        out << n << " (G, H, U) triples, " << violations << " violations";
    }

    void criterion_9(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x9ULL));
        long long n = scale(200, 40);
        long long failures = 0;
        std::vector<DualPair> pairs;
        for (int side = 2; side <= 8; ++side)
            pairs.push_back(dual_graph(embed_grid(side)));
        for (long long t = 0; t < n; ++t) {
            const DualPair& pair = pairs[t % pairs.size()];
            Labeling u = sample_labels(pair.primal.graph, rng());
            if (!verify_tree_duality(pair, u)) ++failures;
        }
        ok = failures == 0;
        out << n << " labelings on grids 2x2..8x8, " << failures
            << " failures";
    }

    void criterion_10(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x10ULL));
        const double eps_grid[3] = {0.01, 0.05, 0.2};
        long long n = scale(1000, 150);
        long long failures = 0;
        for (long long t = 0; t < n; ++t) {
            int side = 4 + static_cast<int>(t % 5);
            MultiGraph g = grid_box(2, side, Topology::Free);
            double eps = eps_grid[t % 3];
            Labeling u = sample_labels(g, rng());
            ForestMask xi = xi_sample(g, u, eps);
            if (!subset_of(kruskal_mst(g, u), xi)) ++failures;
            if (components(g, xi.in).component_count() != 1) ++failures;
        }
        MultiGraph fixed = grid_box(2, 3, Topology::Free);  // 12 edges
        long long trials = scale(100000, 2000);
        LawCheckReport law =
            free_union_law_check(fixed, 0.2, trials, opt.seed ^ 0x10aULL);
        ok = failures == 0 && law.max_discrepancy_sigma < 4.0;
        out << n << " xi trials, " << failures
            << " failures; law check max discrepancy "
            << law.max_discrepancy_sigma << " sigma at " << trials
            << " trials";
    }

    void criterion_11(std::ostringstream& out, bool& ok) {
        std::mt19937_64 rng(mix64(opt.seed ^ 0x11ULL));
        ok = true;
        std::ostringstream means;
        for (int n = 3; n <= 5; ++n) {
            MultiGraph g = grid_box(2, n, Topology::Torus);
            double want = 2.0 * (n * n - 1) / (n * n);
            for (int s = 0; s < 10; ++s) {
                Labeling u = sample_labels(g, rng());
                ForestMask t = kruskal_mst(g, u);
                DegreeStats stats = degree_stats(g, t);
                long long degree_sum = 0;
                for (auto [d, c] : stats.histogram) degree_sum += 1LL * d * c;
                if (t.count != n * n - 1 || stats.mean != want ||
                    degree_sum != 2LL * (n * n - 1))
                    ok = false;
            }
            means << (n > 3 ? ", " : "") << "n=" << n << ": " << want;
        }
        out << "torus mean degrees " << means.str();
    }

    void criterion_12(std::ostringstream& out, bool& ok) {
        long long seeds = scale(200, 30);
        MultiGraph g = grid_box(2, 8, Topology::Free);
        std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
        std::vector<double> pool_free, pool_wired;
        for (long long s = 0; s < seeds; ++s) {
            Labeling u =
                sample_labels(g, mix64(opt.seed ^ 0x12ULL) +
                                     static_cast<std::uint64_t>(s));
            ResidualSample rf = coupling_residuals_free(g, u);
            pool_free.insert(pool_free.end(), rf.values.begin(),
                             rf.values.end());
            ResidualSample rw = coupling_residuals_wired(g, boundary, u);
            pool_wired.insert(pool_wired.end(), rw.values.begin(),
                              rw.values.end());
        }
        // level 0.01 split over the two pooled tests
        KsResult kf = ks_statistic(pool_free, 0.005);
        KsResult kw = ks_statistic(pool_wired, 0.005);
        ok = kf.pass && kw.pass;
        out << seeds << " seeds; free KS " << kf.statistic << " (crit "
            << kf.critical << ", n=" << kf.n << "), wired KS " << kw.statistic
            << " (crit " << kw.critical << ", n=" << kw.n << ")";
    }

    void criterion_13(std::ostringstream& out, bool& ok) {
        long long seeds = scale(100, 30);
        const int sizes[3] = {8, 16, 32};
        double means[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            MultiGraph g = grid_box(2, sizes[i], Topology::Free);
            std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
            double sum = 0.0;
            for (long long s = 0; s < seeds; ++s) {
                std::uint64_t base = mix64(opt.seed ^ 0x13ULL) +
                                     static_cast<std::uint64_t>(2 * s) +
                                     static_cast<std::uint64_t>(i) * 0x10001ULL;
                Labeling u = sample_labels(g, base);
                ForestMask forest = wired_mst(g, boundary, u);
                note_containment(g, boundary, u);
                std::vector<char> keep(g.edge_count(), 0);
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (forest.test(e) &&
                        uniform_label(base + 1,
                                      static_cast<std::uint64_t>(e)) < 0.8)
                        keep[e] = 1;
                sum += static_cast<double>(largest_cluster(g, keep)) /
                       g.vertex_count;
            }
            means[i] = sum / seeds;
        }
        ok = means[0] > means[1] && means[1] > means[2];
        out << "normalized largest cluster at p=0.8: " << means[0] << " (8) > "
            << means[1] << " (16) > " << means[2] << " (32), " << seeds
            << " seeds each";
    }

    void criterion_15(std::ostringstream& out, bool& ok) {
        ConditionalExhibit ex = k4_conditional_exhibit();
        ok = ex.conditional != ex.deleted_graph;
        out << "tree {";
        for (std::size_t i = 0; i < ex.tree.size(); ++i)
            out << (i ? "," : "") << ex.tree[i];
        out << "}: conditional " << ex.conditional.get_str()
            << " vs deleted-graph " << ex.deleted_graph.get_str();
    }
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    Battery b;
    b.opt = opt;

    b.run(1, "exact tree-class catalog", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_1(out, ok);
        return ok;
    });
    b.run(2, "ordering-oracle equivalence", [&](std::ostringstream& out) {
        b.criteria_2_3();
        out << b.catalog_graphs << " graphs compared";
        return b.catalogs_agree;
    });
    b.run(3, "catalog normalization", [&](std::ostringstream& out) {
        out << b.catalog_graphs << " catalogs sum to 1";
        return b.catalogs_normalized;
    });
    b.run(4, "kruskal vs criterion tree", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_4(out, ok);
        return ok;
    });
    b.run(5, "path vs cut form of Z", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_5(out, ok);
        return ok;
    });
    b.run(6, "invasion union vs wired tree", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_6(out, ok);
        return ok;
    });
    b.run(7, "perturbation stability", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_7(out, ok);
        return ok;
    });
    b.run(8, "subgraph coupling", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_8(out, ok);
        return ok;
    });
    b.run(9, "planar tree duality", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_9(out, ok);
        return ok;
    });
    b.run(10, "xi connectivity and law", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_10(out, ok);
        return ok;
    });
    b.run(11, "torus degree identity", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_11(out, ok);
        return ok;
    });
    b.run(12, "residual uniformity (KS)", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_12(out, ok);
        return ok;
    });
    b.run(13, "forest percolation probe", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_13(out, ok);
        return ok;
    });
    b.run(14, "wired within free", [&](std::ostringstream& out) {
        out << b.containment_trials << " containment checks";
        return b.containment_ok && b.containment_trials > 0;
    });
    b.run(15, "conditional-measure exhibit", [&](std::ostringstream& out) {
        bool ok = false;
        b.criterion_15(out, ok);
        return ok;
    });
    return b.results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

std::string format_result_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
        << " — " << r.detail;
    return out.str();
}

}  // namespace msf
