#include "msf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msf {

DegreeStats degree_stats(const MultiGraph& g, const ForestMask& forest) {
    DegreeStats stats;
    std::vector<int> deg(g.vertex_count, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!forest.test(e)) continue;
        auto [u, v] = g.endpoints[e];
        deg[u] += 1;
        deg[v] += 1;  // a loop counts twice at its vertex
    }
    for (int d : deg) ++stats.histogram[d];
    if (g.vertex_count > 0)
        stats.mean = 2.0 * forest.count / static_cast<double>(g.vertex_count);
    return stats;
}

int tree_count(const MultiGraph& g, const ForestMask& forest,
               const std::vector<VertexId>& exclude) {
    std::vector<char> excluded(g.vertex_count, 0);
    for (VertexId v : exclude) excluded[v] = 1;
    Partition part(g.vertex_count);
    int removed = 0;
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (excluded[v]) ++removed;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!forest.test(e)) continue;
        auto [u, v] = g.endpoints[e];
        if (excluded[u] || excluded[v]) continue;
        part.unite(u, v);
    }
    return part.component_count() - removed;
}

ProbabilityEstimate disjoint_invasion_probability(
    const MultiGraph& g, const std::vector<VertexId>& boundary,
    const std::vector<VertexId>& sources, long long trials,
    std::uint64_t seed) {
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
            if (sources[i] == sources[j])
                throw std::invalid_argument(
                    "disjoint_invasion_probability: duplicate source");

    bool wired = !boundary.empty();
    WiredQuotient q;
    if (wired) q = wired_quotient(g, boundary);
    const MultiGraph& host = wired ? q.graph : g;

    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        Labeling u = sample_labels(g, mix64(seed) + static_cast<std::uint64_t>(t));
        Labeling uh = wired ? restrict_labels(u, q.orig_of) : u;
        long long cap = host.edge_count() + 1;
        std::vector<std::vector<char>> vertex_sets;
        for (VertexId s : sources) {
            VertexId hs = wired ? q.vertex_map[s] : s;
            InvasionTrace trace =
                invasion_basin(host, uh, hs, cap, wired ? q.wired : -1);
            std::vector<char> vs(host.vertex_count, 0);
            vs[hs] = 1;
            for (EdgeId e : trace.edges_in_order) {
                vs[host.endpoints[e].first] = 1;
                vs[host.endpoints[e].second] = 1;
            }
            if (wired) vs[q.wired] = 0;  // meeting only at infinity is disjoint
            vertex_sets.push_back(std::move(vs));
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < vertex_sets.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < vertex_sets.size() && disjoint; ++j)
                for (VertexId v = 0; v < host.vertex_count; ++v)
                    if (vertex_sets[i][v] && vertex_sets[j][v]) {
                        disjoint = false;
                        break;
                    }
        if (disjoint) ++hits;
    }
    ProbabilityEstimate est;
    est.hits = hits;
    est.trials = trials;
    if (trials > 0) {
        est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
        est.standard_error =
            std::sqrt(est.estimate * (1.0 - est.estimate) /
                      static_cast<double>(trials));
    }
    return est;
}

ForestMask xi_sample(const MultiGraph& g, const Labeling& u, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("xi_sample: eps must be in (0,1)");
    ForestMask xi(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        ZValue z = z_free(g, u, e);
        if (!z.is_finite()) {
            xi.set(e);  // bridges: Z_f = infinity
            continue;
        }
        if (1.0 - u.value(e) >= (1.0 - eps) * (1.0 - z.value(u))) xi.set(e);
    }
    return xi;
}

LawCheckReport free_union_law_check(const MultiGraph& g, double eps,
                                    long long trials, std::uint64_t seed) {
    int m = g.edge_count();
    std::vector<long long> count_union(m, 0), count_xi(m, 0);
    for (long long t = 0; t < trials; ++t) {
        std::uint64_t s = mix64(seed) + static_cast<std::uint64_t>(3 * t);
        Labeling u = sample_labels(g, s);
        ForestMask mst = kruskal_mst(g, u);
        for (EdgeId e = 0; e < m; ++e) {
            bool omega =
                uniform_label(s + 1, static_cast<std::uint64_t>(e)) < eps;
            if (mst.test(e) || omega) ++count_union[e];
        }
        if (eps > 0.0) {
            Labeling u2 = sample_labels(g, s + 2);
            ForestMask xi = xi_sample(g, u2, eps);
            for (EdgeId e = 0; e < m; ++e)
                if (xi.test(e)) ++count_xi[e];
        } else {
            Labeling u2 = sample_labels(g, s + 2);
            ForestMask xi = kruskal_mst(g, u2);  // eps = 0 degenerates to MST
            for (EdgeId e = 0; e < m; ++e)
                if (xi.test(e)) ++count_xi[e];
        }
    }
    LawCheckReport report;
    report.trials = trials;
    report.freq_union.resize(m);
    report.freq_xi.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        double fu = static_cast<double>(count_union[e]) / trials;
        double fx = static_cast<double>(count_xi[e]) / trials;
        report.freq_union[e] = fu;
        report.freq_xi[e] = fx;
        double diff = std::abs(fu - fx);
        double pbar = 0.5 * (fu + fx);
        double se = std::sqrt(2.0 * std::max(pbar * (1.0 - pbar), 1e-12) /
                              static_cast<double>(trials));
        if (diff > report.max_discrepancy) report.max_discrepancy = diff;
        if (diff / se > report.max_discrepancy_sigma)
            report.max_discrepancy_sigma = diff / se;
    }
    return report;
}

ResidualSample coupling_residuals_free(const MultiGraph& g, const Labeling& u) {
    ResidualSample sample;
    ForestMask mst = kruskal_mst(g, u);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (mst.test(e) || g.is_loop(e)) continue;
        ZValue z = z_free(g, u, e);
        if (!z.is_finite()) {
            ++sample.infinite_z_edges;  // bridge; always in the forest anyway
            continue;
        }
        double zf = z.value(u);
        sample.values.push_back((1.0 - u.value(e)) / (1.0 - zf));
    }
    return sample;
}

ResidualSample coupling_residuals_wired(const MultiGraph& g,
                                        const std::vector<VertexId>& boundary,
                                        const Labeling& u) {
    ResidualSample sample;
    std::vector<ZValue> zs = z_infinity_all(g, boundary, u);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const ZValue& z = zs[e];
        if (z.kind == ZValue::Kind::Bottom) continue;  // loop or dropped edge
        if (!z.admits(e, u)) continue;                 // outside the basin
        if (z.kind == ZValue::Kind::One) {
            ++sample.infinite_z_edges;
            sample.values.push_back(u.value(e));  // Z = 1: residual is the label
            continue;
        }
        sample.values.push_back(u.value(e) / z.value(u));
    }
    return sample;
}

KsResult ks_statistic(const std::vector<double>& sample, double level) {
    if (sample.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> x = sample;
    std::sort(x.begin(), x.end());
    long long n = static_cast<long long>(x.size());
    double d = 0.0;
    for (long long i = 0; i < n; ++i) {
        double hi = static_cast<double>(i + 1) / n - x[i];
        double lo = x[i] - static_cast<double>(i) / n;
        d = std::max({d, hi, lo});
    }
    KsResult r;
    r.statistic = d;
    r.level = level;
    r.n = n;
    r.critical = std::sqrt(-0.5 * std::log(level / 2.0)) /
                 std::sqrt(static_cast<double>(n));
    r.pass = d < r.critical;
    return r;
}

namespace {

// largest cluster size under a kept-edge mask, restricted to kept vertices
int largest_component(const MultiGraph& g, const std::vector<char>& keep_edge) {
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

}  // namespace

std::vector<ScanPoint> ae_uniqueness_scan(int side,
                                          const std::vector<double>& p_grid,
                                          long long trials,
                                          std::uint64_t seed) {
    MultiGraph g = grid_box(2, side, Topology::Free);
    std::vector<VertexId> boundary = tagged_vertices(g, "boundary");
    std::vector<VertexId> left, right;
    for (int y = 0; y < side; ++y) {
        left.push_back(y * side);
        right.push_back(y * side + side - 1);
    }
    std::vector<ScanPoint> out;
    for (double p : p_grid) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("ae_uniqueness_scan: p outside (0,1)");
        double sum = 0.0, sumsq = 0.0, gap_sum = 0.0;
        for (long long t = 0; t < trials; ++t) {
            Labeling u =
                sample_labels(g, mix64(seed) + static_cast<std::uint64_t>(t));
            ForestMask open = threshold(g, u, p);
            Partition part = components(g, open.in);
            std::vector<char> touches_left(g.vertex_count, 0),
                touches_right(g.vertex_count, 0), counted(g.vertex_count, 0);
            for (VertexId v : left) touches_left[part.representative(v)] = 1;
            for (VertexId v : right) touches_right[part.representative(v)] = 1;
            int macro = 0;
            for (VertexId v = 0; v < g.vertex_count; ++v) {
                VertexId r = part.representative(v);
                if (!counted[r] && touches_left[r] && touches_right[r]) {
                    counted[r] = 1;
                    ++macro;
                }
            }
            sum += macro;
            sumsq += static_cast<double>(macro) * macro;

            ForestMask free_tree = kruskal_mst(g, u);
            ForestMask wired_tree = wired_mst(g, boundary, u);
            int gap = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (free_tree.test(e) && !wired_tree.test(e)) ++gap;
            gap_sum += static_cast<double>(gap) / g.edge_count();
        }
        ScanPoint pt;
        pt.p = p;
        pt.mean_macroscopic = sum / trials;
        double var = std::max(0.0, sumsq / trials -
                                       pt.mean_macroscopic * pt.mean_macroscopic);
        pt.stderr_macroscopic = std::sqrt(var / trials);
        pt.gap_frequency = gap_sum / trials;
        out.push_back(pt);
    }
    return out;
}

std::vector<ProbePoint> pc_forest_probe(const MultiGraph& g,
                                        const std::vector<VertexId>& boundary,
                                        const std::vector<double>& p_grid,
                                        long long trials, std::uint64_t seed) {
    std::vector<ProbePoint> out;
    for (double p : p_grid) {
        double sum = 0.0;
        for (long long t = 0; t < trials; ++t) {
            std::uint64_t s = mix64(seed ^ 0x51ed2701ULL) +
                              static_cast<std::uint64_t>(2 * t);
            Labeling u = sample_labels(g, s);
            ForestMask forest = wired_mst(g, boundary, u);
            std::vector<char> keep(g.edge_count(), 0);
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (!forest.test(e)) continue;
                if (uniform_label(s + 1, static_cast<std::uint64_t>(e)) < p)
                    keep[e] = 1;
            }
            sum += static_cast<double>(largest_component(g, keep)) /
                   g.vertex_count;
        }
        ProbePoint pt;
        pt.p = p;
        pt.mean_normalized_largest = trials > 0 ? sum / trials : 0.0;
        out.push_back(pt);
    }
    return out;
}

}  // namespace msf
