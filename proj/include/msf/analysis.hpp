#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "msf/forests.hpp"
#include "msf/graph.hpp"
#include "msf/invasion.hpp"
#include "msf/labeling.hpp"

namespace msf {

struct DegreeStats {
    std::map<int, long long> histogram;  // loop-aware forest degrees
    double mean = 0.0;                   // 2 |forest| / |V|
};
DegreeStats degree_stats(const MultiGraph& g, const ForestMask& forest);

// Number of connected components of the forest-restricted graph with the
// `exclude` vertices (typically the wired vertex) removed.
int tree_count(const MultiGraph& g, const ForestMask& forest,
               const std::vector<VertexId>& exclude);

struct ProbabilityEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    long long hits = 0;
    long long trials = 0;
};

// Monte Carlo estimate of alpha(x_1..x_K): invasion basins in the wired
// quotient pairwise vertex-disjoint at stopped saturation.
ProbabilityEstimate disjoint_invasion_probability(
    const MultiGraph& g, const std::vector<VertexId>& boundary,
    const std::vector<VertexId>& sources, long long trials, std::uint64_t seed);

// xi = {e : 1-U(e) >= (1-eps)(1-Z_f(e))}; contains the MST and intersects
// every nonempty cut, hence is connected on connected graphs.
ForestMask xi_sample(const MultiGraph& g, const Labeling& u, double eps);

struct LawCheckReport {
    std::vector<double> freq_union;  // per-edge inclusion of MST union Bern(eps)
    std::vector<double> freq_xi;     // per-edge inclusion of xi
    double max_discrepancy = 0.0;
    double max_discrepancy_sigma = 0.0;  // in binomial standard errors
    long long trials = 0;
};
LawCheckReport free_union_law_check(const MultiGraph& g, double eps,
                                    long long trials, std::uint64_t seed);

struct ResidualSample {
    std::vector<double> values;
    int infinite_z_edges = 0;  // excluded bridges / sentinel-1 edges counted apart
};

// (1-U(e))/(1-Z_f(e)) over non-forest edges (Z finite there).
ResidualSample coupling_residuals_free(const MultiGraph& g, const Labeling& u);

// U(e)/Z_inf(e) over basin-of-infinity edges; sentinel-1 edges contribute the
// raw label.
ResidualSample coupling_residuals_wired(const MultiGraph& g,
                                        const std::vector<VertexId>& boundary,
                                        const Labeling& u);

struct KsResult {
    double statistic = 0.0;
    double critical = 0.0;
    double level = 0.0;
    long long n = 0;
    bool pass = false;
};
// One-sample Kolmogorov-Smirnov distance against uniform [0,1], asymptotic
// critical value at the given level.
KsResult ks_statistic(const std::vector<double>& sample, double level);

struct ScanPoint {
    double p = 0.0;
    double mean_macroscopic = 0.0;  // clusters joining two opposite faces
    double stderr_macroscopic = 0.0;
    double gap_frequency = 0.0;     // |free tree \ wired tree| / |E|
};
// Uniqueness scan on 2-D boxes: macroscopic-cluster count of G[p] paired with
// the free-minus-wired gap frequency. Exploratory output.
std::vector<ScanPoint> ae_uniqueness_scan(int side,
                                          const std::vector<double>& p_grid,
                                          long long trials, std::uint64_t seed);

struct ProbePoint {
    double p = 0.0;
    double mean_normalized_largest = 0.0;
};
// Mean largest Bernoulli(p)-open cluster within the wired forest, normalized
// by |V|.
std::vector<ProbePoint> pc_forest_probe(const MultiGraph& g,
                                        const std::vector<VertexId>& boundary,
                                        const std::vector<double>& p_grid,
                                        long long trials, std::uint64_t seed);

}  // namespace msf
