#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "msf/graph.hpp"

namespace msf {

// Counter-based uniform draw: pure function of (seed, key), independent of
// traversal order. 53-bit dyadic rational in [0,1).
std::uint64_t mix64(std::uint64_t x);
double uniform_label(std::uint64_t seed, std::uint64_t key);
std::uint64_t uniform_bits53(std::uint64_t seed, std::uint64_t key);

enum class LabelMode { Float64, Exact };

// Edge subset of a host graph (tree, forest or percolation configuration).
struct ForestMask {
    std::vector<char> in;
    int count = 0;

    ForestMask() = default;
    explicit ForestMask(int n_edges) : in(n_edges, 0) {}

    bool test(EdgeId e) const { return in[e] != 0; }
    void set(EdgeId e) {
        if (!in[e]) {
            in[e] = 1;
            ++count;
        }
    }
    void reset(EdgeId e) {
        if (in[e]) {
            in[e] = 0;
            --count;
        }
    }
    std::vector<EdgeId> edges() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < static_cast<EdgeId>(in.size()); ++e)
            if (in[e]) out.push_back(e);
        return out;
    }
    bool operator==(const ForestMask& o) const { return in == o.in; }
};

// Injective edge labeling into [0,1]. Numeric ties are broken by `tie` (by
// default the EdgeId), so the induced order on E is always strict and total.
struct Labeling {
    LabelMode mode = LabelMode::Float64;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::vector<double> vals;         // float mode
    std::vector<mpq_class> exact;     // exact mode
    std::vector<long long> tie;       // empty means tie-break by EdgeId

    int size() const {
        return static_cast<int>(mode == LabelMode::Exact ? exact.size()
                                                         : vals.size());
    }
    double value(EdgeId e) const {
        return mode == LabelMode::Exact ? exact[e].get_d() : vals[e];
    }
    long long tie_rank(EdgeId e) const {
        return tie.empty() ? static_cast<long long>(e) : tie[e];
    }
    // Strict total order: (value, tie_rank) lexicographic.
    bool less(EdgeId a, EdgeId b) const;

    // EdgeIds sorted ascending under the label order.
    std::vector<EdgeId> sorted_edges() const;
};

Labeling sample_labels(const MultiGraph& g, std::uint64_t seed,
                       LabelMode mode = LabelMode::Float64);

// Labels keyed by caller-supplied per-edge keys (level-independent geometric
// keys for lattice exhaustions).
Labeling sample_labels_keyed(int n_edges, std::uint64_t seed,
                             const std::vector<std::uint64_t>& keys,
                             LabelMode mode = LabelMode::Float64);

Labeling labels_from_values(const std::vector<double>& values);
Labeling labels_from_rationals(const std::vector<mpq_class>& values);

// The standard coupling G[p]: edges with U(e) < p, strict.
ForestMask threshold(const MultiGraph& g, const Labeling& u, double p);

// U†(e†) = 1 - U(e); the tie-break order on duals reverses the primal order.
Labeling dual_labeling(const Labeling& u, const std::vector<EdgeId>& bijection);

// Replace labels exactly on the keyed edges.
Labeling perturb(const Labeling& u,
                 const std::vector<std::pair<EdgeId, double>>& new_values);

// Restriction of a labeling through an edge map (e.g. a wired quotient):
// quotient edge i gets the label of orig_of[i].
Labeling restrict_labels(const Labeling& u, const std::vector<EdgeId>& orig_of);

}  // namespace msf
