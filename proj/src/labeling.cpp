#include "msf/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msf {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_bits53(std::uint64_t seed, std::uint64_t key) {
    return mix64(mix64(seed) ^ mix64(key ^ 0x6a09e667f3bcc909ULL)) >> 11;
}

double uniform_label(std::uint64_t seed, std::uint64_t key) {
    return static_cast<double>(uniform_bits53(seed, key)) * 0x1p-53;
}

bool Labeling::less(EdgeId a, EdgeId b) const {
    if (mode == LabelMode::Exact) {
        int c = cmp(exact[a], exact[b]);
        if (c != 0) return c < 0;
    } else {
        if (vals[a] != vals[b]) return vals[a] < vals[b];
    }
    return tie_rank(a) < tie_rank(b);
}

std::vector<EdgeId> Labeling::sorted_edges() const {
    std::vector<EdgeId> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [this](EdgeId a, EdgeId b) { return less(a, b); });
    return order;
}

Labeling sample_labels(const MultiGraph& g, std::uint64_t seed,
                       LabelMode mode) {
    std::vector<std::uint64_t> keys(g.edge_count());
    std::iota(keys.begin(), keys.end(), 0);
    return sample_labels_keyed(g.edge_count(), seed, keys, mode);
}

Labeling sample_labels_keyed(int n_edges, std::uint64_t seed,
                             const std::vector<std::uint64_t>& keys,
                             LabelMode mode) {
    if (static_cast<int>(keys.size()) != n_edges)
        throw std::invalid_argument("sample_labels_keyed: key count mismatch");
    Labeling u;
    u.mode = mode;
    u.seed = seed;
    u.has_seed = true;
    if (mode == LabelMode::Exact) {
        u.exact.reserve(n_edges);
        mpz_class denom = mpz_class(1) << 53;
        for (int e = 0; e < n_edges; ++e) {
            mpq_class q(mpz_class(static_cast<unsigned long>(
                            uniform_bits53(seed, keys[e]))),
                        denom);
            q.canonicalize();
            u.exact.push_back(q);
        }
    } else {
        u.vals.reserve(n_edges);
        for (int e = 0; e < n_edges; ++e)
            u.vals.push_back(uniform_label(seed, keys[e]));
    }
    return u;
}

Labeling labels_from_values(const std::vector<double>& values) {
    Labeling u;
    u.mode = LabelMode::Float64;
    u.vals = values;
    return u;
}

Labeling labels_from_rationals(const std::vector<mpq_class>& values) {
    Labeling u;
    u.mode = LabelMode::Exact;
    u.exact = values;
    return u;
}

ForestMask threshold(const MultiGraph& g, const Labeling& u, double p) {
    ForestMask m(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (u.value(e) < p) m.set(e);
    return m;
}

Labeling dual_labeling(const Labeling& u,
                       const std::vector<EdgeId>& bijection) {
    if (static_cast<int>(bijection.size()) != u.size())
        throw std::invalid_argument("dual_labeling: bijection size mismatch");
    Labeling d;
    d.mode = u.mode;
    int n = u.size();
    d.tie.assign(n, 0);
    if (u.mode == LabelMode::Exact)
        d.exact.resize(n);
    else
        d.vals.resize(n);
    for (EdgeId e = 0; e < n; ++e) {
        EdgeId de = bijection[e];
        if (u.mode == LabelMode::Exact)
            d.exact[de] = mpq_class(1) - u.exact[e];
        else
            d.vals[de] = 1.0 - u.vals[e];
        d.tie[de] = -u.tie_rank(e);
    }
    return d;
}

Labeling perturb(const Labeling& u,
                 const std::vector<std::pair<EdgeId, double>>& new_values) {
    Labeling out = u;
    for (auto [e, v] : new_values) {
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("perturb: value outside [0,1]");
        if (out.mode == LabelMode::Exact)
            out.exact[e] = mpq_class(v);
        else
            out.vals[e] = v;
    }
    return out;
}

Labeling restrict_labels(const Labeling& u,
                         const std::vector<EdgeId>& orig_of) {
    Labeling out;
    out.mode = u.mode;
    out.seed = u.seed;
    out.has_seed = u.has_seed;
    int n = static_cast<int>(orig_of.size());
    if (!u.tie.empty()) out.tie.resize(n);
    if (u.mode == LabelMode::Exact)
        out.exact.resize(n);
    else
        out.vals.resize(n);
    for (int i = 0; i < n; ++i) {
        if (u.mode == LabelMode::Exact)
            out.exact[i] = u.exact[orig_of[i]];
        else
            out.vals[i] = u.vals[orig_of[i]];
        if (!u.tie.empty()) out.tie[i] = u.tie[orig_of[i]];
    }
    return out;
}

}  // namespace msf
