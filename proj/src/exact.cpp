#include "msf/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msf/forests.hpp"

namespace msf {

namespace {

bool is_spanning_tree(const MultiGraph& g, const std::vector<EdgeId>& t) {
    if (static_cast<int>(t.size()) != g.vertex_count - 1) return false;
    Partition part(g.vertex_count);
    for (EdgeId e : t) {
        if (e < 0 || e >= g.edge_count()) return false;
        if (!part.unite(g.endpoints[e].first, g.endpoints[e].second))
            return false;
    }
    return part.component_count() == 1;
}

void enumerate_rec(const MultiGraph& g, EdgeId next, Partition part,
                   std::vector<EdgeId>& chosen,
                   std::vector<std::vector<EdgeId>>& out) {
    if (part.component_count() == 1) {
        out.push_back(chosen);
        return;
    }
    int needed = part.component_count() - 1;
    if (g.edge_count() - next < needed) return;
    for (EdgeId e = next; e < g.edge_count(); ++e) {
        Partition p2 = part;
        if (!p2.unite(g.endpoints[e].first, g.endpoints[e].second)) continue;
        chosen.push_back(e);
        enumerate_rec(g, e + 1, std::move(p2), chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const MultiGraph& g) {
    if (components_all(g).component_count() != 1)
        throw std::invalid_argument("enumerate_spanning_trees: disconnected graph");
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> chosen;
    enumerate_rec(g, 0, Partition(g.vertex_count), chosen, out);
    return out;
}

BigRational mst_probability(const MultiGraph& g, const std::vector<EdgeId>& t,
                            int max_tree_size) {
    if (!is_spanning_tree(g, t))
        throw std::invalid_argument("mst_probability: not a spanning tree");
    int n = static_cast<int>(t.size());
    if (n > max_tree_size)
        throw std::length_error("mst_probability: tree too large");

    // N(S) depends only on the contracted prefix set, so the permutation sum
    // collapses onto the subset lattice of T.
    std::uint32_t full = n ? (1u << n) - 1 : 0;
    std::vector<long> nval(full + 1, 0);
    for (std::uint32_t s = 0; s <= full; ++s) {
        Partition part(g.vertex_count);
        for (int i = 0; i < n; ++i)
            if (s & (1u << i))
                part.unite(g.endpoints[t[i]].first, g.endpoints[t[i]].second);
        long count = 0;
        for (auto [u, v] : g.endpoints)
            if (!part.same(u, v)) ++count;
        nval[s] = count;
    }

    std::vector<BigRational> acc(full + 1, BigRational(0));
    acc[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        BigRational sum = 0;
        for (int i = 0; i < n; ++i) {
            if (!(s & (1u << i))) continue;
            std::uint32_t prev = s & ~(1u << i);
            sum += acc[prev] / nval[prev];
        }
        acc[s] = sum;
    }
    return acc[full];
}

namespace {

struct OrderingStream {
    const MultiGraph& g;
    std::vector<mpz_class> factorial;
    std::map<std::vector<EdgeId>, mpz_class> tally;
    const std::vector<char>* target = nullptr;  // prune to one tree when set
    mpz_class target_count = 0;

    explicit OrderingStream(const MultiGraph& graph) : g(graph) {
        factorial.resize(g.edge_count() + 1);
        factorial[0] = 1;
        for (int i = 1; i <= g.edge_count(); ++i)
            factorial[i] = factorial[i - 1] * i;
    }

    void run() {
        std::vector<char> remaining(g.edge_count(), 1);
        std::vector<EdgeId> tree;
        recurse(Partition(g.vertex_count), remaining, g.edge_count(), tree);
    }

    void recurse(const Partition& part, std::vector<char>& remaining,
                 int n_remaining, std::vector<EdgeId>& tree) {
        if (part.component_count() == 1) {
            // forest complete: the remaining edges may come in any order
            if (target) {
                target_count += factorial[n_remaining];
            } else {
                std::vector<EdgeId> key = tree;
                std::sort(key.begin(), key.end());
                tally[key] += factorial[n_remaining];
            }
            return;
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!remaining[e]) continue;
            auto [u, v] = g.endpoints[e];
            Partition p2 = part;
            bool joins = (u != v) && p2.unite(u, v);
            if (joins && target && !(*target)[e]) continue;  // other tree
            remaining[e] = 0;
            if (joins) tree.push_back(e);
            recurse(p2, remaining, n_remaining - 1, tree);
            if (joins) tree.pop_back();
            remaining[e] = 1;
        }
    }
};

}  // namespace

BigRational mst_probability_oracle(const MultiGraph& g,
                                   const std::vector<EdgeId>& t,
                                   int max_edges) {
    if (g.edge_count() > max_edges)
        throw std::length_error("mst_probability_oracle: too many edges");
    if (!is_spanning_tree(g, t))
        throw std::invalid_argument("mst_probability_oracle: not a spanning tree");
    std::vector<char> target(g.edge_count(), 0);
    for (EdgeId e : t) target[e] = 1;
    OrderingStream stream(g);
    stream.target = &target;
    stream.run();
    BigRational p(stream.target_count, stream.factorial[g.edge_count()]);
    p.canonicalize();
    return p;
}

TreeCatalog ordering_catalog(const MultiGraph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw std::length_error("ordering_catalog: too many edges");
    if (components_all(g).component_count() != 1)
        throw std::invalid_argument("ordering_catalog: disconnected graph");
    OrderingStream stream(g);
    stream.run();
    TreeCatalog cat;
    for (auto& [tree, count] : stream.tally) {
        cat.trees.push_back(tree);
        BigRational p(count, stream.factorial[g.edge_count()]);
        p.canonicalize();
        cat.probabilities.push_back(p);
    }
    return cat;
}

TreeCatalog formula_catalog(const MultiGraph& g, int max_tree_size) {
    TreeCatalog cat;
    cat.trees = enumerate_spanning_trees(g);
    cat.probabilities.reserve(cat.trees.size());
    for (auto& t : cat.trees)
        cat.probabilities.push_back(mst_probability(g, t, max_tree_size));
    return cat;
}

BigRational edge_event_probability(const MultiGraph& g,
                                   const std::vector<EdgeId>& required,
                                   const std::vector<EdgeId>& forbidden) {
    TreeCatalog cat = formula_catalog(g);
    BigRational sum = 0;
    for (std::size_t i = 0; i < cat.trees.size(); ++i) {
        const auto& t = cat.trees[i];
        auto contains = [&](EdgeId e) {
            return std::find(t.begin(), t.end(), e) != t.end();
        };
        bool ok = true;
        for (EdgeId e : required)
            if (!contains(e)) ok = false;
        for (EdgeId e : forbidden)
            if (contains(e)) ok = false;
        if (ok) sum += cat.probabilities[i];
    }
    return sum;
}

Section5Graph build_section5_graph() {
    Section5Graph s;
    s.graph = build_graph(4, {{0, 1},
                              {2, 3},
                              {0, 2},
                              {1, 3},
                              {0, 3},
                              {1, 2},
                              {0, 1},
                              {0, 1},
                              {2, 3},
                              {2, 3}});
    s.e1_class = {0, 6, 7};
    s.e2_class = {1, 8, 9};
    return s;
}

FrequencyEstimate monte_carlo_tree_frequency(const MultiGraph& g,
                                             const std::vector<EdgeId>& t,
                                             long long trials,
                                             std::uint64_t seed) {
    ForestMask target(g.edge_count());
    for (EdgeId e : t) target.set(e);
    long long hits = 0;
    for (long long i = 0; i < trials; ++i) {
        Labeling u = sample_labels(g, mix64(seed) + static_cast<std::uint64_t>(i));
        if (kruskal_mst(g, u) == target) ++hits;
    }
    FrequencyEstimate est;
    est.hits = hits;
    est.trials = trials;
    if (trials > 0) {
        est.frequency = static_cast<double>(hits) / static_cast<double>(trials);
        est.standard_error = std::sqrt(
            est.frequency * (1.0 - est.frequency) / static_cast<double>(trials));
    }
    return est;
}

ConditionalExhibit k4_conditional_exhibit() {
    MultiGraph k4 = build_graph(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const EdgeId deleted = 0;

    TreeCatalog full = formula_catalog(k4);
    BigRational p_without = 0;
    for (std::size_t i = 0; i < full.trees.size(); ++i) {
        const auto& t = full.trees[i];
        if (std::find(t.begin(), t.end(), deleted) == t.end())
            p_without += full.probabilities[i];
    }

    // K4 \ e with the same vertex set; edge i of the small graph is edge i+1
    // of K4.
    MultiGraph reduced =
        build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (std::size_t i = 0; i < full.trees.size(); ++i) {
        const auto& t = full.trees[i];
        if (std::find(t.begin(), t.end(), deleted) != t.end()) continue;
        BigRational conditional = full.probabilities[i] / p_without;
        std::vector<EdgeId> mapped;
        for (EdgeId e : t) mapped.push_back(e - 1);
        BigRational direct = mst_probability(reduced, mapped);
        if (conditional != direct) {
            ConditionalExhibit ex;
            ex.tree = t;
            ex.conditional = conditional;
            ex.deleted_graph = direct;
            return ex;
        }
    }
    throw std::logic_error("k4_conditional_exhibit: no differing tree found");
}

}  // namespace msf
