#include "msf/invasion.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace msf {

namespace {

struct FrontierCmp {
    const Labeling* u;
    // priority_queue is a max-heap; invert to pop the least edge
    bool operator()(EdgeId a, EdgeId b) const { return u->less(b, a); }
};

InvasionTrace invade(const MultiGraph& g, const Labeling& u, VertexId source,
                     long long max_steps, VertexId stop_at, bool basin) {
    if (source < 0 || source >= g.vertex_count)
        throw std::out_of_range("invasion: source out of range");
    InvasionTrace trace;
    trace.source = source;

    std::vector<char> invaded(g.vertex_count, 0);
    std::vector<char> queued(g.edge_count(), 0);
    std::vector<char> accepted(g.edge_count(), 0);
    std::priority_queue<EdgeId, std::vector<EdgeId>, FrontierCmp> frontier(
        FrontierCmp{&u});

    auto add_vertex = [&](VertexId v) {
        invaded[v] = 1;
        for (auto [e, w] : g.adj[v]) {
            if (!queued[e]) {
                queued[e] = 1;
                frontier.push(e);
            }
        }
        if (basin) {
            for (EdgeId e : g.loops[v]) {
                if (!queued[e]) {
                    queued[e] = 1;
                    frontier.push(e);
                }
            }
        }
    };
    add_vertex(source);

    double record = 0.0;
    bool have_record = false;
    while (static_cast<long long>(trace.edges_in_order.size()) < max_steps) {
        if (stop_at >= 0 && invaded[stop_at]) break;
        if (frontier.empty()) {
            trace.saturated = true;
            break;
        }
        EdgeId e = frontier.top();
        frontier.pop();
        if (accepted[e]) continue;
        auto [a, b] = g.endpoints[e];
        bool a_in = invaded[a], b_in = invaded[b];
        if (!basin && a_in && b_in) continue;  // tree: discard cycle edges
        accepted[e] = 1;
        trace.edges_in_order.push_back(e);
        if (!have_record || u.value(e) > record) record = u.value(e);
        have_record = true;
        trace.frontier_maxima.push_back(record);
        if (!a_in) add_vertex(a);
        if (!b_in && b != a) add_vertex(b);
    }
    if (!trace.saturated && frontier.empty() &&
        !(stop_at >= 0 && invaded[stop_at]))
        trace.saturated = true;
    return trace;
}

}  // namespace

InvasionTrace invasion_tree(const MultiGraph& g, const Labeling& u, VertexId v,
                            long long max_steps, VertexId stop_at) {
    return invade(g, u, v, max_steps, stop_at, false);
}

InvasionTrace invasion_basin(const MultiGraph& g, const Labeling& u, VertexId v,
                             long long max_steps, VertexId stop_at) {
    return invade(g, u, v, max_steps, stop_at, true);
}

ForestMask invasion_union(const MultiGraph& g,
                          const std::vector<VertexId>& boundary,
                          const Labeling& u) {
    WiredQuotient q = wired_quotient(g, boundary);
    Labeling uq = restrict_labels(u, q.orig_of);
    ForestMask out(g.edge_count());
    long long cap = static_cast<long long>(q.graph.edge_count()) + 1;
    for (VertexId v = 0; v < q.graph.vertex_count; ++v) {
        InvasionTrace t = invasion_tree(q.graph, uq, v, cap);
        for (EdgeId e : t.edges_in_order) out.set(q.orig_of[e]);
    }
    return out;
}

SymDiffReport invasion_symdiff(const MultiGraph& g, const Labeling& u,
                               VertexId x, VertexId y, long long max_steps) {
    SymDiffReport r;
    InvasionTrace tx = invasion_tree(g, u, x, max_steps);
    InvasionTrace ty = invasion_tree(g, u, y, max_steps);
    InvasionTrace bx = invasion_basin(g, u, x, max_steps);
    InvasionTrace by = invasion_basin(g, u, y, max_steps);
    auto symdiff = [&](const InvasionTrace& p, const InvasionTrace& q) {
        std::vector<char> in_p(g.edge_count(), 0), in_q(g.edge_count(), 0);
        for (EdgeId e : p.edges_in_order) in_p[e] = 1;
        for (EdgeId e : q.edges_in_order) in_q[e] = 1;
        long long d = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in_p[e] != in_q[e]) ++d;
        return d;
    };
    r.tree_symdiff = symdiff(tx, ty);
    r.basin_symdiff = symdiff(bx, by);
    r.same_component = components_all(g).same(x, y);
    return r;
}

namespace {

// 2-unit max-flow on the vertex-split graph: are there vertex-disjoint arms
// from both endpoints of e to the sink vertex using only the given edges?
class ArmFlow {
public:
    ArmFlow(const MultiGraph& g, VertexId sink)
        : g_(g), sink_(sink), n_(2 * g.vertex_count + 2) {
        // node ids: v_in = 2v, v_out = 2v+1, source = 2V, sink node = v_in(sink)
        source_ = 2 * g.vertex_count;
    }

    bool two_arms(const std::vector<char>& edge_ok, VertexId a, VertexId b,
                  EdgeId skip) {
        head_.clear();
        cap_.clear();
        next_.clear();
        first_.assign(n_, -1);
        for (VertexId v = 0; v < g_.vertex_count; ++v)
            add(2 * v, 2 * v + 1, v == sink_ ? 2 : 1);
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (e == skip || !edge_ok[e]) continue;
            auto [u, w] = g_.endpoints[e];
            if (u == w) continue;
            add(2 * u + 1, 2 * w, 1);
            add(2 * w + 1, 2 * u, 1);
        }
        add(source_, 2 * a, 1);
        add(source_, 2 * b, 1);
        int flow = 0;
        while (flow < 2 && augment()) ++flow;
        return flow >= 2;
    }

private:
    void add(int u, int v, int c) {
        head_.push_back(v);
        cap_.push_back(c);
        next_.push_back(first_[u]);
        first_[u] = static_cast<int>(head_.size()) - 1;
        head_.push_back(u);
        cap_.push_back(0);
        next_.push_back(first_[v]);
        first_[v] = static_cast<int>(head_.size()) - 1;
    }

    bool augment() {
        int target = 2 * sink_ + 1;
        std::vector<int> prev_arc(n_, -1);
        std::vector<char> seen(n_, 0);
        std::queue<int> bfs;
        bfs.push(source_);
        seen[source_] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            if (v == target) break;
            for (int arc = first_[v]; arc >= 0; arc = next_[arc]) {
                int w = head_[arc];
                if (cap_[arc] > 0 && !seen[w]) {
                    seen[w] = 1;
                    prev_arc[w] = arc;
                    bfs.push(w);
                }
            }
        }
        if (!seen[target]) return false;
        for (int v = target; v != source_;) {
            int arc = prev_arc[v];
            --cap_[arc];
            ++cap_[arc ^ 1];
            v = head_[arc ^ 1];
        }
        return true;
    }

    const MultiGraph& g_;
    VertexId sink_;
    int n_;
    int source_;
    std::vector<int> first_, head_, cap_, next_;
};

// z_inf on the quotient graph itself (sink = wired vertex).
ZValue z_infinity_on_quotient(const MultiGraph& gq, VertexId wired,
                              const Labeling& uq, EdgeId e) {
    auto [a, b] = gq.endpoints[e];
    if (a == b) return a == wired ? ZValue::one() : ZValue::bottom();
    if (a == wired || b == wired) {
        // one arm is trivially at infinity: minimax path to the wired vertex
        VertexId x = (a == wired) ? b : a;
        Partition part(gq.vertex_count);
        bool first = true;
        for (EdgeId f : uq.sorted_edges()) {
            if (f == e) continue;
            part.unite(gq.endpoints[f].first, gq.endpoints[f].second);
            if (part.same(x, wired)) return ZValue::finite(f);
            first = false;
        }
        (void)first;
        return ZValue::one();
    }
    std::vector<EdgeId> order = uq.sorted_edges();
    order.erase(std::remove(order.begin(), order.end(), e), order.end());
    int m = static_cast<int>(order.size());

    ArmFlow flow(gq, wired);
    std::vector<char> edge_ok(gq.edge_count(), 0);
    auto feasible = [&](int k) {
        std::fill(edge_ok.begin(), edge_ok.end(), 0);
        for (int i = 0; i < k; ++i) edge_ok[order[i]] = 1;
        return flow.two_arms(edge_ok, a, b, e);
    };
    if (m == 0 || !feasible(m)) return ZValue::one();
    int lo = 1, hi = m;  // least prefix length that admits the arms
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return ZValue::finite(order[lo - 1]);
}

}  // namespace

ZValue z_infinity_proxy(const MultiGraph& g,
                        const std::vector<VertexId>& boundary,
                        const Labeling& u, EdgeId e) {
    WiredQuotient q = wired_quotient(g, boundary);
    if (q.edge_map[e] < 0)
        throw std::invalid_argument("z_infinity_proxy: edge dropped by quotient");
    Labeling uq = restrict_labels(u, q.orig_of);
    ZValue z = z_infinity_on_quotient(q.graph, q.wired, uq, q.edge_map[e]);
    if (z.is_finite()) z.witness = q.orig_of[z.witness];
    return z;
}

std::vector<ZValue> z_infinity_all(const MultiGraph& g,
                                   const std::vector<VertexId>& boundary,
                                   const Labeling& u) {
    WiredQuotient q = wired_quotient(g, boundary);
    Labeling uq = restrict_labels(u, q.orig_of);
    std::vector<ZValue> out(g.edge_count(), ZValue::bottom());
    for (EdgeId eq = 0; eq < q.graph.edge_count(); ++eq) {
        ZValue z = z_infinity_on_quotient(q.graph, q.wired, uq, eq);
        if (z.is_finite()) z.witness = q.orig_of[z.witness];
        out[q.orig_of[eq]] = z;
    }
    return out;
}

ForestMask basin_of_infinity_proxy(const MultiGraph& g,
                                   const std::vector<VertexId>& boundary,
                                   const Labeling& u) {
    WiredQuotient q = wired_quotient(g, boundary);
    std::vector<ZValue> z = z_infinity_all(g, boundary, u);
    ForestMask out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (q.edge_map[e] < 0) continue;
        if (z[e].admits(e, u)) out.set(e);
    }
    return out;
}

ForestMask basin_union(const MultiGraph& g,
                       const std::vector<VertexId>& boundary,
                       const Labeling& u) {
    WiredQuotient q = wired_quotient(g, boundary);
    Labeling uq = restrict_labels(u, q.orig_of);
    ForestMask out(g.edge_count());
    long long cap = static_cast<long long>(q.graph.edge_count()) + 1;
    for (VertexId v = 0; v < q.graph.vertex_count; ++v) {
        if (v == q.wired) continue;
        InvasionTrace t = invasion_basin(q.graph, uq, v, cap, q.wired);
        for (EdgeId e : t.edges_in_order) out.set(q.orig_of[e]);
    }
    return out;
}

}  // namespace msf
