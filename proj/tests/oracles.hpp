// oracles.hpp — independent reference implementations used by the tests:
// exhaustive cycle enumeration, brute-force shift search over a box, and a
// Floyd-Warshall generator for admissible distance tables. These deliberately
// avoid the Bellman-Ford code paths they are checking.
#pragma once

#include <optional>
#include <random>

#include "gradalg/regrade.hpp"

namespace testutil {

using namespace gradalg;

// Minimum total weight over all simple directed cycles, by DFS enumeration.
inline std::optional<long> min_simple_cycle_weight(const WeightedDigraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::optional<long>>> w(n, std::vector<std::optional<long>>(n));
    for (auto& e : g.edges)
        if (!w[e.from][e.to] || e.weight < *w[e.from][e.to]) w[e.from][e.to] = e.weight;

    std::optional<long> best;
    std::vector<bool> on_path(n, false);
    auto dfs = [&](auto&& self, std::size_t start, std::size_t cur, long acc) -> void {
        for (std::size_t next = start; next < n; ++next) {
            if (!w[cur][next]) continue;
            long total = acc + *w[cur][next];
            if (next == start) {
                if (!best || total < *best) best = total;
                continue;
            }
            if (on_path[next]) continue;
            on_path[next] = true;
            self(self, start, next, total);
            on_path[next] = false;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on_path.assign(n, false);
        on_path[s] = true;
        dfs(dfs, s, s, 0);
    }
    return best;
}

// Complete backtracking search for integer shifts in the box [-B, B]^V with
// w + d(from) - d(to) >= 0 on every edge. Per weakly-connected component the
// root value is pinned to 0 (the constraints are translation invariant and
// the canonical potentials fit in the box after translation).
inline bool brute_force_shift_feasible(const WeightedDigraph& g, long box) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::pair<std::size_t, long>>> out_edges(n), in_edges(n);
    for (auto& e : g.edges) {
        if (e.from == e.to) {
            if (e.weight < 0) return false;  // negative self-loop is always infeasible
            continue;
        }
        out_edges[e.from].emplace_back(e.to, e.weight);
        in_edges[e.to].emplace_back(e.from, e.weight);
    }

    // Weakly connected components in BFS order from each unvisited root.
    std::vector<long> comp(n, -1);
    std::vector<std::vector<std::size_t>> orders;
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        std::vector<std::size_t> order = {root};
        comp[root] = static_cast<long>(orders.size());
        for (std::size_t head = 0; head < order.size(); ++head) {
            std::size_t u = order[head];
            auto visit = [&](std::size_t v) {
                if (comp[v] < 0) {
                    comp[v] = comp[u];
                    order.push_back(v);
                }
            };
            for (auto& [v, wt] : out_edges[u]) { (void)wt; visit(v); }
            for (auto& [v, wt] : in_edges[u]) { (void)wt; visit(v); }
        }
        orders.push_back(std::move(order));
    }

    std::vector<long> d(n, 0);
    std::vector<bool> assigned(n, false);
    auto search = [&](auto&& self, const std::vector<std::size_t>& order, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        std::size_t u = order[pos];
        long lo = -box, hi = box;
        if (pos == 0) lo = hi = 0;
        for (auto& [x, wt] : in_edges[u])
            if (assigned[x]) hi = std::min(hi, d[x] + wt);
        for (auto& [y, wt] : out_edges[u])
            if (assigned[y]) lo = std::max(lo, d[y] - wt);
        for (long val = lo; val <= hi; ++val) {
            d[u] = val;
            assigned[u] = true;
            if (self(self, order, pos + 1)) return true;
            assigned[u] = false;
        }
        return false;
    };
    for (auto& order : orders)
        if (!search(search, order, 0)) return false;
    return true;
}

inline WeightedDigraph random_graph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges,
                                    long wmin, long wmax) {
    WeightedDigraph g;
    std::size_t n = 1 + rng() % max_nodes;
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back("v" + std::to_string(i));
    std::size_t m = rng() % (max_edges + 1);
    for (std::size_t e = 0; e < m; ++e) {
        WeightedDigraph::Edge ed;
        ed.from = rng() % n;
        ed.to = rng() % n;
        ed.weight = wmin + static_cast<long>(rng() % static_cast<unsigned long>(wmax - wmin + 1));
        g.edges.push_back(ed);
    }
    return g;
}

// Floyd-Warshall closure of a random complete weight matrix; retries until the
// closure has no negative cycle. Independent of the Bellman-Ford code.
inline DistanceTable random_admissible_table(std::mt19937_64& rng, std::size_t max_nodes) {
    while (true) {
        std::size_t n = 1 + rng() % max_nodes;
        std::vector<std::vector<long>> f(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) f[i][j] = static_cast<long>(rng() % 7) - 3;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (f[i][k] + f[k][j] < f[i][j]) f[i][j] = f[i][k] + f[k][j];
        bool neg = false;
        for (std::size_t i = 0; i < n; ++i)
            if (f[i][i] < 0) neg = true;
        if (neg) continue;
        DistanceTable t;
        for (std::size_t i = 0; i < n; ++i) t.nodes.push_back("x" + std::to_string(i));
        t.f = std::move(f);
        for (std::size_t i = 0; i < n; ++i) t.f[i][i] = 0;
        return t;
    }
}

}  // namespace testutil
