#include "gradalg/regrade.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

WeightedDigraph ext_weight_graph(const ExtQuiver& e) {
    WeightedDigraph g;
    g.nodes = e.simples;
    for (auto& [pair, table] : e.ext) {
        if (table.empty()) continue;
        WeightedDigraph::Edge ed;
        ed.from = pair.first;
        ed.to = pair.second;
        ed.weight = table.begin()->first;  // minimum degree
        ed.multiplicity = 0;
        for (auto& [d, m] : table) { (void)d; ed.multiplicity += m; }
        g.edges.push_back(ed);
    }
    return g;
}

namespace {

// First negative simple cycle found by DFS over the min-weight adjacency.
// Only called once Bellman-Ford has certified that one exists.
std::optional<NegativeCycleWitness> find_negative_cycle(const std::vector<std::vector<std::optional<long>>>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);
    std::optional<NegativeCycleWitness> found;

    auto dfs = [&](auto&& self, std::size_t start, std::size_t cur, long acc) -> void {
        if (found) return;
        for (std::size_t next = start; next < n; ++next) {  // only nodes >= start: each cycle listed once
            if (!w[cur][next]) continue;
            long total = acc + *w[cur][next];
            if (next == start) {
                if (total < 0) {
                    found = NegativeCycleWitness{path, total};
                    return;
                }
                continue;
            }
            if (on_path[next]) continue;
            path.push_back(next);
            on_path[next] = true;
            self(self, start, next, total);
            on_path[next] = false;
            path.pop_back();
            if (found) return;
        }
    };
    for (std::size_t s = 0; s < n && !found; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        dfs(dfs, s, s, 0);
    }
    return found;
}

}  // namespace

std::optional<NegativeCycleWitness> cycle_positivity(const WeightedDigraph& g) {
    const std::size_t n = g.nodes.size();
    if (n == 0) throw alg_error(errc::validation_error, "empty node set");
    // Virtual source with 0-weight edges everywhere: start all distances at 0.
    std::vector<long> dist(n, 0);
    bool negative = false;
    for (std::size_t round = 0; round <= n; ++round) {
        bool changed = false;
        for (auto& e : g.edges) {
            if (dist[e.from] + e.weight < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.weight;
                changed = true;
            }
        }
        if (!changed) return std::nullopt;  // converged: no negative cycle
        if (round == n) negative = true;    // still relaxing after n rounds
    }
    if (!negative) return std::nullopt;

    std::vector<std::vector<std::optional<long>>> w(n, std::vector<std::optional<long>>(n));
    for (auto& e : g.edges)
        if (!w[e.from][e.to] || e.weight < *w[e.from][e.to]) w[e.from][e.to] = e.weight;
    auto found = find_negative_cycle(w);
    if (!found) throw alg_error(errc::internal, "relaxation detected a negative cycle but none was found");
    return found;
}

ShiftVector potential_shifts(const WeightedDigraph& g) {
    if (auto w = cycle_positivity(g)) {
        std::ostringstream os;
        os << "negative cycle of weight " << w->total << ":";
        for (std::size_t v : w->cycle) os << " " << g.nodes[v];
        throw alg_error(errc::negative_cycle, os.str());
    }
    const std::size_t n = g.nodes.size();
    std::vector<long> dist(n, 0);
    for (std::size_t round = 0; round + 1 < n + 1; ++round) {
        bool changed = false;
        for (auto& e : g.edges)
            if (dist[e.from] + e.weight < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.weight;
                changed = true;
            }
        if (!changed) break;
    }
    for (auto& e : g.edges)
        if (e.weight + dist[e.from] - dist[e.to] < 0)
            throw alg_error(errc::internal, "potential certificate fails after convergence");
    ShiftVector d;
    for (std::size_t v = 0; v < n; ++v) d.d[g.nodes[v]] = dist[v];
    return d;
}

std::map<std::string, long> lemmefonction_solve(const DistanceTable& t) {
    const std::size_t n = t.nodes.size();
    if (t.f.size() != n) throw alg_error(errc::hypothesis_violated, "table is not square");
    for (auto& row : t.f)
        if (row.size() != n) throw alg_error(errc::hypothesis_violated, "table is not square");
    for (std::size_t x = 0; x < n; ++x)
        if (t.f[x][x] != 0) throw alg_error(errc::hypothesis_violated, "diagonal entry f(x,x) != 0");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (t.f[x][y] + t.f[y][x] < 0)
                throw alg_error(errc::hypothesis_violated,
                                "f(x,y)+f(y,x) < 0 at (" + t.nodes[x] + "," + t.nodes[y] + ")");
            for (std::size_t z = 0; z < n; ++z)
                if (t.f[x][y] + t.f[y][z] < t.f[x][z])
                    throw alg_error(errc::hypothesis_violated, "triangle inequality fails at (" + t.nodes[x] + "," +
                                                                   t.nodes[y] + "," + t.nodes[z] + ")");
        }

    long budget = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (t.f[x][y] < 0) budget -= t.f[x][y];

    std::vector<long> d(n, 0);
    for (long step = 0; step <= budget; ++step) {
        std::vector<bool> neg(n, false);
        bool any = false;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (t.f[x][y] + d[x] - d[y] < 0) {
                    neg[x] = true;
                    any = true;
                    break;
                }
        if (!any) {
            std::map<std::string, long> out;
            for (std::size_t x = 0; x < n; ++x) out[t.nodes[x]] = d[x];
            return out;
        }
        for (std::size_t x = 0; x < n; ++x)
            if (neg[x]) d[x] += 1;
    }
    throw alg_error(errc::internal, "potential iteration exceeded its termination bound");
}

NormalizeResult normalize_positive(const AlgebraRep& a, const Grading& g) {
    require_valid_grading(a, g);
    const std::size_t r = a.simple_count();
    for (std::size_t v = 0; v < r; ++v) {
        const auto& e = a.idempotent(v);
        for (std::size_t k = 0; k < a.dim; ++k)
            if (!e[k].is_zero() && g[k] != 0)
                throw alg_error(errc::simples_not_degree_zero,
                                "idempotent '" + a.simple_label(v) + "' meets degree " + std::to_string(g[k]));
    }
    ExtQuiver eq = ext1_graded(a, g);
    WeightedDigraph wg = ext_weight_graph(eq);

    NormalizeResult out;
    out.node_labels = wg.nodes;
    if (auto w = cycle_positivity(wg)) {
        out.positive = false;
        out.witness = w;
        return out;
    }
    out.shifts = potential_shifts(wg);
    out.grading = regrade_by_shifts(a, g, out.shifts);
    for (std::size_t k = 0; k < a.dim; ++k)
        if (out.grading[k] < 0)
            throw alg_error(errc::internal, "regraded degree is negative at basis " + std::to_string(k));
    out.positive = true;
    return out;
}

}  // namespace gradalg
