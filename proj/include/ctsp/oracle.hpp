#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/eulerian_cover.hpp"
#include "ctsp/graph.hpp"

// Ground-truth module: everything here is written straight from definitions
// and kept independent of how the solvers construct their answers, so it can
// referee them. Exponential where that buys certainty; sized for small n.

namespace ctsp::oracle {

// All-pairs shortest paths with unit weights (BFS per vertex).
struct MetricClosure {
    std::vector<std::vector<int>> dist;
};

inline MetricClosure metric_closure(const Graph& g) {
    const int n = g.num_vertices();
    MetricClosure mc;
    mc.dist.assign(n, std::vector<int>(n, -1));
    for (VertexId s = 0; s < n; ++s) {
        auto& d = mc.dist[s];
        d[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (d[w] == -1) {
                    d[w] = d[v] + 1;
                    q.push(w);
                }
            }
        }
        for (int x : d)
            if (x == -1) throw std::invalid_argument("metric_closure: graph is disconnected");
    }
    return mc;
}

// Optimal tour length = metric TSP on the shortest-path closure.
// Held-Karp bitmask DP; n <= 18.
inline int held_karp_opt(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 1) return 0;
    if (n > 18) throw std::invalid_argument("held_karp_opt: n > 18");
    MetricClosure mc = metric_closure(g);
    const int FULL = 1 << n;
    const int INF = std::numeric_limits<int>::max() / 4;
    // dp[mask][j]: cheapest path starting at 0, visiting exactly mask, ending at j.
    std::vector<int> dp(static_cast<size_t>(FULL) * n, INF);
    dp[(1 << 0) * n + 0] = 0;
    for (int mask = 1; mask < FULL; ++mask) {
        if (!(mask & 1)) continue;
        for (int j = 0; j < n; ++j) {
            int cur = dp[static_cast<size_t>(mask) * n + j];
            if (cur >= INF) continue;
            for (int k = 0; k < n; ++k) {
                if (mask & (1 << k)) continue;
                int nm = mask | (1 << k);
                int cand = cur + mc.dist[j][k];
                int& slot = dp[static_cast<size_t>(nm) * n + k];
                if (cand < slot) slot = cand;
            }
        }
    }
    int best = INF;
    for (int j = 1; j < n; ++j) {
        int cur = dp[static_cast<size_t>(FULL - 1) * n + j];
        if (cur < INF) best = std::min(best, cur + mc.dist[j][0]);
    }
    return best;
}

// Same optimum by trying every vertex order; the cross-check for Held-Karp.
inline int permutation_opt(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 1) return 0;
    if (n > 10) throw std::invalid_argument("permutation_opt: n > 10");
    MetricClosure mc = metric_closure(g);
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    int best = std::numeric_limits<int>::max();
    do {
        int cost = mc.dist[0][perm.front()];
        for (int i = 0; i + 1 < n - 1; ++i) cost += mc.dist[perm[i]][perm[i + 1]];
        cost += mc.dist[perm.back()][0];
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Definition-based tour check: multiplicities in {0,1,2}, every vertex has
// positive even degree, and the used edges form one connected piece reaching
// every vertex.
inline bool verify_tour(const Graph& g, const Tour& t, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(t.mult.size()) != g.num_edges()) return fail("size mismatch");
    if (g.num_vertices() == 0) return fail("empty graph");
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        int m = t.mult[e];
        if (m < 0 || m > 2) return fail("multiplicity out of range");
        deg[g.edge(e).first] += m;
        deg[g.edge(e).second] += m;
    }
    if (g.num_vertices() == 1) return deg[0] == 0 ? true : fail("loop on single vertex");
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (deg[v] == 0) return fail("unvisited vertex");
        if (deg[v] % 2) return fail("odd degree");
    }
    // BFS over the support from vertex 0.
    std::vector<char> reached(g.num_vertices(), 0);
    std::queue<VertexId> q;
    reached[0] = 1;
    q.push(0);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : g.incident(v)) {
            if (t.mult[e] == 0) continue;
            VertexId w = g.other_end(e, v);
            if (!reached[w]) {
                reached[w] = 1;
                q.push(w);
            }
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!reached[v]) return fail("support disconnected");
    return true;
}

// Definition-based Eulerian-cover check, independent of cover_is_valid in
// eulerian_cover.hpp: recomputes coverage and connectivity from scratch and
// ignores the comp_of index except for consistency.
inline bool verify_cover(const Graph& g, const EulerianCover& cover, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> owner(g.num_vertices(), -1);
    for (int ci = 0; ci < cover.size(); ++ci)
        for (VertexId v : cover.comps[ci].verts) {
            if (v < 0 || v >= g.num_vertices()) return fail("vertex out of range");
            if (owner[v] != -1) return fail("vertex in two components");
            owner[v] = ci;
        }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (owner[v] == -1) return fail("vertex in no component");
    if (static_cast<int>(cover.comp_of.size()) == g.num_vertices()) {
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (cover.comp_of[v] != owner[v]) return fail("comp_of disagrees with vertex sets");
    } else {
        return fail("comp_of wrong size");
    }

    for (int ci = 0; ci < cover.size(); ++ci) {
        const auto& c = cover.comps[ci];
        std::vector<int> deg(g.num_vertices(), 0);
        std::vector<std::vector<std::pair<VertexId, VertexId>>> dummy;
        for (auto [e, m] : c.edges) {
            if (e < 0 || e >= g.num_edges()) return fail("edge out of range");
            if (m < 1 || m > 2) return fail("bad multiplicity");
            auto [u, v] = g.edge(e);
            if (owner[u] != ci || owner[v] != ci) return fail("edge endpoint outside component");
            deg[u] += m;
            deg[v] += m;
        }
        for (VertexId v : c.verts)
            if (deg[v] == 0 || deg[v] % 2) return fail("component degree not positive even");
        // Connectivity of the support via BFS restricted to this component.
        std::vector<char> present(g.num_edges(), 0);
        for (auto [e, m] : c.edges) present[e] = 1;
        std::vector<char> reached(g.num_vertices(), 0);
        std::queue<VertexId> q;
        reached[c.verts[0]] = 1;
        q.push(c.verts[0]);
        int seen = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (!present[e]) continue;
                VertexId w = g.other_end(e, v);
                if (!reached[w]) {
                    reached[w] = 1;
                    ++seen;
                    q.push(w);
                }
            }
        }
        if (seen != c.vertex_count()) return fail("component support disconnected");
    }
    return true;
}

// Exhaustive Hamiltonian cycle search (edge-distinct DFS, so the 2-vertex
// multigraph case works). Every 2-connected cubic graph on fewer than 10
// vertices has one; callers treat nullopt on such inputs as a hard error.
inline std::optional<Tour> hamiltonian_cycle(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return std::nullopt;
    if (n == 1) return empty_tour(g);
    std::vector<char> visited(n, 0);
    std::vector<EdgeId> path;
    visited[0] = 1;

    std::optional<Tour> result;
    auto dfs = [&](auto&& self, VertexId v, int count) -> bool {
        if (count == n) {
            for (EdgeId e : g.incident(v))
                if (g.other_end(e, v) == 0 && (path.empty() || e != path.back() || n == 1)) {
                    // Closing edge must be distinct from the path's edges.
                    bool used = false;
                    for (EdgeId pe : path)
                        if (pe == e) used = true;
                    if (used) continue;
                    path.push_back(e);
                    result = tour_from_edges(g, path);
                    path.pop_back();
                    return true;
                }
            return false;
        }
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(e);
            if (self(self, w, count + 1)) return true;
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    };
    dfs(dfs, 0, 1);
    return result;
}

// Independent 3-cut finder: union-find over the surviving edges instead of
// the BFS labelling the production enumerator uses.
inline std::vector<std::array<EdgeId, 3>> three_cut_oracle(const Graph& g) {
    std::vector<std::array<EdgeId, 3>> cuts;
    const int m = g.num_edges();
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            for (EdgeId c = b + 1; c < m; ++c) {
                detail::Dsu dsu(g.num_vertices());
                for (EdgeId e = 0; e < m; ++e) {
                    if (e == a || e == b || e == c) continue;
                    dsu.unite(g.edge(e).first, g.edge(e).second);
                }
                int roots = 0;
                for (VertexId v = 0; v < g.num_vertices(); ++v)
                    if (dsu.find(v) == v) ++roots;
                if (roots != 2) continue;
                bool crossing = true;
                for (EdgeId e : {a, b, c})
                    if (dsu.find(g.edge(e).first) == dsu.find(g.edge(e).second)) crossing = false;
                if (crossing) cuts.push_back({a, b, c});
            }
    return cuts;
}

} // namespace ctsp::oracle
