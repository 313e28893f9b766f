#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

// Simple cycle as a closed walk: verts[i] -- edges[i] -- verts[i+1 mod len].
// Canonical form: verts[0] is the smallest vertex, edges[0] < edges[len-1].
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> verts;

    int length() const { return static_cast<int>(edges.size()); }
};

// Decompose a 2-regular edge set into its cycles. Every vertex touched by
// the set must have exactly two selected incident edges. Deterministic:
// cycles are emitted by ascending start vertex, walked along the smaller
// incident edge id first.
inline std::vector<Cycle> cycles_from_edge_set(const Graph& g, const std::vector<char>& in_set) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (in_set[e]) {
            deg[g.edge(e).first]++;
            deg[g.edge(e).second]++;
        }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (deg[v] != 0 && deg[v] != 2)
            throw std::invalid_argument("cycles_from_edge_set: edge set is not 2-regular");

    std::vector<char> used(g.num_edges(), 0);
    std::vector<Cycle> out;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (deg[s] != 2) continue;
        bool fresh = true;
        for (EdgeId e : g.incident(s))
            if (in_set[e] && used[e]) fresh = false;
        if (!fresh) continue;
        Cycle c;
        VertexId v = s;
        while (true) {
            EdgeId next = -1;
            for (EdgeId e : g.incident(v))
                if (in_set[e] && !used[e]) {
                    next = e;
                    break;
                }
            if (next == -1) break;
            used[next] = 1;
            c.verts.push_back(v);
            c.edges.push_back(next);
            v = g.other_end(next, v);
        }
        if (v != s) throw std::invalid_argument("cycles_from_edge_set: open walk");
        out.push_back(std::move(c));
    }
    return out;
}

// All simple cycles with min_len <= length <= max_len, in canonical form,
// sorted by (length, sorted edge ids). Parallel edges yield distinct cycles.
// Intended for the short cycles the cover and reduction passes scan (<= 6),
// so the DFS depth is tiny.
inline std::vector<Cycle> enumerate_simple_cycles(const Graph& g, int max_len, int min_len = 3) {
    std::vector<Cycle> found;
    std::vector<VertexId> path_verts;
    std::vector<EdgeId> path_edges;
    std::vector<char> on_path(g.num_vertices(), 0);

    for (VertexId root = 0; root < g.num_vertices(); ++root) {
        path_verts.assign(1, root);
        path_edges.clear();
        on_path[root] = 1;

        // Explicit stack of (vertex, next incident index to try).
        std::vector<std::pair<VertexId, size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& inc = g.incident(v);
            if (idx >= inc.size()) {
                stack.pop_back();
                if (!path_edges.empty()) {
                    on_path[path_verts.back()] = 0;
                    path_verts.pop_back();
                    path_edges.pop_back();
                }
                continue;
            }
            EdgeId e = inc[idx++];
            if (!path_edges.empty() && e == path_edges.back()) continue;
            VertexId w = g.other_end(e, v);
            int k = static_cast<int>(path_edges.size());
            if (w == root && k >= 1) {
                if (k + 1 >= min_len && k + 1 <= max_len && path_edges.front() < e) {
                    Cycle c;
                    c.verts = path_verts;
                    c.edges = path_edges;
                    c.edges.push_back(e);
                    found.push_back(std::move(c));
                }
                continue;
            }
            if (w <= root || on_path[w]) continue;
            if (k + 1 > max_len - 1) continue;
            on_path[w] = 1;
            path_verts.push_back(w);
            path_edges.push_back(e);
            stack.push_back({w, 0});
        }
        on_path[root] = 0;
    }

    std::stable_sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        std::vector<EdgeId> ea = a.edges, eb = b.edges;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea < eb;
    });
    return found;
}

// Edges with both endpoints on the cycle that are not cycle edges.
inline std::vector<EdgeId> chords_of_cycle(const Graph& g, const Cycle& c) {
    std::vector<char> on_cycle_v(g.num_vertices(), 0), cycle_e(g.num_edges(), 0);
    for (VertexId v : c.verts) on_cycle_v[v] = 1;
    for (EdgeId e : c.edges) cycle_e[e] = 1;
    std::vector<EdgeId> chords;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (cycle_e[e]) continue;
        auto [u, v] = g.edge(e);
        if (on_cycle_v[u] && on_cycle_v[v]) chords.push_back(e);
    }
    return chords;
}

// Disjoint-cycle cover of all vertices (the object the face-alternation
// tour search works on).
struct CycleCover {
    std::vector<Cycle> cycles;

    int total_edges() const {
        int s = 0;
        for (const auto& c : cycles) s += c.length();
        return s;
    }
};

inline std::vector<char> cover_edge_flags(const Graph& g, const CycleCover& cover) {
    std::vector<char> flags(g.num_edges(), 0);
    for (const auto& c : cover.cycles)
        for (EdgeId e : c.edges) {
            if (flags[e]) throw std::invalid_argument("cycle cover: repeated edge");
            flags[e] = 1;
        }
    return flags;
}

inline bool cycle_cover_is_valid(const Graph& g, const CycleCover& cover, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> deg(g.num_vertices(), 0);
    std::vector<char> seen_e(g.num_edges(), 0);
    for (const auto& c : cover.cycles) {
        if (c.edges.size() != c.verts.size() || c.edges.size() < 2)
            return fail("cycle cover: malformed cycle");
        for (size_t i = 0; i < c.edges.size(); ++i) {
            EdgeId e = c.edges[i];
            if (seen_e[e]) return fail("cycle cover: edge reused");
            seen_e[e] = 1;
            VertexId a = c.verts[i], b = c.verts[(i + 1) % c.verts.size()];
            auto [u, v] = g.edge(e);
            if (!((a == u && b == v) || (a == v && b == u)))
                return fail("cycle cover: walk does not follow edges");
            deg[a]++;
            deg[b]++;
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (deg[v] != 2) return fail("cycle cover: vertex " + std::to_string(v) + " not covered exactly twice");
    return true;
}

} // namespace ctsp
