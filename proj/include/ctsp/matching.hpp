#pragma once

#include <array>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

// All perfect matchings, each a sorted edge id list. Backtracking on the
// lowest unmatched vertex, branching over its incident edges in ascending
// order, so the output order is deterministic (lexicographic).
inline std::vector<std::vector<EdgeId>> enumerate_perfect_matchings(const Graph& g) {
    std::vector<std::vector<EdgeId>> out;
    if (g.num_vertices() % 2) return out;
    std::vector<char> matched(g.num_vertices(), 0);
    std::vector<EdgeId> current;

    auto rec = [&](auto&& self, VertexId from) -> void {
        VertexId v = from;
        while (v < g.num_vertices() && matched[v]) ++v;
        if (v == g.num_vertices()) {
            out.push_back(current);
            return;
        }
        matched[v] = 1;
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (matched[w]) continue;
            matched[w] = 1;
            current.push_back(e);
            self(self, v + 1);
            current.pop_back();
            matched[w] = 0;
        }
        matched[v] = 0;
    };
    rec(rec, 0);
    return out;
}

// A matching is 3-cut perfect when it intersects every 3-edge cut in exactly
// one edge. (Every perfect matching of a cubic graph meets a 3-cut in an odd
// number of edges, so the filter rejects exactly the matchings containing a
// whole cut.)
inline bool is_three_cut_perfect(const Graph& g, const std::vector<EdgeId>& matching,
                                 const std::vector<EdgeCut>& cuts) {
    std::vector<char> in_m(g.num_edges(), 0);
    for (EdgeId e : matching) in_m[e] = 1;
    for (const auto& cut : cuts) {
        int hits = in_m[cut.cut[0]] + in_m[cut.cut[1]] + in_m[cut.cut[2]];
        if (hits != 1) return false;
    }
    return true;
}

inline std::vector<std::vector<EdgeId>> three_cut_perfect_matchings(const Graph& g) {
    auto cuts = enumerate_three_cuts(g);
    std::vector<std::vector<EdgeId>> keep;
    for (auto& m : enumerate_perfect_matchings(g))
        if (is_three_cut_perfect(g, m, cuts)) keep.push_back(std::move(m));
    return keep;
}

} // namespace ctsp
