#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ctsp/cycles.hpp"
#include "ctsp/decompose.hpp"
#include "ctsp/eulerian_cover.hpp"
#include "ctsp/graph.hpp"

namespace ctsp {

namespace detail {

inline std::vector<VertexId> sorted_union(const std::vector<VertexId>& a,
                                          const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Swap in `merged` for the components listed in `dead` (sorted ascending).
// The merged component goes last; comp_of is rebuilt.
inline void replace_components(EulerianCover& cover, const std::vector<int>& dead,
                               CoverComponent merged) {
    std::vector<CoverComponent> next;
    next.reserve(cover.comps.size() - dead.size() + 1);
    for (int i = 0; i < cover.size(); ++i)
        if (!std::binary_search(dead.begin(), dead.end(), i))
            next.push_back(std::move(cover.comps[i]));
    next.push_back(std::move(merged));
    cover.comps = std::move(next);
    for (int ci = 0; ci < cover.size(); ++ci)
        for (VertexId v : cover.comps[ci].verts) cover.comp_of[v] = ci;
}

inline bool component_is_plain_cycle(const CoverComponent& c) {
    if (c.edge_count() != c.vertex_count()) return false;
    for (auto& [e, m] : c.edges)
        if (m != 1) return false;
    return true;
}

// Distinct component ids of the cycle's vertices, ascending.
inline std::vector<int> components_met(const EulerianCover& cover, const Cycle& gamma) {
    std::vector<int> ids;
    for (VertexId v : gamma.verts) ids.push_back(cover.comp_of[v]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// Symmetric difference of plain-cycle components with gamma; succeeds only
// when the result is a single simple cycle covering exactly the union of the
// component vertex sets, which is the configuration the merge is defined on.
inline std::optional<Cycle> symmdiff_single_cycle(const Graph& g, const EulerianCover& cover,
                                                  const std::vector<int>& ids,
                                                  const Cycle& gamma) {
    std::vector<char> flags(g.num_edges(), 0);
    std::vector<VertexId> span;
    for (int id : ids) {
        const auto& comp = cover.comps[id];
        if (!component_is_plain_cycle(comp)) return std::nullopt;
        for (auto& [e, m] : comp.edges) flags[e] = 1;
        span = sorted_union(span, comp.verts);
    }
    for (EdgeId e : gamma.edges) flags[e] ^= 1;

    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (flags[e]) {
            deg[g.edge(e).first]++;
            deg[g.edge(e).second]++;
        }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        bool in_span = std::binary_search(span.begin(), span.end(), v);
        if (deg[v] != (in_span ? 2 : 0)) return std::nullopt;
    }
    auto cycles = cycles_from_edge_set(g, flags);
    if (cycles.size() != 1) return std::nullopt;
    return cycles[0];
}

inline CoverComponent cycle_component(const Cycle& c, ComponentKind kind) {
    CoverComponent comp;
    comp.verts = c.verts;
    std::sort(comp.verts.begin(), comp.verts.end());
    std::vector<EdgeId> es = c.edges;
    std::sort(es.begin(), es.end());
    for (EdgeId e : es) comp.edges.emplace_back(e, 1);
    comp.kind = kind;
    return comp;
}

// Support over `span` must stay connected, with every span vertex still on
// some edge. Degrees stay even by construction, so this is the whole
// Eulerian-component invariant.
inline bool spans_connected(const Graph& g, const std::vector<int>& mult,
                            const std::vector<VertexId>& span) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (mult[e] > 0) {
            deg[g.edge(e).first]++;
            deg[g.edge(e).second]++;
        }
    for (VertexId v : span)
        if (deg[v] == 0) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<VertexId> stack{span[0]};
    seen[span[0]] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            if (mult[e] == 0) continue;
            VertexId w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == span.size();
}

// Drop both copies of the lowest-id doubled edge whose removal keeps the
// structure connected over `span`. A valid choice always exists when the
// two pieces share at least two vertices.
inline bool remove_doubled_pair(const Graph& g, std::vector<int>& mult,
                                const std::vector<VertexId>& span) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (mult[e] < 2) continue;
        mult[e] -= 2;
        if (spans_connected(g, mult, span)) return true;
        mult[e] += 2;
    }
    return false;
}

} // namespace detail

// Operation driven by a 6-cycle of G: three disjoint cycle components whose
// symmetric difference with the 6-cycle is one simple cycle on the union of
// their vertex sets get merged into that cycle.
inline bool try_six_cycle_merge(const Graph& g, EulerianCover& cover, const Cycle& gamma) {
    auto ids = detail::components_met(cover, gamma);
    if (ids.size() != 3) return false;
    auto merged = detail::symmdiff_single_cycle(g, cover, ids, gamma);
    if (!merged) return false;
    detail::replace_components(cover, ids,
                               detail::cycle_component(*merged, ComponentKind::HexMerge));
    return true;
}

// Same with a 4-cycle and two components.
inline bool try_four_cycle_merge(const Graph& g, EulerianCover& cover, const Cycle& gamma) {
    auto ids = detail::components_met(cover, gamma);
    if (ids.size() != 2) return false;
    auto merged = detail::symmdiff_single_cycle(g, cover, ids, gamma);
    if (!merged) return false;
    detail::replace_components(cover, ids,
                               detail::cycle_component(*merged, ComponentKind::QuadMerge));
    return true;
}

// Operation driven by a 5-cycle of G meeting exactly two components, both
// with at least 5 vertices; the cycle splits 2/3 across them. The component
// holding 2 of its vertices is merged with the 5-cycle and then with the
// other component, removing a doubled pair each time, then multiplicities
// above 2 are trimmed in steps of 2. Net edge growth is at most 1.
inline bool try_five_cycle_merge(const Graph& g, EulerianCover& cover, const Cycle& gamma) {
    auto ids = detail::components_met(cover, gamma);
    if (ids.size() != 2) return false;
    int in_first = 0;
    for (VertexId v : gamma.verts)
        if (cover.comp_of[v] == ids[0]) ++in_first;
    if (in_first != 2 && in_first != 3) return false;
    int small_id = in_first == 2 ? ids[0] : ids[1];
    int big_id = in_first == 2 ? ids[1] : ids[0];
    const CoverComponent& small = cover.comps[small_id];
    const CoverComponent& big = cover.comps[big_id];
    if (small.vertex_count() < 5 || big.vertex_count() < 5) return false;

    std::vector<int> mult(g.num_edges(), 0);
    for (auto& [e, m] : small.edges) mult[e] += m;
    for (EdgeId e : gamma.edges) mult[e] += 1;
    std::vector<VertexId> gverts = gamma.verts;
    std::sort(gverts.begin(), gverts.end());
    auto span1 = detail::sorted_union(small.verts, gverts);
    if (!detail::remove_doubled_pair(g, mult, span1))
        throw std::logic_error("five-cycle merge: no removable pair in first step");

    for (auto& [e, m] : big.edges) mult[e] += m;
    auto span = detail::sorted_union(small.verts, big.verts);
    if (!detail::remove_doubled_pair(g, mult, span))
        throw std::logic_error("five-cycle merge: no removable pair in second step");

    for (EdgeId e = 0; e < g.num_edges(); ++e)
        while (mult[e] > 2) mult[e] -= 2;

    CoverComponent merged;
    merged.verts = span;
    int total = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (mult[e]) {
            merged.edges.emplace_back(e, mult[e]);
            total += mult[e];
        }
    if (total > small.edge_count() + big.edge_count() + 1)
        throw std::logic_error("five-cycle merge: edge accounting exceeded the budget");
    merged.kind = ComponentKind::PentMerge;
    merged.merges = small.merges + big.merges + 1;
    detail::replace_components(cover, {std::min(small_id, big_id), std::max(small_id, big_id)},
                               std::move(merged));
    return true;
}

// The short cycles of G the merge operations scan, computed once per graph.
struct MergeCandidates {
    std::vector<Cycle> quads, pents, hexes;
};

inline MergeCandidates merge_candidates(const Graph& g) {
    return {enumerate_simple_cycles(g, 4, 4), enumerate_simple_cycles(g, 5, 5),
            enumerate_simple_cycles(g, 6, 6)};
}

namespace detail {

template <typename TryOp>
inline void run_to_fixpoint(const Graph& g, EulerianCover& cover,
                            const std::vector<Cycle>& candidates, TryOp op) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Cycle& c : candidates)
            if (op(g, cover, c)) {
                changed = true;
                break;  // component ids moved; rescan from the top
            }
    }
}

} // namespace detail

// Contract the components, connect them by an ascending-id spanning tree
// taken twice, and lay the cover edges on top. Length is the cover's edge
// total plus twice (#components - 1).
inline Tour tour_from_cover(const Graph& g, const EulerianCover& cover) {
    Tour t = empty_tour(g);
    for (const auto& comp : cover.comps)
        for (auto& [e, m] : comp.edges) t.mult[e] += m;
    if (cover.size() > 1) {
        std::vector<std::vector<VertexId>> parts;
        for (const auto& comp : cover.comps) parts.push_back(comp.verts);
        auto con = contract_parts(g, parts);
        for (EdgeId qe : spanning_tree(con.quotient)) t.mult[con.edge_origin[qe]] += 2;
    }
    return t;
}

// The full per-matching history: one row per matching of the distribution,
// with the cover as first built and after each merge stage. The audits in
// contributions.hpp read the stages; the solver only needs `tours`/`best`.
struct CoverFamily {
    MatchingDistribution dist;
    std::vector<EulerianCover> initial, after_u1, after_u2, finals;
    std::vector<Tour> tours;
    int best = -1;

    const Tour& best_tour() const { return tours.at(best); }
};

inline CoverFamily build_cover_family(const Graph& g, MatchingDistribution d) {
    CoverFamily fam;
    fam.dist = std::move(d);
    MergeCandidates cand = merge_candidates(g);
    for (const auto& matching : fam.dist.matchings) {
        std::vector<char> rest(g.num_edges(), 1);
        for (EdgeId e : matching) rest[e] = 0;
        EulerianCover cover = cover_from_cycles(g, cycles_from_edge_set(g, rest));
        fam.initial.push_back(cover);
        detail::run_to_fixpoint(g, cover, cand.hexes, try_six_cycle_merge);
        fam.after_u1.push_back(cover);
        detail::run_to_fixpoint(g, cover, cand.quads, try_four_cycle_merge);
        fam.after_u2.push_back(cover);
        detail::run_to_fixpoint(g, cover, cand.pents, try_five_cycle_merge);
        fam.finals.push_back(cover);
        fam.tours.push_back(tour_from_cover(g, cover));
    }
    for (int i = 0; i < static_cast<int>(fam.tours.size()); ++i)
        if (fam.best == -1 || fam.tours[i].length() < fam.tours[fam.best].length())
            fam.best = i;
    return fam;
}

inline CoverFamily build_cover_family(const Graph& g) {
    return build_cover_family(g, decompose_three_cut_matchings(g));
}

inline Tour best_cover_tour(const Graph& g) {
    return build_cover_family(g).best_tour();
}

} // namespace ctsp
