#pragma once

// Simplification phase: repeatedly locate a 6-cycle carrying one or two
// chords, replace the surrounding structure by a smaller gadget (chorded
// 4-cycle, triangle, or single edge), and later lift tours of the shrunken
// graph back through the replacements. Each rewrite keeps the graph cubic
// and 2-connected and strictly decreases the vertex count.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/cycles.hpp"
#include "ctsp/graph.hpp"

namespace ctsp {

enum class ReductionKind {
    TwoChords,    // 6-cycle with two chords: replace its 6 vertices by a chorded 4-cycle
    OneChord2W,   // one chord, two outside attachment vertices: replace all 8 by a chorded 4-cycle
    OneChord3W,   // one chord, three outside attachments: replace cycle + doubly-attached vertex by a triangle
    OneChord4W,   // one chord, four outside attachments: replace the 6 cycle vertices by one edge
};

inline const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::TwoChords: return "two-chords";
        case ReductionKind::OneChord2W: return "one-chord-2w";
        case ReductionKind::OneChord3W: return "one-chord-3w";
        case ReductionKind::OneChord4W: return "one-chord-4w";
    }
    return "?";
}

// Worst-case tour length increase when undoing one rewrite.
inline int lift_budget(ReductionKind k) {
    switch (k) {
        case ReductionKind::TwoChords: return 2;
        case ReductionKind::OneChord2W: return 4;
        case ReductionKind::OneChord3W: return 5;
        // A tour crossing the replacement edge once may enter and leave the
        // removed 6-cycle at attachments with no spanning path between them,
        // forcing a doubled edge on top of the ideal splice.
        case ReductionKind::OneChord4W: return 5;
    }
    return 0;
}

struct ChordedSixCycle {
    Cycle cycle;
    std::vector<EdgeId> chords;
    ReductionKind kind;
    // External edges of the unchorded cycle vertices, in cycle order, with
    // their outside endpoints. Two entries for TwoChords, four otherwise.
    std::vector<std::pair<EdgeId, VertexId>> boundary;
    std::vector<VertexId> u_verts;  // full vertex set the rewrite removes, sorted
};

// Classify one 6-cycle, or nullopt if no rewrite applies to it (chordless,
// three chords meaning the cycle saturates a 6-vertex graph, or the removed
// set would swallow the whole graph).
inline std::optional<ChordedSixCycle> classify_six_cycle(const Graph& g, const Cycle& c) {
    std::vector<EdgeId> chords = chords_of_cycle(g, c);
    if (chords.empty() || chords.size() > 2) return std::nullopt;

    std::vector<char> in_c(g.num_vertices(), 0), used(g.num_edges(), 0);
    for (VertexId v : c.verts) in_c[v] = 1;
    for (EdgeId e : c.edges) used[e] = 1;
    std::vector<char> tied(g.num_vertices(), 0);
    for (EdgeId e : chords) {
        used[e] = 1;
        auto [u, v] = g.edge(e);
        tied[u] = tied[v] = 1;
    }

    // External edge of every cycle vertex not on a chord, in cycle order.
    std::vector<std::pair<EdgeId, VertexId>> boundary;
    for (VertexId v : c.verts) {
        if (tied[v]) continue;
        for (EdgeId e : g.incident(v)) {
            if (used[e]) continue;
            VertexId w = g.other_end(e, v);
            if (in_c[w]) return std::nullopt;  // stray chord; structure not as assumed
            boundary.push_back({e, w});
        }
    }

    ChordedSixCycle occ{c, std::move(chords), ReductionKind::TwoChords, std::move(boundary), c.verts};
    std::sort(occ.u_verts.begin(), occ.u_verts.end());

    if (occ.chords.size() == 2) {
        if (occ.boundary.size() != 2) return std::nullopt;
        occ.kind = ReductionKind::TwoChords;
    } else {
        if (occ.boundary.size() != 4) return std::nullopt;
        std::vector<VertexId> ws;
        for (auto& [e, w] : occ.boundary) ws.push_back(w);
        std::sort(ws.begin(), ws.end());
        std::vector<VertexId> uniq = ws;
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        int distinct = int(uniq.size());
        if (distinct == 4) {
            occ.kind = ReductionKind::OneChord4W;
        } else if (distinct == 3) {
            occ.kind = ReductionKind::OneChord3W;
            // The one attachment vertex adjacent to two cycle vertices joins the removed set.
            for (int i = 0; i + 1 < 4; ++i) if (ws[i] == ws[i + 1]) occ.u_verts.push_back(ws[i]);
        } else if (distinct == 2) {
            // In a 2-connected graph the split is always two edges per vertex.
            if (ws[0] != ws[1] || ws[2] != ws[3]) return std::nullopt;
            occ.kind = ReductionKind::OneChord2W;
            occ.u_verts.push_back(ws[0]);
            occ.u_verts.push_back(ws[2]);
        } else {
            return std::nullopt;
        }
        std::sort(occ.u_verts.begin(), occ.u_verts.end());
    }
    // A rewrite must leave something outside to reattach to.
    if (int(occ.u_verts.size()) >= g.num_vertices()) return std::nullopt;
    return occ;
}

// Deterministic scan: prefer two-chord structures, then one-chord ones,
// lexicographically smallest cycle first.
inline std::optional<ChordedSixCycle> find_chorded_six_cycle(const Graph& g) {
    std::optional<ChordedSixCycle> two, one;
    for (const Cycle& c : enumerate_simple_cycles(g, 6, 6)) {
        auto occ = classify_six_cycle(g, c);
        if (!occ) continue;
        auto& slot = occ->kind == ReductionKind::TwoChords ? two : one;
        if (!slot || std::tie(occ->cycle.verts, occ->cycle.edges) <
                         std::tie(slot->cycle.verts, slot->cycle.edges))
            slot = std::move(occ);
    }
    return two ? two : one;
}

inline bool is_reduced(const Graph& g) { return !find_chorded_six_cycle(g).has_value(); }

struct BoundaryLink {
    EdgeId pre_edge;        // cut edge in the original graph
    VertexId pre_inner;     // its endpoint inside the removed set
    EdgeId post_edge;       // replacement edge in the reduced graph
    VertexId post_inner;    // its endpoint on the gadget
};

struct ReductionRecord {
    ReductionKind kind;
    Graph pre;
    Graph post;
    std::vector<VertexId> u_verts;       // removed vertices (pre ids)
    std::vector<VertexId> gadget_verts;  // inserted vertices (post ids)
    std::vector<VertexId> old_of_new;    // post vertex -> pre vertex, -1 on the gadget
    std::vector<EdgeId> pre_of_post;     // post edge -> pre edge, -1 on gadget internals
    std::vector<BoundaryLink> boundary;  // sorted by pre_edge
    // OneChord4W only: outside vertices wired to each endpoint of the new edge.
    std::array<std::array<VertexId, 2>, 2> pairing{{{-1, -1}, {-1, -1}}};
};

namespace detail {

struct GadgetPlan {
    int verts;                                    // gadget vertex count
    std::vector<std::pair<int, int>> internal;    // gadget-local edges
    std::vector<int> attach;                      // gadget-local target per cut edge
};

// Assemble the reduced graph: keep everything outside u_verts, append the
// gadget, rewire each cut edge to its planned gadget vertex.
inline ReductionRecord build_rewrite(const Graph& g, const ChordedSixCycle& occ,
                                     const GadgetPlan& plan,
                                     const std::vector<std::array<VertexId, 3>>& cut) {
    std::vector<char> in_u(g.num_vertices(), 0);
    for (VertexId v : occ.u_verts) in_u[v] = 1;

    std::vector<VertexId> new_of_old(g.num_vertices(), -1);
    std::vector<VertexId> old_of_new;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!in_u[v]) {
            new_of_old[v] = VertexId(old_of_new.size());
            old_of_new.push_back(v);
        }
    int base = int(old_of_new.size());
    for (int i = 0; i < plan.verts; ++i) old_of_new.push_back(-1);

    std::vector<std::pair<VertexId, VertexId>> inputs;
    std::vector<EdgeId> came_from;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_u[u] || in_u[v]) continue;
        inputs.push_back({new_of_old[u], new_of_old[v]});
        came_from.push_back(e);
    }
    for (auto [a, b] : plan.internal) {
        inputs.push_back({VertexId(base + a), VertexId(base + b)});
        came_from.push_back(-1);
    }
    std::vector<int> cut_input(cut.size());
    for (size_t i = 0; i < cut.size(); ++i) {
        cut_input[i] = int(inputs.size());
        inputs.push_back({new_of_old[cut[i][2]], VertexId(base + plan.attach[i])});
        came_from.push_back(cut[i][0]);
    }

    std::vector<EdgeId> input_to_id;
    Graph post(base + plan.verts, inputs, &input_to_id);

    ReductionRecord rec{occ.kind, g, post, occ.u_verts, {}, std::move(old_of_new),
                        std::vector<EdgeId>(post.num_edges(), -1), {}};
    for (int i = 0; i < plan.verts; ++i) rec.gadget_verts.push_back(VertexId(base + i));
    for (size_t i = 0; i < inputs.size(); ++i)
        if (came_from[i] >= 0) rec.pre_of_post[input_to_id[i]] = came_from[i];
    for (size_t i = 0; i < cut.size(); ++i)
        rec.boundary.push_back({cut[i][0], cut[i][1], input_to_id[cut_input[i]],
                                VertexId(base + plan.attach[i])});
    return rec;
}

} // namespace detail

inline ReductionRecord apply_reduction(const Graph& g, const ChordedSixCycle& occ) {
    std::vector<char> in_u(g.num_vertices(), 0);
    for (VertexId v : occ.u_verts) in_u[v] = 1;

    // Cut edges in ascending id order, each with inner and outer endpoint.
    std::vector<std::array<VertexId, 3>> cut;  // {edge, inner, outer}
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_u[u] == in_u[v]) continue;
        cut.push_back({e, in_u[u] ? u : v, in_u[u] ? v : u});
    }
    int want = occ.kind == ReductionKind::OneChord3W   ? 3
               : occ.kind == ReductionKind::OneChord4W ? 4
                                                       : 2;
    if (int(cut.size()) != want)
        throw std::logic_error("apply_reduction: unexpected cut size");

    detail::GadgetPlan plan;
    if (occ.kind == ReductionKind::TwoChords || occ.kind == ReductionKind::OneChord2W) {
        // Chorded 4-cycle; the two degree-2 corners take the cut edges.
        plan = {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}, {0, 2}};
    } else if (occ.kind == ReductionKind::OneChord3W) {
        plan = {3, {{0, 1}, {0, 2}, {1, 2}}, {0, 1, 2}};
    } else {
        // Single edge; wire consecutive outside vertices (in cycle order) to a
        // common endpoint, trying both splits so the new edge sits on a cycle.
        std::vector<int> pos_of_cut(cut.size());
        for (size_t i = 0; i < cut.size(); ++i)
            for (size_t j = 0; j < occ.boundary.size(); ++j)
                if (occ.boundary[j].first == cut[i][0]) pos_of_cut[i] = int(j);
        for (int variant = 0; variant < 2; ++variant) {
            plan = {2, {{0, 1}}, {}};
            for (size_t i = 0; i < cut.size(); ++i) {
                int j = pos_of_cut[i];
                bool first = variant == 0 ? (j <= 1) : (j == 0 || j == 3);
                plan.attach.push_back(first ? 0 : 1);
            }
            ReductionRecord rec = detail::build_rewrite(g, occ, plan, cut);
            if (!is_two_connected_cubic(rec.post)) continue;
            for (size_t i = 0; i < cut.size(); ++i)
                rec.pairing[plan.attach[i]][rec.pairing[plan.attach[i]][0] < 0 ? 0 : 1] =
                    cut[i][2];
            for (auto& side : rec.pairing) std::sort(side.begin(), side.end());
            return rec;
        }
        throw std::logic_error("apply_reduction: both edge pairings break 2-connectivity");
    }

    ReductionRecord rec = detail::build_rewrite(g, occ, plan, cut);
    if (!is_two_connected_cubic(rec.post))
        throw std::logic_error("apply_reduction: rewrite broke 2-connectivity");
    return rec;
}

struct ReductionTrace {
    Graph reduced;
    std::vector<ReductionRecord> steps;
};

inline ReductionTrace reduce_fully(const Graph& g) {
    if (!is_two_connected_cubic(g))
        throw std::invalid_argument("reduce_fully: input must be 2-connected cubic");
    ReductionTrace tr{g, {}};
    while (auto occ = find_chorded_six_cycle(tr.reduced)) {
        ReductionRecord rec = apply_reduction(tr.reduced, *occ);
        if (rec.post.num_vertices() >= tr.reduced.num_vertices())
            throw std::logic_error("reduce_fully: rewrite failed to shrink the graph");
        tr.reduced = rec.post;
        tr.steps.push_back(std::move(rec));
    }
    return tr;
}

// Undo one rewrite: keep the tour outside the gadget, translate boundary
// multiplicities across, and search the removed region for the cheapest
// completion that yields a valid tour. Doubled boundary edges may be dropped
// in pairs when that helps. The search always finds a completion within the
// per-kind budget; exceeding it means the record or tour is corrupt.
inline Tour lift_tour(const ReductionRecord& rec, const Tour& post_tour) {
    std::string why;
    if (!tour_is_valid(rec.post, post_tour, &why))
        throw std::invalid_argument("lift_tour: invalid tour on reduced graph: " + why);
    const Graph& g = rec.pre;

    std::vector<int> base(g.num_edges(), 0);
    for (EdgeId e = 0; e < rec.post.num_edges(); ++e)
        if (rec.pre_of_post[e] >= 0) base[rec.pre_of_post[e]] = post_tour.mult[e];

    int crossing = 0;
    for (const auto& link : rec.boundary) crossing += base[link.pre_edge];
    if (crossing % 2 != 0) throw std::invalid_argument("lift_tour: odd flow across boundary");

    std::vector<char> in_u(g.num_vertices(), 0);
    for (VertexId v : rec.u_verts) in_u[v] = 1;
    std::vector<EdgeId> region;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_u[u] && in_u[v]) region.push_back(e);
    }
    std::vector<EdgeId> doubled;
    for (const auto& link : rec.boundary)
        if (base[link.pre_edge] == 2) doubled.push_back(link.pre_edge);

    // Degree parity demanded of the region at each removed vertex.
    auto region_parity = [&](const std::vector<int>& mult) {
        std::vector<int> par(g.num_vertices(), 0);
        for (const auto& link : rec.boundary)
            par[link.pre_inner] ^= mult[link.pre_edge] & 1;
        return par;
    };

    std::optional<Tour> best;
    Tour cand = empty_tour(g);
    for (unsigned mask = 0; mask < (1u << doubled.size()); ++mask) {
        std::vector<int> b2 = base;
        for (size_t i = 0; i < doubled.size(); ++i)
            if (mask >> i & 1) b2[doubled[i]] = 0;
        std::vector<int> want = region_parity(b2);

        std::vector<int> assign(region.size(), 0);
        while (true) {
            // Cheap parity filter before the full validity check.
            std::vector<int> par(want);
            for (size_t i = 0; i < region.size(); ++i)
                if (assign[i] & 1) {
                    auto [u, v] = g.edge(region[i]);
                    par[u] ^= 1;
                    par[v] ^= 1;
                }
            bool even = true;
            for (VertexId v : rec.u_verts) even = even && par[v] == 0;
            if (even) {
                cand.mult = b2;
                for (size_t i = 0; i < region.size(); ++i) cand.mult[region[i]] = assign[i];
                if ((!best || cand.length() < best->length()) && tour_is_valid(g, cand))
                    best = cand;
            }
            size_t i = 0;
            while (i < assign.size() && assign[i] == 2) assign[i++] = 0;
            if (i == assign.size()) break;
            ++assign[i];
        }
    }
    if (!best) throw std::logic_error("lift_tour: no completion exists");
    if (best->length() > post_tour.length() + lift_budget(rec.kind))
        throw std::logic_error("lift_tour: completion exceeds the budget");
    return *best;
}

// Undo a whole reduction run, newest rewrite first.
inline Tour lift_through(const ReductionTrace& trace, Tour t) {
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) t = lift_tour(*it, t);
    return t;
}

} // namespace ctsp
