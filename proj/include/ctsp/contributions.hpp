#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ctsp/cover.hpp"
#include "ctsp/cycles.hpp"
#include "ctsp/rational.hpp"

namespace ctsp {

// Per-vertex accounting of the cover family. z[v] is the exact average of
// (edges+2)/vertices over v's components, weighted by the matching weights;
// summed over a cover it equals that cover's tour length plus 2, so the
// minimum tour length is bounded by the total. The audit checks every bound
// the accounting is supposed to satisfy on a reduced 2-connected cubic graph
// and reports violations as strings rather than asserting, so callers can
// surface them.
struct ContributionReport {
    std::vector<Rat> z;
    Rat total = 0;
    Rat global_bound = 0;              // (4/3 - 1/61236) * n
    std::vector<int> pattern;          // 1..6, first matching case per vertex
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline bool induced_cycle_component(const Graph& g, const CoverComponent& comp, int len) {
    if (comp.vertex_count() != len || !component_is_plain_cycle(comp)) return false;
    int inside = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (std::binary_search(comp.verts.begin(), comp.verts.end(), u) &&
            std::binary_search(comp.verts.begin(), comp.verts.end(), v))
            ++inside;
    }
    return inside == len;
}

struct ChordedQuad {
    std::vector<VertexId> verts;   // sorted
    std::vector<EdgeId> external;  // edges with exactly one endpoint inside
    bool isolated = false;
};

inline std::vector<ChordedQuad> chorded_four_cycles(const Graph& g) {
    std::vector<ChordedQuad> out;
    std::set<std::vector<VertexId>> seen;
    for (const Cycle& c : enumerate_simple_cycles(g, 4, 4)) {
        if (chords_of_cycle(g, c).empty()) continue;
        std::vector<VertexId> vs = c.verts;
        std::sort(vs.begin(), vs.end());
        if (!seen.insert(vs).second) continue;
        ChordedQuad q;
        q.verts = vs;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto [u, v] = g.edge(e);
            bool iu = std::binary_search(vs.begin(), vs.end(), u);
            bool iv = std::binary_search(vs.begin(), vs.end(), v);
            if (iu != iv) q.external.push_back(e);
        }
        out.push_back(std::move(q));
    }
    // Isolated: neither external edge touches another chorded 4-cycle.
    for (size_t a = 0; a < out.size(); ++a) {
        bool iso = true;
        for (EdgeId e : out[a].external) {
            auto [u, v] = g.edge(e);
            for (size_t b = 0; b < out.size() && iso; ++b) {
                if (b == a) continue;
                if (std::binary_search(out[b].verts.begin(), out[b].verts.end(), u) ||
                    std::binary_search(out[b].verts.begin(), out[b].verts.end(), v))
                    iso = false;
            }
        }
        out[a].isolated = iso;
    }
    return out;
}

} // namespace detail

inline ContributionReport audit_contributions(const Graph& g, const CoverFamily& fam) {
    const int n = g.num_vertices();
    const int k = fam.dist.size();
    ContributionReport rep;
    rep.z.assign(n, Rat(0));
    rep.pattern.assign(n, 6);
    rep.global_bound = (rat(4, 3) - rat(1, 61236)) * n;
    auto flag = [&](const std::string& msg) { rep.violations.push_back(msg); };

    // Exact contributions, plus the per-cover identity sum(z_i) = |T_i| + 2.
    for (int i = 0; i < k; ++i) {
        Rat sum_i(0);
        for (VertexId v = 0; v < n; ++v) {
            const auto& comp = fam.finals[i].comps[fam.finals[i].comp_of[v]];
            Rat zi = rat(comp.edge_count() + 2, comp.vertex_count());
            rep.z[v] += fam.dist.lambda[i] * zi;
            sum_i += zi;
        }
        if (sum_i != fam.tours[i].length() + 2)
            flag("cover " + std::to_string(i) + ": contribution sum does not match tour length");
    }
    for (VertexId v = 0; v < n; ++v) rep.total += rep.z[v];

    // Stage bounds: the final per-cover contribution never exceeds (h+2)/h
    // for h = min(t,10), where t is the size of v's cycle at any of the
    // three cycle-cover stages; and never exceeds 13/10 once a five-cycle
    // merge has touched the component.
    for (int i = 0; i < k; ++i) {
        const std::vector<const EulerianCover*> stages = {&fam.initial[i], &fam.after_u1[i],
                                                          &fam.after_u2[i]};
        for (const EulerianCover* stage : stages)
            for (const auto& comp : stage->comps)
                if (!detail::component_is_plain_cycle(comp))
                    flag("cover " + std::to_string(i) + ": pre-merge stage holds a non-cycle component");
        for (VertexId v = 0; v < n; ++v) {
            const auto& comp = fam.finals[i].comps[fam.finals[i].comp_of[v]];
            Rat zi = rat(comp.edge_count() + 2, comp.vertex_count());
            for (const EulerianCover* stage : stages) {
                int t = stage->comps[stage->comp_of[v]].vertex_count();
                int h = std::min(t, 10);
                if (zi > rat(h + 2, h))
                    flag("cover " + std::to_string(i) + " vertex " + std::to_string(v) +
                         ": contribution exceeds the stage cycle bound");
            }
            if (comp.kind == ComponentKind::PentMerge && zi > rat(13, 10))
                flag("cover " + std::to_string(i) + " vertex " + std::to_string(v) +
                     ": merged component exceeds 13/10");
        }
        // Small components must be untouched initial cycles; equivalently,
        // merge products carry at least 10 vertices.
        for (const auto& comp : fam.finals[i].comps)
            if (comp.kind != ComponentKind::InitialCycle && comp.vertex_count() <= 9)
                flag("cover " + std::to_string(i) + ": merged component with fewer than 10 vertices");
    }

    // Case analysis per vertex, first match wins. Cases 3..5 look for an
    // induced short-cycle component of v in some final cover.
    auto quads = detail::chorded_four_cycles(g);
    std::vector<char> in_isolated(n, 0), in_chorded(n, 0);
    for (const auto& q : quads)
        for (VertexId v : q.verts) {
            in_chorded[v] = 1;
            if (q.isolated) in_isolated[v] = 1;
        }
    auto has_cycle_comp = [&](VertexId v, int len) {
        for (int i = 0; i < k; ++i) {
            const auto& comp = fam.finals[i].comps[fam.finals[i].comp_of[v]];
            if (detail::induced_cycle_component(g, comp, len)) return true;
        }
        return false;
    };
    const Rat third_bound = rat(4, 3) - rat(1, 60);
    for (VertexId v = 0; v < n; ++v) {
        bool c3 = has_cycle_comp(v, 4), c4 = has_cycle_comp(v, 5), c5 = has_cycle_comp(v, 6);
        Rat bound;
        if (in_isolated[v]) {
            rep.pattern[v] = 1;
            bound = rat(4, 3);
        } else if (in_chorded[v]) {
            rep.pattern[v] = 2;
            bound = rat(13, 10);
        } else if (c3) {
            rep.pattern[v] = 3;
            bound = third_bound;
        } else if (c4) {
            rep.pattern[v] = 4;
            bound = third_bound;
        } else if (c5) {
            rep.pattern[v] = 5;
            bound = rat(4, 3);
        } else {
            rep.pattern[v] = 6;
            bound = rat(13, 10);
        }
        if ((c3 ? 1 : 0) + (c4 ? 1 : 0) + (c5 ? 1 : 0) > 1)
            rep.notes.push_back("vertex " + std::to_string(v) +
                                " matches several short-cycle cases; first one applied");
        if (rep.z[v] > bound) {
            std::ostringstream os;
            os << "vertex " << v << ": z = " << rat_str(rep.z[v]) << " exceeds case "
               << rep.pattern[v] << " bound " << rat_str(bound);
            flag(os.str());
        }
    }

    // Group bound over the 6-vertex components appearing anywhere in the
    // final family, and the overlap constant used by the global argument.
    std::set<std::vector<VertexId>> six_sets;
    for (int i = 0; i < k; ++i)
        for (const auto& comp : fam.finals[i].comps)
            if (comp.vertex_count() == 6) six_sets.insert(comp.verts);
    const Rat group_bound = Rat(6) * (rat(4, 3) - rat(1, 729));
    std::vector<int> six_count(n, 0);
    for (const auto& vs : six_sets) {
        Rat s(0);
        for (VertexId v : vs) {
            s += rep.z[v];
            six_count[v]++;
        }
        if (s > group_bound) {
            std::ostringstream os;
            os << "six-vertex component {";
            for (VertexId v : vs) os << v << ' ';
            os << "}: group contribution " << rat_str(s) << " exceeds " << rat_str(group_bound);
            flag(os.str());
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (six_count[v] > 12)
            flag("vertex " + std::to_string(v) + " lies on more than 12 six-vertex components");

    if (rep.total > rep.global_bound) {
        std::ostringstream os;
        os << "total contribution " << rat_str(rep.total) << " exceeds " << rat_str(rep.global_bound);
        flag(os.str());
    }
    return rep;
}

} // namespace ctsp
