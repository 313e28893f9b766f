#pragma once

#include <string>
#include <vector>

#include "ctsp/cycles.hpp"
#include "ctsp/graph.hpp"

namespace ctsp {

// How a cover component came to be. Components start as the cycles of
// E minus a perfect matching and can be merged along short cycles of G.
enum class ComponentKind { InitialCycle, HexMerge, QuadMerge, PentMerge };

inline const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::InitialCycle: return "cycle";
        case ComponentKind::HexMerge: return "hex-merge";
        case ComponentKind::QuadMerge: return "quad-merge";
        case ComponentKind::PentMerge: return "pent-merge";
    }
    return "?";
}

// Connected Eulerian multi-subgraph: every vertex it touches has even degree
// (counting multiplicity), no edge more than twice.
struct CoverComponent {
    std::vector<VertexId> verts;                 // sorted
    std::vector<std::pair<EdgeId, int>> edges;   // (id, multiplicity), sorted by id
    ComponentKind kind = ComponentKind::InitialCycle;
    int merges = 0;                              // five-cycle merges absorbed

    int vertex_count() const { return static_cast<int>(verts.size()); }
    int edge_count() const {
        int s = 0;
        for (auto& [e, m] : edges) s += m;
        return s;
    }
};

// Partition of V(G) into component vertex sets, components vertex-disjoint.
struct EulerianCover {
    std::vector<CoverComponent> comps;
    std::vector<int> comp_of;  // vertex -> component index

    int size() const { return static_cast<int>(comps.size()); }
    int total_edges() const {
        int s = 0;
        for (const auto& c : comps) s += c.edge_count();
        return s;
    }
};

// Builder-side validator (the oracle module has an independently written
// one; the test suite cross-checks them on random inputs).
inline bool cover_is_valid(const Graph& g, const EulerianCover& cover, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(cover.comp_of.size()) != g.num_vertices())
        return fail("cover: comp_of size mismatch");
    std::vector<int> claimed(g.num_vertices(), -1);
    for (int ci = 0; ci < cover.size(); ++ci) {
        const auto& c = cover.comps[ci];
        if (c.verts.empty()) return fail("cover: empty component");
        if (!std::is_sorted(c.verts.begin(), c.verts.end())) return fail("cover: unsorted verts");
        for (VertexId v : c.verts) {
            if (v < 0 || v >= g.num_vertices() || claimed[v] != -1)
                return fail("cover: vertex sets do not partition V");
            claimed[v] = ci;
            if (cover.comp_of[v] != ci) return fail("cover: comp_of out of sync");
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (claimed[v] == -1) return fail("cover: vertex " + std::to_string(v) + " uncovered");

    for (int ci = 0; ci < cover.size(); ++ci) {
        const auto& c = cover.comps[ci];
        std::vector<int> deg(g.num_vertices(), 0);
        detail::Dsu dsu(g.num_vertices());
        EdgeId prev = -1;
        for (auto& [e, mult] : c.edges) {
            if (e <= prev) return fail("cover: component edges not sorted/unique");
            prev = e;
            if (mult < 1 || mult > 2) return fail("cover: multiplicity outside {1,2}");
            auto [u, v] = g.edge(e);
            if (claimed[u] != ci || claimed[v] != ci)
                return fail("cover: component edge leaves its vertex set");
            deg[u] += mult;
            deg[v] += mult;
            dsu.unite(u, v);
        }
        for (VertexId v : c.verts) {
            if (deg[v] == 0 || deg[v] % 2 != 0)
                return fail("cover: degree not even positive at vertex " + std::to_string(v));
        }
        int root = dsu.find(c.verts[0]);
        for (VertexId v : c.verts)
            if (dsu.find(v) != root) return fail("cover: component support disconnected");
    }
    return true;
}

// An initial cover is a plain disjoint-cycle cover; this lifts it into the
// Eulerian representation the merge operations work on.
inline EulerianCover cover_from_cycles(const Graph& g, const std::vector<Cycle>& cycles) {
    EulerianCover cover;
    cover.comp_of.assign(g.num_vertices(), -1);
    for (const auto& cyc : cycles) {
        CoverComponent c;
        c.kind = ComponentKind::InitialCycle;
        c.verts = cyc.verts;
        std::sort(c.verts.begin(), c.verts.end());
        std::vector<EdgeId> es = cyc.edges;
        std::sort(es.begin(), es.end());
        for (EdgeId e : es) c.edges.emplace_back(e, 1);
        int ci = cover.size();
        for (VertexId v : c.verts) {
            if (cover.comp_of[v] != -1)
                throw std::invalid_argument("cover_from_cycles: cycles not disjoint");
            cover.comp_of[v] = ci;
        }
        cover.comps.push_back(std::move(c));
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (cover.comp_of[v] == -1) throw std::invalid_argument("cover_from_cycles: uncovered vertex");
    return cover;
}

} // namespace ctsp
