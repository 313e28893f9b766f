#pragma once

// Solver for connected cubic graphs that may contain bridges: cut at the
// bridges, solve each 2-edge-connected piece on its own, and stitch the
// piece tours together with every bridge doubled. Pieces keep degree-2
// scars where bridges were cut; those vertices are swelled into chorded
// 4-cycles so the piece solver sees a cubic graph.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/solve.hpp"

namespace ctsp {

// Every tour crosses each bridge exactly twice, so no tour of a connected
// cubic graph is shorter than this.
inline long subtour_lower_bound(const Graph& g) {
    auto d = bridges_and_blocks(g);
    return 2L * d.bridges.size() + g.num_vertices() - d.singletons.size();
}

// One bridgeless piece rebuilt as a standalone graph with local ids.
struct Piece {
    Graph graph;
    std::vector<VertexId> vert_to_global;
    std::vector<EdgeId> edge_to_global;
    int degree2 = 0;  // vertices that lost a bridge
};

inline Piece make_piece(const Graph& g, const std::vector<VertexId>& verts,
                        const std::vector<char>& is_bridge) {
    Piece p;
    p.vert_to_global = verts;
    std::vector<int> local_of(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local_of[verts[i]] = i;

    std::vector<std::pair<VertexId, VertexId>> es;
    std::vector<EdgeId> inputs;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (is_bridge[e]) continue;
        auto [u, v] = g.edge(e);
        if (local_of[u] < 0 || local_of[v] < 0) continue;
        es.emplace_back(local_of[u], local_of[v]);
        inputs.push_back(e);
    }
    std::vector<EdgeId> input_to_id;
    p.graph = Graph(static_cast<int>(verts.size()), std::move(es), &input_to_id);
    p.edge_to_global.assign(p.graph.num_edges(), -1);
    for (size_t i = 0; i < inputs.size(); ++i) p.edge_to_global[input_to_id[i]] = inputs[i];
    for (VertexId v = 0; v < p.graph.num_vertices(); ++v)
        if (p.graph.degree(v) == 2) ++p.degree2;
    return p;
}

// Make a subcubic piece cubic: each degree-2 vertex becomes a chorded
// 4-cycle whose two plain corners take over the vertex's former edges.
struct Expansion {
    Graph graph;                      // cubic, 2-connected
    std::vector<EdgeId> pre_of_post;  // expanded edge -> piece edge, -1 inside a gadget
};

inline Expansion expand_degree2(const Graph& piece) {
    std::vector<int> kept(piece.num_vertices(), -1);
    int next = 0;
    for (VertexId v = 0; v < piece.num_vertices(); ++v) {
        int d = piece.degree(v);
        if (d == 3)
            kept[v] = next++;
        else if (d != 2)
            throw std::invalid_argument("expand_degree2: vertex degree outside {2,3}");
    }
    // gadget corner layout per degree-2 vertex: base+0 .. base+3 cycle with
    // chord (base+1, base+3); attachments at base+0 and base+2
    std::vector<int> gadget_base(piece.num_vertices(), -1);
    for (VertexId v = 0; v < piece.num_vertices(); ++v)
        if (kept[v] < 0) {
            gadget_base[v] = next;
            next += 4;
        }

    auto attach = [&](VertexId v, EdgeId e) {
        if (kept[v] >= 0) return kept[v];
        auto inc = piece.incident(v);  // ascending; first edge docks corner 0, second corner 2
        return gadget_base[v] + (inc[0] == e ? 0 : 2);
    };

    std::vector<std::pair<VertexId, VertexId>> es;
    std::vector<EdgeId> pre;
    for (EdgeId e = 0; e < piece.num_edges(); ++e) {
        auto [u, v] = piece.edge(e);
        es.emplace_back(attach(u, e), attach(v, e));
        pre.push_back(e);
    }
    for (VertexId v = 0; v < piece.num_vertices(); ++v) {
        if (gadget_base[v] < 0) continue;
        int b = gadget_base[v];
        for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}) {
            es.emplace_back(b + x, b + y);
            pre.push_back(-1);
        }
    }

    std::vector<EdgeId> input_to_id;
    Expansion ex;
    ex.graph = Graph(next, std::move(es), &input_to_id);
    ex.pre_of_post.assign(ex.graph.num_edges(), -1);
    for (size_t i = 0; i < pre.size(); ++i) ex.pre_of_post[input_to_id[i]] = pre[i];
    if (!is_two_connected_cubic(ex.graph))
        throw std::logic_error("expand_degree2: expansion is not 2-connected cubic");
    return ex;
}

// Tour on one bridgeless subcubic piece: expand to cubic, run the
// 2-connected solver, then drop the gadget internals out of the tour.
inline Tour algorithm_b(const Graph& piece) {
    if (is_cubic(piece)) return solve_two_connected(piece).tour;
    Expansion ex = expand_degree2(piece);
    Tour big = solve_two_connected(ex.graph).tour;
    Tour t = empty_tour(piece);
    for (EdgeId e = 0; e < ex.graph.num_edges(); ++e)
        if (ex.pre_of_post[e] >= 0) t.mult[ex.pre_of_post[e]] = big.mult[e];
    std::string why;
    if (!tour_is_valid(piece, t, &why))
        throw std::logic_error("algorithm_b: gadget contraction broke the tour: " + why);
    return t;
}

// External tour source tried against algorithm B piece by piece.
using TourPlugin = std::function<Tour(const Graph&)>;

inline std::optional<Tour> algorithm_a(const Graph& piece, const TourPlugin& plugin) {
    if (!plugin) return std::nullopt;
    Tour t = plugin(piece);
    std::string why;
    if (!tour_is_valid(piece, t, &why))
        throw std::runtime_error("algorithm_a: plugin tour rejected: " + why);
    return t;
}

struct PieceReport {
    std::vector<VertexId> verts;  // global ids, sorted
    bool singleton = false;
    int degree2 = 0;
    int length_b = 0;
    std::optional<int> length_a;
    int chosen = 0;  // length actually glued in
};

struct GlueReport {
    BridgeDecomposition decomp;
    std::vector<PieceReport> pieces;
    long lower_bound = 0;  // 2b + n - n0
    Tour tour;
};

inline GlueReport solve_connected(const Graph& g, const TourPlugin& plugin = nullptr) {
    if (!is_cubic(g) || !is_connected(g))
        throw std::invalid_argument("solve_connected: input must be connected cubic");

    GlueReport rep;
    rep.decomp = bridges_and_blocks(g);
    rep.lower_bound = 2L * rep.decomp.bridges.size() + g.num_vertices() -
                      rep.decomp.singletons.size();

    std::vector<char> is_bridge(g.num_edges(), 0);
    for (EdgeId e : rep.decomp.bridges) is_bridge[e] = 1;

    rep.tour = empty_tour(g);
    for (EdgeId e : rep.decomp.bridges) rep.tour.mult[e] = 2;

    for (const auto& verts : rep.decomp.components) {
        PieceReport pr;
        pr.verts = verts;
        if (verts.size() == 1) {
            pr.singleton = true;  // covered by its doubled bridges
            rep.pieces.push_back(std::move(pr));
            continue;
        }
        Piece piece = make_piece(g, verts, is_bridge);
        pr.degree2 = piece.degree2;

        Tour tb = algorithm_b(piece.graph);
        pr.length_b = tb.length();
        auto ta = algorithm_a(piece.graph, plugin);
        if (ta) pr.length_a = ta->length();
        const Tour& use = (ta && ta->length() < tb.length()) ? *ta : tb;
        pr.chosen = use.length();

        for (EdgeId e = 0; e < piece.graph.num_edges(); ++e)
            rep.tour.mult[piece.edge_to_global[e]] = use.mult[e];
        rep.pieces.push_back(std::move(pr));
    }

    std::string why;
    if (!tour_is_valid(g, rep.tour, &why))
        throw std::logic_error("solve_connected: glued tour invalid: " + why);
    return rep;
}

} // namespace ctsp
