#pragma once

// Tour construction for Barnette graphs (cubic, bipartite, planar,
// 3-connected). The faces admit a proper 3-coloring; each color class is a
// cycle cover, and symmetric differences with faces of a fixed color shrink
// the other covers. The smallest cover found yields a tour of length
// n + 2|C| - 2 via a doubled connecting tree.

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/cover.hpp"
#include "ctsp/cycles.hpp"
#include "ctsp/eulerian_cover.hpp"
#include "ctsp/faces.hpp"
#include "ctsp/graph.hpp"

namespace ctsp {

// Proper 3-coloring of the face adjacency, colors 1..3. Exact backtracking,
// most constrained face first; instant at the face counts we handle.
inline std::vector<int> three_face_coloring(const Graph& g, const FaceSet& fs) {
    if (!is_spherical(g, fs))
        throw std::invalid_argument("three_face_coloring: embedding is not spherical");
    for (const Face& f : fs.faces)
        if (f.length() % 2 != 0)
            throw std::invalid_argument("three_face_coloring: odd face, graph is not bipartite");

    int nf = fs.size();
    std::vector<std::vector<int>> adj(nf);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [f1, f2] = fs.faces_at(e);
        if (f1 == f2)
            throw std::invalid_argument("three_face_coloring: edge bounds one face twice (bridge)");
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<int> color(nf, 0);
    auto avail = [&](int f) {
        std::array<char, 4> ok{0, 1, 1, 1};
        for (int h : adj[f])
            if (color[h]) ok[color[h]] = 0;
        return ok;
    };
    std::function<bool(int)> go = [&](int done) {
        if (done == nf) return true;
        int pick = -1, fewest = 4;
        for (int f = 0; f < nf; ++f) {
            if (color[f]) continue;
            auto ok = avail(f);
            int cnt = ok[1] + ok[2] + ok[3];
            if (cnt < fewest) {
                fewest = cnt;
                pick = f;
            }
        }
        if (fewest == 0) return false;
        auto ok = avail(pick);
        for (int c = 1; c <= 3; ++c) {
            if (!ok[c]) continue;
            color[pick] = c;
            if (go(done + 1)) return true;
            color[pick] = 0;
        }
        return false;
    };
    if (!go(0))
        throw std::runtime_error("three_face_coloring: no proper 3-coloring exists");
    return color;
}

// Each edge takes the one color absent from its two incident faces. The
// classes E(1), E(2), E(3) are disjoint perfect matchings, and E(i) u E(j)
// is exactly the edge set of the faces colored k, {i,j,k} = {1,2,3}.
inline std::vector<int> edge_colors_from_faces(const Graph& g, const FaceSet& fs,
                                               const std::vector<int>& face_color) {
    std::vector<int> ec(g.num_edges(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [f1, f2] = fs.faces_at(e);
        int c1 = face_color[f1], c2 = face_color[f2];
        if (c1 == c2) throw std::invalid_argument("edge_colors_from_faces: coloring not proper");
        ec[e] = 6 - c1 - c2;
    }
    return ec;
}

// A face is alternating for a cover when its boundary walk strictly
// alternates between cover and non-cover edges.
inline bool face_is_alternating(const Face& f, const std::vector<char>& in_cover) {
    int len = f.length();
    if (len % 2 != 0) return false;
    for (int i = 0; i < len; ++i)
        if (in_cover[f.edges[i]] == in_cover[f.edges[(i + 1) % len]]) return false;
    return true;
}

// Replace the cover by its symmetric difference with an alternating face.
// The result covers the same vertices with every degree still 2.
inline void alternate_face(const Face& f, std::vector<char>& in_cover) {
    if (!face_is_alternating(f, in_cover))
        throw std::invalid_argument("alternate_face: face is not alternating");
    for (EdgeId e : f.edges) in_cover[e] ^= 1;
}

// One cover evolution: seeded from the faces of color `seed`, shrunk by
// alternating faces of color `color`.
struct ColorRun {
    int color = 0;
    int seed = 0;
    int initial_cycles = 0;
    int alternations = 0;  // accepted moves
    CycleCover cover;      // state at the local-search fixpoint

    int size() const { return static_cast<int>(cover.cycles.size()); }
};

struct BarnetteRun {
    FaceSet faces;
    std::vector<int> face_color;  // 1..3 per face
    std::vector<int> edge_color;  // 1..3 per edge
    std::array<ColorRun, 3> runs;
    int best = 0;  // index of the winning run
    Tour tour;

    const CycleCover& best_cover() const { return runs[best].cover; }
};

inline BarnetteRun barnette_tour(const Graph& g, const RotationSystem& rot) {
    if (!is_cubic(g) || !is_connected(g))
        throw std::invalid_argument("barnette_tour: input must be cubic and connected");

    BarnetteRun out;
    out.faces = faces_from_rotation(g, rot);
    out.face_color = three_face_coloring(g, out.faces);
    out.edge_color = edge_colors_from_faces(g, out.faces, out.face_color);

    // The three faces at a vertex are mutually adjacent, so each vertex sees
    // every color once; each edge class must come out a perfect matching.
    for (int c = 1; c <= 3; ++c) {
        std::vector<char> hit(g.num_vertices(), 0);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (out.edge_color[e] != c) continue;
            auto [u, v] = g.edge(e);
            if (hit[u] || hit[v]) throw std::logic_error("barnette_tour: edge class is not a matching");
            hit[u] = hit[v] = 1;
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (!hit[v]) throw std::logic_error("barnette_tour: edge class misses a vertex");
    }

    for (int i = 1; i <= 3; ++i) {
        ColorRun& run = out.runs[i - 1];
        run.color = i;
        run.seed = i % 3 + 1;

        std::vector<char> flags(g.num_edges(), 0);
        for (int f = 0; f < out.faces.size(); ++f)
            if (out.face_color[f] == run.seed)
                for (EdgeId e : out.faces.faces[f].edges) flags[e] = 1;
        int cycles = static_cast<int>(cycles_from_edge_set(g, flags).size());
        run.initial_cycles = cycles;

        // Ascending face scan; accept only strict drops in the cycle count
        // and restart after each accepted move. Terminates: the count is a
        // positive integer that shrinks with every acceptance.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int f = 0; f < out.faces.size() && !moved; ++f) {
                if (out.face_color[f] != i) continue;
                const Face& face = out.faces.faces[f];
                if (!face_is_alternating(face, flags))
                    throw std::logic_error("barnette_tour: active-color face stopped alternating");
                for (EdgeId e : face.edges) flags[e] ^= 1;
                int after = static_cast<int>(cycles_from_edge_set(g, flags).size());
                if (after < cycles) {
                    cycles = after;
                    ++run.alternations;
                    moved = true;
                } else {
                    for (EdgeId e : face.edges) flags[e] ^= 1;
                }
            }
        }

        run.cover.cycles = cycles_from_edge_set(g, flags);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (out.edge_color[e] == i && !flags[e])
                throw std::logic_error("barnette_tour: cover lost an edge of its fixed matching");
        std::string why;
        if (!cycle_cover_is_valid(g, run.cover, &why))
            throw std::logic_error("barnette_tour: " + why);
    }

    out.best = 0;
    for (int r = 1; r < 3; ++r)
        if (out.runs[r].size() < out.runs[out.best].size()) out.best = r;

    out.tour = tour_from_cover(g, cover_from_cycles(g, out.best_cover().cycles));
    if (out.tour.length() != g.num_vertices() + 2 * out.runs[out.best].size() - 2)
        throw std::logic_error("barnette_tour: tour length disagrees with the cycle count");
    return out;
}

// Bound checks on the covers at their local-search fixpoints. Any entry in
// `violations` is a bug (or a non-Barnette input slipped through).
struct BarnetteAudit {
    std::array<int, 3> cover_sizes{};
    int face4 = 0;  // number of faces of length 4
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

inline BarnetteAudit audit_barnette_bounds(const Graph& g, const BarnetteRun& run) {
    BarnetteAudit a;
    const FaceSet& fs = run.faces;

    // sorted edge sets of the 4-faces, for recognizing cover cycles that are faces
    std::vector<std::vector<EdgeId>> quad_faces;
    for (const Face& f : fs.faces) {
        if (f.length() != 4) continue;
        ++a.face4;
        auto es = f.edges;
        std::sort(es.begin(), es.end());
        quad_faces.push_back(std::move(es));
    }

    int total_quad_cycles = 0;
    for (int ri = 0; ri < 3; ++ri) {
        const ColorRun& r = run.runs[ri];
        const auto& cycles = r.cover.cycles;
        a.cover_sizes[ri] = static_cast<int>(cycles.size());
        std::string tag = "color " + std::to_string(r.color) + ": ";

        std::vector<int> cyc_of(g.num_vertices(), -1);
        for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
            for (VertexId v : cycles[c].verts) cyc_of[v] = c;

        // Per face of the active color: a face of length 2k meets at most
        // floor((k+1)/2) cover cycles, else one more alternation would have
        // been accepted. Accumulate both bound sums along the way.
        long first_rhs = 1, second_rhs = 0;
        for (int f = 0; f < fs.size(); ++f) {
            if (run.face_color[f] != r.color) continue;
            int k = fs.faces[f].length() / 2;
            first_rhs += (k - 1) / 2;
            second_rhs += (k + 1) / 2;
            std::vector<int> met;
            for (VertexId v : fs.faces[f].verts) met.push_back(cyc_of[v]);
            std::sort(met.begin(), met.end());
            met.erase(std::unique(met.begin(), met.end()), met.end());
            if (static_cast<int>(met.size()) > (k + 1) / 2)
                a.violations.push_back(tag + "face " + std::to_string(f) + " meets " +
                                       std::to_string(met.size()) + " cycles, cap " +
                                       std::to_string((k + 1) / 2));
        }

        if (static_cast<long>(cycles.size()) > first_rhs)
            a.violations.push_back(tag + "cycle count " + std::to_string(cycles.size()) +
                                   " exceeds face-expansion bound " + std::to_string(first_rhs));

        int quad_cycles = 0;
        for (const Cycle& c : cycles) {
            if (c.length() != 4) continue;
            auto es = c.edges;
            std::sort(es.begin(), es.end());
            if (std::find(quad_faces.begin(), quad_faces.end(), es) != quad_faces.end())
                ++quad_cycles;
        }
        total_quad_cycles += quad_cycles;
        if (cycles.size() != 1 && 3 * static_cast<long>(cycles.size()) > quad_cycles + second_rhs)
            a.violations.push_back(tag + "3*" + std::to_string(cycles.size()) +
                                   " exceeds incidence bound " +
                                   std::to_string(quad_cycles + second_rhs));
    }

    // A 4-face avoids one color, so it can sit in at most two of the covers.
    if (total_quad_cycles > 2 * a.face4)
        a.violations.push_back("4-faces appear in the covers " + std::to_string(total_quad_cycles) +
                               " times, cap " + std::to_string(2 * a.face4));

    // Combined bound, scaled by 18 to stay in integers:
    // min |C(i)| <= min{ (n+4-|F4|)/6, (n+1)/9 + |F4|/6 }.
    int n = g.num_vertices();
    long min_c = *std::min_element(a.cover_sizes.begin(), a.cover_sizes.end());
    long cap = std::min(3L * (n + 4 - a.face4), 2L * (n + 1) + 3L * a.face4);
    if (18 * min_c > cap)
        a.violations.push_back("best cover size " + std::to_string(min_c) +
                               " exceeds the combined bound " + std::to_string(cap) + "/18");
    if (36 * min_c > 5L * n + 14)
        a.violations.push_back("best cover size " + std::to_string(min_c) +
                               " exceeds (5n+14)/36");
    return a;
}

} // namespace ctsp
