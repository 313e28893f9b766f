#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/io.hpp"

namespace ctsp {

// Deterministic RNG. mt19937_64 has a pinned algorithm in the standard and
// the bounded draw avoids std::uniform_int_distribution (whose output is
// implementation-defined), so a seed reproduces the same graph bytes
// everywhere.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

struct Embedded {
    Graph graph;
    RotationSystem rotation;
};

// Build a rotation system from a face list (faces as closed vertex walks,
// any direction). Each face walk is oriented by propagation so every edge is
// traversed once per direction, then the corners around each vertex are
// chained into its cyclic edge order. Simple graphs only (vertex walks must
// determine edges uniquely). Used by the fixed generators; the face scanner
// in faces.hpp recomputes faces from the result, and tests close that loop.
inline RotationSystem rotation_from_faces(const Graph& g,
                                          const std::vector<std::vector<VertexId>>& faces) {
    if (has_parallel_edges(g))
        throw std::invalid_argument("rotation_from_faces: parallel edges unsupported");

    auto edge_of = [&](VertexId u, VertexId v) {
        auto ids = g.edges_between(u, v);
        if (ids.size() != 1) throw std::invalid_argument("rotation_from_faces: walk off the graph");
        return ids[0];
    };

    // face -> oriented vertex walk; +1 keep, -1 reverse, 0 undecided.
    std::vector<int> sign(faces.size(), 0);
    // For propagation: which faces use each edge.
    std::vector<std::vector<int>> faces_at_edge(g.num_edges());
    std::vector<std::vector<std::pair<VertexId, VertexId>>> dir_in_face(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& walk = faces[f];
        for (size_t i = 0; i < walk.size(); ++i) {
            VertexId u = walk[i], v = walk[(i + 1) % walk.size()];
            EdgeId e = edge_of(u, v);
            faces_at_edge[e].push_back(static_cast<int>(f));
            dir_in_face[f].emplace_back(u, v);
        }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (faces_at_edge[e].size() != 2)
            throw std::invalid_argument("rotation_from_faces: edge not on exactly two faces");

    auto traverses = [&](int f, VertexId u, VertexId v) {
        // Does face f (with its sign applied) traverse u->v?
        for (auto [a, b] : dir_in_face[f]) {
            if (sign[f] >= 0 && a == u && b == v) return true;
            if (sign[f] < 0 && a == v && b == u) return true;
        }
        return false;
    };

    std::vector<int> todo;
    for (size_t f0 = 0; f0 < faces.size(); ++f0) {
        if (sign[f0] != 0) continue;
        sign[f0] = 1;
        todo.assign(1, static_cast<int>(f0));
        while (!todo.empty()) {
            int f = todo.back();
            todo.pop_back();
            for (auto [u, v] : dir_in_face[f]) {
                bool forward = traverses(f, u, v);
                VertexId a = forward ? u : v, b = forward ? v : u;
                EdgeId e = edge_of(u, v);
                int other = faces_at_edge[e][0] == f ? faces_at_edge[e][1] : faces_at_edge[e][0];
                // The twin face must traverse b->a.
                int need;
                bool raw_forward = false;
                for (auto [x, y] : dir_in_face[other])
                    if (x == b && y == a) raw_forward = true;
                need = raw_forward ? 1 : -1;
                if (sign[other] == 0) {
                    sign[other] = need;
                    todo.push_back(other);
                } else if (sign[other] != need) {
                    throw std::invalid_argument("rotation_from_faces: faces not orientable");
                }
            }
        }
    }

    // Corner successor at each vertex: incoming edge -> outgoing edge.
    std::vector<std::map<EdgeId, EdgeId>> corner(g.num_vertices());
    for (size_t f = 0; f < faces.size(); ++f) {
        std::vector<VertexId> walk = faces[f];
        if (sign[f] < 0) std::reverse(walk.begin(), walk.end());
        size_t L = walk.size();
        for (size_t i = 0; i < L; ++i) {
            VertexId a = walk[i], v = walk[(i + 1) % L], b = walk[(i + 2) % L];
            corner[v][edge_of(a, v)] = edge_of(v, b);
        }
    }

    RotationSystem rot(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (corner[v].size() != g.incident(v).size())
            throw std::invalid_argument("rotation_from_faces: missing corner");
        EdgeId start = g.incident(v).front();
        EdgeId e = start;
        do {
            rot[v].push_back(e);
            e = corner[v].at(e);
        } while (e != start && rot[v].size() <= corner[v].size());
        if (rot[v].size() != g.incident(v).size())
            throw std::invalid_argument("rotation_from_faces: corners do not close a single cycle");
    }
    return rot;
}

inline Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k33() {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
    return Graph(6, std::move(es));
}

inline Graph petersen() {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(i, i + 5);                // spokes
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::move(es));
}

// Prism over an even cycle of length 2k: outer ring 0..2k-1, inner ring
// 2k..4k-1, spokes between. k=2 is the cube. Bipartite, planar, 3-connected.
inline Embedded even_prism(int k) {
    if (k < 2) throw std::invalid_argument("even_prism: k >= 2 required");
    const int L = 2 * k;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 0; i < L; ++i) {
        es.emplace_back(i, (i + 1) % L);
        es.emplace_back(L + i, L + (i + 1) % L);
        es.emplace_back(i, L + i);
    }
    Graph g(2 * L, std::move(es));
    std::vector<std::vector<VertexId>> faces;
    std::vector<VertexId> outer, inner;
    for (int i = 0; i < L; ++i) outer.push_back(i);
    for (int i = L - 1; i >= 0; --i) inner.push_back(L + i);
    faces.push_back(outer);
    faces.push_back(inner);
    for (int i = 0; i < L; ++i)
        faces.push_back({i, (i + 1) % L, L + (i + 1) % L, L + i});
    return Embedded{g, rotation_from_faces(g, faces)};
}

inline Embedded cube() { return even_prism(2); }

// Truncated octahedron: vertices are the 24 permutations of 4 symbols,
// edges swap adjacent positions. 6 square faces (orbits of the commuting
// outer swaps) and 8 hexagons (orbits of adjacent swap pairs).
inline Embedded truncated_octahedron() {
    std::array<std::array<int, 4>, 24> perms;
    {
        std::array<int, 4> p{0, 1, 2, 3};
        int idx = 0;
        do {
            perms[idx++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    auto index_of = [&](const std::array<int, 4>& p) {
        for (int i = 0; i < 24; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("permutation index");
    };
    auto swapped = [&](int v, int pos) {
        std::array<int, 4> p = perms[v];
        std::swap(p[pos], p[pos + 1]);
        return index_of(p);
    };

    std::vector<std::pair<VertexId, VertexId>> es;
    for (int v = 0; v < 24; ++v)
        for (int pos = 0; pos < 3; ++pos) {
            int w = swapped(v, pos);
            if (v < w) es.emplace_back(v, w);
        }
    Graph g(24, std::move(es));

    std::vector<std::vector<VertexId>> faces;
    auto orbit_faces = [&](int gen_a, int gen_b, size_t len) {
        std::vector<char> seen(24, 0);
        for (int v = 0; v < 24; ++v) {
            if (seen[v]) continue;
            std::vector<VertexId> walk;
            int cur = v;
            bool use_a = true;
            do {
                walk.push_back(cur);
                seen[cur] = 1;
                cur = swapped(cur, use_a ? gen_a : gen_b);
                use_a = !use_a;
            } while (cur != v);
            if (walk.size() != len) throw std::logic_error("unexpected face length");
            faces.push_back(std::move(walk));
        }
    };
    orbit_faces(0, 2, 4);  // squares: the two commuting swaps
    orbit_faces(0, 1, 6);  // hexagons
    orbit_faces(1, 2, 6);  // hexagons
    return Embedded{g, rotation_from_faces(g, faces)};
}

namespace detail {

// One attempt of the pairing model: 3 stubs per vertex, random matching.
inline std::optional<Graph> pairing_attempt(int n, Rng& rng) {
    std::vector<int> stubs(3 * n);
    for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
    std::vector<std::pair<VertexId, VertexId>> es;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (int i = 0; i < 3 * n; i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return std::nullopt;                  // self-loop
        if (seen[u][v]) return std::nullopt;              // parallel edge
        seen[u][v] = seen[v][u] = 1;
        es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
}

} // namespace detail

// Random simple cubic 2-connected graph via rejection sampling on the
// pairing model. Same seed, same graph.
inline Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2) throw std::invalid_argument("random_cubic: n must be even and >= 4");
    Rng rng(seed);
    for (int tries = 0; tries < 200000; ++tries) {
        auto g = detail::pairing_attempt(n, rng);
        if (!g) continue;
        if (!is_connected(*g)) continue;
        if (!is_bridgeless(*g)) continue;
        return *g;
    }
    throw std::runtime_error("random_cubic: rejection sampling did not converge");
}

// Chain of random cubic 2-connected blocks joined by bridges. Each bridge
// subdivides one edge on either side and joins the two new vertices, so the
// result is cubic with exactly `bridges` bridges and no singleton cut
// vertices. Total vertex count is n (n - 2*bridges split across blocks).
inline Graph random_cubic_bridged(int n, int bridges, std::uint64_t seed) {
    if (bridges < 1) throw std::invalid_argument("random_cubic_bridged: bridges >= 1");
    const int blocks = bridges + 1;
    int avail = n - 2 * bridges;
    if (n % 2 || avail < 4 * blocks)
        throw std::invalid_argument("random_cubic_bridged: n too small or odd");
    std::vector<int> sizes(blocks, 4);
    int left = avail - 4 * blocks;  // even
    for (int i = 0; left > 0; i = (i + 1) % blocks) {
        sizes[i] += 2;
        left -= 2;
    }

    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> all;
    std::vector<VertexId> prev_attach;  // attachment vertex awaiting the next bridge
    int offset = 0;
    for (int bi = 0; bi < blocks; ++bi) {
        Graph comp = random_cubic(sizes[bi], rng.next());
        int subdivisions = (bi == 0 || bi == blocks - 1) ? 1 : 2;
        // Local mutable copy to subdivide.
        std::vector<std::pair<VertexId, VertexId>> ces(comp.edges());
        int local_n = comp.num_vertices();
        std::vector<VertexId> attach;
        for (int s = 0; s < subdivisions; ++s) {
            int ei = rng.below(static_cast<int>(ces.size()));
            auto [u, v] = ces[ei];
            VertexId w = local_n++;
            ces[ei] = {u, w};
            ces.emplace_back(w, v);
            attach.push_back(w);
        }
        for (auto [u, v] : ces) all.emplace_back(u + offset, v + offset);
        if (bi > 0) all.emplace_back(prev_attach[0], attach[0] + offset);  // the bridge
        prev_attach = {attach.back() + offset};
        offset += local_n;
    }
    Graph g(offset, std::move(all));
    auto bd = bridges_and_blocks(g);
    if (static_cast<int>(bd.bridges.size()) != bridges || !is_cubic(g) || g.num_vertices() != n)
        throw std::logic_error("random_cubic_bridged: construction invariant failed");
    return g;
}

// Name-based dispatch shared by the CLI and the bench harness.
struct Generated {
    Graph graph;
    std::optional<RotationSystem> rotation;
};

inline Generated generate_named(const std::string& kind, int n, int k, int bridges,
                                std::uint64_t seed) {
    if (kind == "k4") return {k4(), std::nullopt};
    if (kind == "k33") return {k33(), std::nullopt};
    if (kind == "petersen") return {petersen(), std::nullopt};
    if (kind == "cube") {
        auto e = cube();
        return {e.graph, e.rotation};
    }
    if (kind == "even_prism") {
        auto e = even_prism(k);
        return {e.graph, e.rotation};
    }
    if (kind == "truncated_octahedron") {
        auto e = truncated_octahedron();
        return {e.graph, e.rotation};
    }
    if (kind == "random_cubic") return {random_cubic(n, seed), std::nullopt};
    if (kind == "random_cubic_bridged") return {random_cubic_bridged(n, bridges, seed), std::nullopt};
    throw std::runtime_error("unknown generator kind: " + kind);
}

} // namespace ctsp
