#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctsp {

using VertexId = int;
using EdgeId = int;

// Undirected multigraph with dense vertex/edge ids. Parallel edges are
// distinct ids over the same endpoint pair; self-loops are rejected (the
// algorithms never produce them, quotients drop internal edges first).
//
// Edge ids are canonical: construction sorts the edge list by
// (min endpoint, max endpoint), so the same abstract graph always gets the
// same ids regardless of how the edge list was assembled. Everything
// downstream iterates ids in ascending order, which is what makes runs
// reproducible byte for byte.
class Graph {
public:
    Graph() = default;

    // input_to_id, when given, receives for each position in edge_list the
    // id the edge ended up with after canonical sorting.
    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list,
          std::vector<EdgeId>* input_to_id = nullptr)
        : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        std::vector<int> order(edge_list.size());
        std::iota(order.begin(), order.end(), 0);
        for (auto& [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("graph: self-loop");
            if (u > v) std::swap(u, v);
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return edge_list[a] < edge_list[b];
        });
        edges_.resize(edge_list.size());
        if (input_to_id) input_to_id->assign(edge_list.size(), -1);
        for (EdgeId id = 0; id < static_cast<EdgeId>(order.size()); ++id) {
            edges_[id] = edge_list[order[id]];
            if (input_to_id) (*input_to_id)[order[id]] = id;
        }
        adj_.assign(n_, {});
        for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
            adj_[edges_[id].first].push_back(id);
            adj_[edges_[id].second].push_back(id);
        }
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_.at(e); }

    // Incident edge ids, ascending.
    const std::vector<EdgeId>& incident(VertexId v) const { return adj_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }

    VertexId other_end(EdgeId e, VertexId v) const {
        auto [a, b] = edges_.at(e);
        if (v == a) return b;
        if (v == b) return a;
        throw std::invalid_argument("other_end: vertex not on edge");
    }

    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const {
        std::vector<EdgeId> out;
        for (EdgeId e : adj_.at(u))
            if (other_end(e, u) == v) out.push_back(e);
        return out;
    }

    bool adjacent(VertexId u, VertexId v) const {
        for (EdgeId e : adj_.at(u))
            if (other_end(e, u) == v) return true;
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

// Tour: spanning closed walk given by edge multiplicities (0, 1 or 2).
// Length is the total multiplicity.
struct Tour {
    std::vector<int> mult;

    int length() const {
        int s = 0;
        for (int m : mult) s += m;
        return s;
    }
};

inline Tour empty_tour(const Graph& g) { return Tour{std::vector<int>(g.num_edges(), 0)}; }

inline Tour tour_from_edges(const Graph& g, const std::vector<EdgeId>& ids) {
    Tour t = empty_tour(g);
    for (EdgeId e : ids) t.mult.at(e) += 1;
    return t;
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

} // namespace detail

// Builder-side tour validity: multiplicities in range, all degrees even,
// support connected and touching every vertex. The test suite cross-checks
// this against the independently written oracle in oracle.hpp.
inline bool tour_is_valid(const Graph& g, const Tour& t, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(t.mult.size()) != g.num_edges())
        return fail("tour: multiplicity vector size mismatch");
    for (int m : t.mult)
        if (m < 0 || m > 2) return fail("tour: multiplicity outside {0,1,2}");
    if (g.num_vertices() == 0) return fail("tour: empty graph");
    if (g.num_vertices() == 1) {
        if (t.length() != 0) return fail("tour: edges on a one-vertex graph");
        return true;
    }
    std::vector<int> deg(g.num_vertices(), 0);
    detail::Dsu dsu(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (t.mult[e] == 0) continue;
        auto [u, v] = g.edge(e);
        deg[u] += t.mult[e];
        deg[v] += t.mult[e];
        dsu.unite(u, v);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (deg[v] == 0) return fail("tour: vertex " + std::to_string(v) + " not visited");
        if (deg[v] % 2 != 0) return fail("tour: odd degree at vertex " + std::to_string(v));
    }
    int root = dsu.find(0);
    for (VertexId v = 1; v < g.num_vertices(); ++v)
        if (dsu.find(v) != root) return fail("tour: support disconnected");
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.num_vertices();
}

inline bool is_cubic(const Graph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 3) return false;
    return g.num_vertices() > 0;
}

inline bool is_subcubic(const Graph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 3) return false;
    return g.num_vertices() > 0;
}

inline bool has_parallel_edges(const Graph& g) {
    for (EdgeId e = 1; e < g.num_edges(); ++e)
        if (g.edge(e) == g.edge(e - 1)) return true;
    return false;
}

struct GraphReport {
    bool connected = false;
    bool cubic = false;
    bool subcubic = false;
    bool simple = false;
    int min_degree = 0;
    int max_degree = 0;
};

inline GraphReport validate(const Graph& g) {
    GraphReport r;
    r.connected = is_connected(g);
    r.cubic = is_cubic(g);
    r.subcubic = is_subcubic(g);
    r.simple = !has_parallel_edges(g);
    if (g.num_vertices() > 0) {
        r.min_degree = g.degree(0);
        r.max_degree = g.degree(0);
        for (VertexId v = 1; v < g.num_vertices(); ++v) {
            r.min_degree = std::min(r.min_degree, g.degree(v));
            r.max_degree = std::max(r.max_degree, g.degree(v));
        }
    }
    return r;
}

// Bridges plus the bridgeless pieces they separate. `component` lists the
// vertex sets of the components of G minus its bridges; singletons are the
// vertices all of whose edges are bridges (they form their own component).
struct BridgeDecomposition {
    std::vector<EdgeId> bridges;            // ascending
    std::vector<std::vector<VertexId>> components;
    std::vector<int> component_of;          // vertex -> component index
    std::vector<VertexId> singletons;       // ascending
};

inline BridgeDecomposition bridges_and_blocks(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_bridge(g.num_edges(), 0);
    int timer = 0;

    // Iterative lowpoint DFS; the parent is tracked per *edge id* so that a
    // parallel copy of the tree edge correctly acts as a back edge.
    struct Frame {
        VertexId v;
        EdgeId via;
        size_t next = 0;
    };
    for (VertexId s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> stack{{s, -1}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.via) continue;
                VertexId w = g.other_end(e, f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                if (f.via != -1) {
                    VertexId parent = g.other_end(f.via, f.v);
                    low[parent] = std::min(low[parent], low[f.v]);
                    if (low[f.v] > disc[parent]) is_bridge[f.via] = 1;
                }
                stack.pop_back();
            }
        }
    }

    BridgeDecomposition out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (is_bridge[e]) out.bridges.push_back(e);

    out.component_of.assign(n, -1);
    for (VertexId s = 0; s < n; ++s) {
        if (out.component_of[s] != -1) continue;
        int idx = static_cast<int>(out.components.size());
        std::vector<VertexId> comp{s};
        out.component_of[s] = idx;
        for (size_t i = 0; i < comp.size(); ++i) {
            VertexId v = comp[i];
            for (EdgeId e : g.incident(v)) {
                if (is_bridge[e]) continue;
                VertexId w = g.other_end(e, v);
                if (out.component_of[w] == -1) {
                    out.component_of[w] = idx;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    for (VertexId v = 0; v < n; ++v)
        if (out.components[out.component_of[v]].size() == 1) out.singletons.push_back(v);
    return out;
}

inline bool is_bridgeless(const Graph& g) { return bridges_and_blocks(g).bridges.empty(); }

// For cubic graphs bridgeless and 2-vertex-connected coincide; this is the
// 2-connectivity test used by the solve pipeline preconditions.
inline bool is_two_connected_cubic(const Graph& g) {
    return is_cubic(g) && is_connected(g) && is_bridgeless(g);
}

// A 3-edge-cut: removing the three edges leaves exactly two components and
// each of the three edges crosses between them. `side` is the smaller
// component (ties broken toward the one containing the lowest vertex id).
struct EdgeCut {
    std::array<EdgeId, 3> cut;
    std::vector<VertexId> side;
};

namespace detail {

// Component labels of G minus a set of edges (flagged in `removed`).
inline int components_without(const Graph& g, const std::vector<char>& removed,
                              std::vector<int>& label) {
    label.assign(g.num_vertices(), -1);
    int comps = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (label[s] != -1) continue;
        label[s] = comps;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (removed[e]) continue;
                VertexId w = g.other_end(e, v);
                if (label[w] == -1) {
                    label[w] = comps;
                    stack.push_back(w);
                }
            }
        }
        ++comps;
    }
    return comps;
}

} // namespace detail

// Brute force over all edge triples. Deliberately exhaustive: the desk-scale
// instances are tiny and the skipped candidates (triples that do not split
// the graph in exactly two sides with all three edges crossing) are pruned
// by a single sweep each.
inline std::vector<EdgeCut> enumerate_three_cuts(const Graph& g) {
    std::vector<EdgeCut> cuts;
    const int m = g.num_edges();
    std::vector<char> removed(m, 0);
    std::vector<int> label;
    for (EdgeId a = 0; a < m; ++a) {
        removed[a] = 1;
        for (EdgeId b = a + 1; b < m; ++b) {
            removed[b] = 1;
            for (EdgeId c = b + 1; c < m; ++c) {
                removed[c] = 1;
                int comps = detail::components_without(g, removed, label);
                if (comps == 2) {
                    bool crossing = true;
                    for (EdgeId e : {a, b, c}) {
                        auto [u, v] = g.edge(e);
                        if (label[u] == label[v]) crossing = false;
                    }
                    if (crossing) {
                        std::vector<VertexId> side0, side1;
                        for (VertexId v = 0; v < g.num_vertices(); ++v)
                            (label[v] == 0 ? side0 : side1).push_back(v);
                        // label 0 always contains vertex 0, so the tie-break
                        // toward the lowest vertex id is side0.
                        std::vector<VertexId> side =
                            side1.size() < side0.size() ? side1 : side0;
                        cuts.push_back(EdgeCut{{a, b, c}, std::move(side)});
                    }
                }
                removed[c] = 0;
            }
            removed[b] = 0;
        }
        removed[a] = 0;
    }
    return cuts;
}

// Quotient by a vertex partition. Edges inside a part are dropped; crossing
// edges survive (parallels and all) and edge_origin maps quotient edge ids
// back to the input graph.
struct Contraction {
    Graph quotient;
    std::vector<EdgeId> edge_origin;
    std::vector<int> part_of;
};

inline Contraction contract_parts(const Graph& g,
                                  const std::vector<std::vector<VertexId>>& parts) {
    std::vector<int> part_of(g.num_vertices(), -1);
    for (size_t p = 0; p < parts.size(); ++p)
        for (VertexId v : parts[p]) {
            if (v < 0 || v >= g.num_vertices() || part_of[v] != -1)
                throw std::invalid_argument("contract_parts: not a partition");
            part_of[v] = static_cast<int>(p);
        }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (part_of[v] == -1) throw std::invalid_argument("contract_parts: vertex missing from partition");

    std::vector<std::pair<VertexId, VertexId>> qedges;
    std::vector<EdgeId> origin;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (part_of[u] != part_of[v]) {
            qedges.emplace_back(part_of[u], part_of[v]);
            origin.push_back(e);
        }
    }
    std::vector<EdgeId> placed;
    Graph q(static_cast<int>(parts.size()), std::move(qedges), &placed);
    std::vector<EdgeId> edge_origin(placed.size());
    for (size_t i = 0; i < placed.size(); ++i) edge_origin[placed[i]] = origin[i];
    return Contraction{std::move(q), std::move(edge_origin), std::move(part_of)};
}

// Kruskal by ascending edge id; deterministic. Throws on disconnected input.
inline std::vector<EdgeId> spanning_tree(const Graph& g) {
    detail::Dsu dsu(g.num_vertices());
    std::vector<EdgeId> tree;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (dsu.unite(u, v)) tree.push_back(e);
    }
    if (static_cast<int>(tree.size()) != g.num_vertices() - 1)
        throw std::invalid_argument("spanning_tree: graph is disconnected");
    return tree;
}

} // namespace ctsp
