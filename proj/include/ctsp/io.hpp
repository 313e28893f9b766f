#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

// Edge-list text format. Line 1: "n m"; then m lines "u v" with 0-based
// vertex ids. Duplicate lines are parallel edges. Writers emit edges sorted
// by (min endpoint, max endpoint), which matches the canonical edge ids the
// Graph constructor assigns, so ids round-trip through files.

inline Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        out << u << " " << v << "\n";
    }
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(g, out);
}

// Rotation file: n lines; line v lists the edge ids incident to v in cyclic
// order. Must be a permutation of the incident ids of the matching graph.
using RotationSystem = std::vector<std::vector<EdgeId>>;

inline RotationSystem read_rotation(std::istream& in, const Graph& g) {
    RotationSystem rot(g.num_vertices());
    std::string line;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!std::getline(in >> std::ws, line))
            throw std::runtime_error("rotation: truncated at vertex " + std::to_string(v));
        std::istringstream ls(line);
        EdgeId e;
        while (ls >> e) rot[v].push_back(e);
        std::vector<EdgeId> got = rot[v], want = g.incident(v);
        std::sort(got.begin(), got.end());
        if (got != want)
            throw std::runtime_error("rotation: line " + std::to_string(v) +
                                     " is not a permutation of the incident edges");
    }
    return rot;
}

inline void write_rotation(const RotationSystem& rot, std::ostream& out) {
    for (const auto& edges : rot) {
        for (size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i];
        out << "\n";
    }
}

inline RotationSystem load_rotation(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rotation file: " + path);
    return read_rotation(in, g);
}

inline void save_rotation(const RotationSystem& rot, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write rotation file: " + path);
    write_rotation(rot, out);
}

// Tours reuse the edge-list format against a known graph: each "u v" line is
// one traversal of an edge between u and v. Parallel edges soak up repeated
// lines in ascending id order (equivalent for validity and length).
inline Tour read_tour(std::istream& in, const Graph& g) {
    int n, m;
    if (!(in >> n >> m)) throw std::runtime_error("tour: missing header");
    if (n != g.num_vertices()) throw std::runtime_error("tour: vertex count mismatch");
    Tour t = empty_tour(g);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("tour: truncated");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= g.num_vertices()) throw std::runtime_error("tour: endpoint out of range");
        EdgeId placed = -1;
        for (EdgeId e : g.edges_between(u, v))
            if (t.mult[e] < 2) {
                placed = e;
                break;
            }
        if (placed == -1)
            throw std::runtime_error("tour: line '" + std::to_string(u) + " " + std::to_string(v) +
                                     "' exceeds edge capacity");
        t.mult[placed] += 1;
    }
    return t;
}

inline void write_tour(const Graph& g, const Tour& t, std::ostream& out) {
    out << g.num_vertices() << " " << t.length() << "\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        for (int k = 0; k < t.mult[e]; ++k)
            out << g.edge(e).first << " " << g.edge(e).second << "\n";
}

inline Tour load_tour(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tour file: " + path);
    return read_tour(in, g);
}

inline void save_tour(const Graph& g, const Tour& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tour file: " + path);
    write_tour(g, t, out);
}

} // namespace ctsp
