#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/io.hpp"

namespace ctsp {

// One face of an embedded graph, as a closed walk. verts[i] is the tail of
// the i-th dart and edges[i] joins verts[i] to verts[(i+1) % len].
struct Face {
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

struct FaceSet {
    std::vector<Face> faces;
    // face_of[2*e + s] = face owning that dart; every edge lies on exactly
    // two darts, so on two faces (possibly the same one, e.g. a bridge).
    std::vector<int> dart_face;

    int size() const { return static_cast<int>(faces.size()); }

    std::array<int, 2> faces_at(EdgeId e) const {
        return {dart_face[2 * e], dart_face[2 * e + 1]};
    }
};

// Trace the faces of the embedding given by a rotation system. Dart 2e+s
// points from side s of edge e; the face successor of a dart entering v is
// the dart leaving v along the next edge in v's rotation. Orbits of that
// successor map are the faces.
inline FaceSet faces_from_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.size()) != g.num_vertices())
        throw std::invalid_argument("faces_from_rotation: rotation size mismatch");
    std::vector<std::vector<int>> pos(g.num_vertices());  // pos[v][slot] = edge
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto inc = g.incident(v);
        if (rot[v].size() != inc.size())
            throw std::invalid_argument("faces_from_rotation: rotation degree mismatch");
        auto sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != inc)
            throw std::invalid_argument("faces_from_rotation: rotation is not a permutation of incident edges");
    }

    auto dart_tail = [&](int d) {
        const auto& ed = g.edge(d / 2);
        return d % 2 == 0 ? ed.first : ed.second;
    };
    auto dart_head = [&](int d) {
        const auto& ed = g.edge(d / 2);
        return d % 2 == 0 ? ed.second : ed.first;
    };
    auto dart_of = [&](EdgeId e, VertexId tail) {
        return g.edge(e).first == tail ? 2 * e : 2 * e + 1;
    };
    auto next_dart = [&](int d) {
        VertexId v = dart_head(d);
        const auto& r = rot[v];
        size_t i = 0;
        while (r[i] != d / 2) ++i;
        EdgeId e2 = r[(i + 1) % r.size()];
        return dart_of(e2, v);
    };

    FaceSet fs;
    fs.dart_face.assign(2 * g.num_edges(), -1);
    for (int d0 = 0; d0 < 2 * g.num_edges(); ++d0) {
        if (fs.dart_face[d0] != -1) continue;
        Face f;
        int fi = fs.size();
        int d = d0;
        do {
            fs.dart_face[d] = fi;
            f.verts.push_back(dart_tail(d));
            f.edges.push_back(d / 2);
            d = next_dart(d);
        } while (d != d0);
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

inline bool is_spherical(const Graph& g, const FaceSet& fs) {
    return g.num_vertices() - g.num_edges() + fs.size() == 2;
}

} // namespace ctsp
