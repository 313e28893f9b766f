#include "catch2/catch_amalgamated.hpp"

#include "ctsp/barnette.hpp"
#include "ctsp/generate.hpp"
#include "ctsp/oracle.hpp"

using namespace ctsp;

namespace {

int face_with_verts(const FaceSet& fs, std::vector<VertexId> want) {
    std::sort(want.begin(), want.end());
    for (int f = 0; f < fs.size(); ++f) {
        auto vs = fs.faces[f].verts;
        std::sort(vs.begin(), vs.end());
        if (vs == want) return f;
    }
    return -1;
}

// flags of the edges lying on faces of the given color
std::vector<char> color_class_edges(const Graph& g, const FaceSet& fs,
                                    const std::vector<int>& fc, int color) {
    std::vector<char> flags(g.num_edges(), 0);
    for (int f = 0; f < fs.size(); ++f)
        if (fc[f] == color)
            for (EdgeId e : fs.faces[f].edges) flags[e] = 1;
    return flags;
}

}  // namespace

TEST_CASE("cube faces 3-color with opposite faces matched", "[barnette]") {
    auto c = cube();
    FaceSet fs = faces_from_rotation(c.graph, c.rotation);
    auto fc = three_face_coloring(c.graph, fs);

    int outer = face_with_verts(fs, {0, 1, 2, 3});
    int inner = face_with_verts(fs, {4, 5, 6, 7});
    int side_a = face_with_verts(fs, {0, 1, 5, 4});
    int side_a2 = face_with_verts(fs, {2, 3, 7, 6});
    int side_b = face_with_verts(fs, {1, 2, 6, 5});
    int side_b2 = face_with_verts(fs, {3, 0, 4, 7});
    REQUIRE(outer >= 0);
    REQUIRE(inner >= 0);
    REQUIRE(side_a >= 0);
    REQUIRE(side_a2 >= 0);
    REQUIRE(side_b >= 0);
    REQUIRE(side_b2 >= 0);

    CHECK(fc[outer] == fc[inner]);
    CHECK(fc[side_a] == fc[side_a2]);
    CHECK(fc[side_b] == fc[side_b2]);
    CHECK(fc[outer] != fc[side_a]);
    CHECK(fc[outer] != fc[side_b]);
    CHECK(fc[side_a] != fc[side_b]);

    auto ec = edge_colors_from_faces(c.graph, fs, fc);
    // each edge class is a perfect matching: 4 edges, all 8 endpoints distinct
    for (int col = 1; col <= 3; ++col) {
        std::vector<char> hit(c.graph.num_vertices(), 0);
        int cnt = 0;
        for (EdgeId e = 0; e < c.graph.num_edges(); ++e) {
            if (ec[e] != col) continue;
            ++cnt;
            auto [u, v] = c.graph.edge(e);
            REQUIRE(!hit[u]);
            REQUIRE(!hit[v]);
            hit[u] = hit[v] = 1;
        }
        CHECK(cnt == 4);
    }
    // the classes of two colors are exactly the edges of the third's faces
    for (int k = 1; k <= 3; ++k) {
        auto face_edges = color_class_edges(c.graph, fs, fc, k);
        for (EdgeId e = 0; e < c.graph.num_edges(); ++e)
            CHECK((ec[e] != k) == (face_edges[e] == 1));
    }
}

TEST_CASE("prism faces color as caps plus alternating squares", "[barnette]") {
    for (int k : {3, 4, 5}) {
        auto pr = even_prism(k);
        FaceSet fs = faces_from_rotation(pr.graph, pr.rotation);
        auto fc = three_face_coloring(pr.graph, fs);
        const int L = 2 * k;

        std::vector<VertexId> top(L), bottom(L);
        for (int i = 0; i < L; ++i) {
            top[i] = i;
            bottom[i] = L + i;
        }
        int ftop = face_with_verts(fs, top);
        int fbot = face_with_verts(fs, bottom);
        REQUIRE(ftop >= 0);
        REQUIRE(fbot >= 0);
        CHECK(fc[ftop] == fc[fbot]);

        std::vector<int> side(L);
        for (int i = 0; i < L; ++i) {
            side[i] = face_with_verts(fs, {i, (i + 1) % L, L + (i + 1) % L, L + i});
            REQUIRE(side[i] >= 0);
            CHECK(fc[side[i]] != fc[ftop]);
        }
        for (int i = 0; i < L; ++i) {
            CHECK(fc[side[i]] != fc[side[(i + 1) % L]]);
            CHECK(fc[side[i]] == fc[side[(i + 2) % L]]);
        }
    }
}

TEST_CASE("coloring rejects inputs with odd faces", "[barnette]") {
    Graph g = k4();
    auto rot = rotation_from_faces(g, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}});
    FaceSet fs = faces_from_rotation(g, rot);
    REQUIRE(fs.size() == 4);
    for (const Face& f : fs.faces) REQUIRE(f.length() == 3);
    REQUIRE_THROWS_AS(three_face_coloring(g, fs), std::invalid_argument);
}

TEST_CASE("alternating a cube side face merges the caps", "[barnette]") {
    auto c = cube();
    FaceSet fs = faces_from_rotation(c.graph, c.rotation);
    int outer = face_with_verts(fs, {0, 1, 2, 3});
    int inner = face_with_verts(fs, {4, 5, 6, 7});
    int side = face_with_verts(fs, {0, 1, 5, 4});

    std::vector<char> flags(c.graph.num_edges(), 0);
    for (EdgeId e : fs.faces[outer].edges) flags[e] = 1;
    for (EdgeId e : fs.faces[inner].edges) flags[e] = 1;
    REQUIRE(cycles_from_edge_set(c.graph, flags).size() == 2);

    REQUIRE(face_is_alternating(fs.faces[side], flags));
    auto before = flags;
    alternate_face(fs.faces[side], flags);
    auto merged = cycles_from_edge_set(c.graph, flags);
    REQUIRE(merged.size() == 1);
    REQUIRE(merged[0].length() == 8);

    // involution: a second alternation restores the cover
    alternate_face(fs.faces[side], flags);
    CHECK(flags == before);

    // the caps themselves sit fully inside the cover, so they do not alternate
    CHECK_FALSE(face_is_alternating(fs.faces[outer], flags));
    CHECK_THROWS_AS(alternate_face(fs.faces[outer], flags), std::invalid_argument);
}

TEST_CASE("cube and hexagonal prism reach Hamiltonian covers", "[barnette]") {
    auto c = cube();
    BarnetteRun run = barnette_tour(c.graph, c.rotation);
    REQUIRE(run.best_cover().cycles.size() == 1);
    CHECK(run.tour.length() == 8);
    CHECK(oracle::verify_tour(c.graph, run.tour));
    CHECK(run.tour.length() == oracle::held_karp_opt(c.graph));
    auto audit = audit_barnette_bounds(c.graph, run);
    CHECK(audit.ok());
    CHECK(audit.face4 == 6);

    auto hp = even_prism(3);
    BarnetteRun hrun = barnette_tour(hp.graph, hp.rotation);
    REQUIRE(hrun.best_cover().cycles.size() == 1);
    CHECK(hrun.tour.length() == 12);
    CHECK(oracle::verify_tour(hp.graph, hrun.tour));
    auto haudit = audit_barnette_bounds(hp.graph, hrun);
    CHECK(haudit.ok());
    CHECK(haudit.face4 == 6);
}

TEST_CASE("cover and tour bounds hold across the planar family", "[barnette]") {
    std::vector<Embedded> instances;
    for (int k = 2; k <= 10; ++k) instances.push_back(even_prism(k));
    instances.push_back(truncated_octahedron());

    for (const auto& inst : instances) {
        const Graph& g = inst.graph;
        int n = g.num_vertices();
        BarnetteRun run = barnette_tour(g, inst.rotation);

        int cov = static_cast<int>(run.best_cover().cycles.size());
        CHECK(36 * cov <= 5 * n + 14);
        CHECK(run.tour.length() == n + 2 * cov - 2);
        CHECK(18 * run.tour.length() <= 23 * n - 22);
        CHECK(oracle::verify_tour(g, run.tour));

        auto audit = audit_barnette_bounds(g, run);
        INFO("n = " << n);
        for (const auto& v : audit.violations) INFO(v);
        CHECK(audit.ok());

        for (const auto& r : run.runs) {
            CHECK(r.size() >= 1);
            CHECK(r.size() <= r.initial_cycles);
            std::string why;
            CHECK(cycle_cover_is_valid(g, r.cover, &why));
        }
    }
}
