#include <catch2/catch_amalgamated.hpp>

#include "ctsp/contributions.hpp"
#include "ctsp/cover.hpp"
#include "ctsp/generate.hpp"
#include "ctsp/oracle.hpp"

using namespace ctsp;

namespace {

Graph tri_prism() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// Hexagon 0..5 with a square hung on every other hexagon edge and the square
// tips joined in a ring; cubic, 2-connected, 12 vertices. The three squares
// form a cover that the hexagon merges in one step.
Graph ring_of_squares() {
    return Graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                      {1, 7}, {6, 7}, {0, 6}, {3, 9}, {8, 9}, {2, 8},
                      {5, 11}, {10, 11}, {4, 10}, {7, 8}, {9, 10}, {6, 11}});
}

EulerianCover cover_from_flags(const Graph& g, const std::vector<EdgeId>& ids) {
    std::vector<char> flags(g.num_edges(), 0);
    for (EdgeId e : ids) flags[e] = 1;
    return cover_from_cycles(g, cycles_from_edge_set(g, flags));
}

} // namespace

TEST_CASE("tour_from_cover doubles a connector between components", "[cover]") {
    Graph p = tri_prism();
    auto cover = cover_from_flags(p, {0, 1, 3, 6, 7, 8});  // the two triangles
    REQUIRE(cover.size() == 2);
    Tour t = tour_from_cover(p, cover);
    REQUIRE(t.length() == 8);
    REQUIRE(t.mult[2] == 2);  // lowest spoke, doubled
    REQUIRE(tour_is_valid(p, t));
}

TEST_CASE("six-cycle merge fuses three squares into one cycle", "[cover]") {
    Graph g = ring_of_squares();
    REQUIRE(is_two_connected_cubic(g));
    // The three squares, by their edges.
    std::vector<EdgeId> square_edges;
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {0, 1}, {1, 7}, {6, 7}, {0, 6}, {2, 3}, {3, 9}, {8, 9}, {2, 8},
             {4, 5}, {5, 11}, {10, 11}, {4, 10}})
        square_edges.push_back(g.edges_between(u, v).at(0));
    auto cover = cover_from_flags(g, square_edges);
    REQUIRE(cover.size() == 3);

    auto cand = merge_candidates(g);
    bool fired = false;
    for (const Cycle& c : cand.hexes)
        if (try_six_cycle_merge(g, cover, c)) {
            fired = true;
            break;
        }
    REQUIRE(fired);
    REQUIRE(cover.size() == 1);
    REQUIRE(cover.comps[0].kind == ComponentKind::HexMerge);
    REQUIRE(cover.comps[0].vertex_count() == 12);
    REQUIRE(cover.comps[0].edge_count() == 12);
    REQUIRE(cover_is_valid(g, cover));
    Tour t = tour_from_cover(g, cover);
    REQUIRE(t.length() == 12);
    REQUIRE(oracle::verify_tour(g, t));
}

TEST_CASE("four-cycle merge fuses the cube's two faces", "[cover]") {
    Graph g = cube().graph;
    // Complement of the all-spokes matching: top and bottom squares.
    std::vector<EdgeId> faces;
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}})
        faces.push_back(g.edges_between(u, v).at(0));
    auto cover = cover_from_flags(g, faces);
    REQUIRE(cover.size() == 2);

    auto cand = merge_candidates(g);
    bool fired = false;
    for (const Cycle& c : cand.quads)
        if (try_four_cycle_merge(g, cover, c)) {
            fired = true;
            break;
        }
    REQUIRE(fired);
    REQUIRE(cover.size() == 1);
    REQUIRE(cover.comps[0].kind == ComponentKind::QuadMerge);
    REQUIRE(cover.comps[0].vertex_count() == 8);
    REQUIRE(tour_from_cover(g, cover).length() == 8);
}

TEST_CASE("five-cycle merge solves Petersen optimally", "[cover]") {
    Graph g = petersen();
    auto fam = build_cover_family(g);
    REQUIRE(fam.dist.size() == 6);
    for (int i = 0; i < 6; ++i) {
        // Every matching complement is two 5-cycles; one pentagon merge
        // fuses them into a 10-vertex component with at most 11 edges.
        REQUIRE(fam.initial[i].size() == 2);
        REQUIRE(fam.after_u1[i].size() == 2);   // no 6-cycle can fire on 2 comps of 5
        REQUIRE(fam.after_u2[i].size() == 2);   // girth 5, no 4-cycles
        REQUIRE(fam.finals[i].size() == 1);
        REQUIRE(fam.finals[i].comps[0].kind == ComponentKind::PentMerge);
        REQUIRE(fam.tours[i].length() == 11);
        REQUIRE(oracle::verify_tour(g, fam.tours[i]));
    }
    REQUIRE(fam.best_tour().length() == oracle::held_karp_opt(g));
}

TEST_CASE("cover pipeline reaches the optimum on prisms", "[cover]") {
    REQUIRE(best_cover_tour(cube().graph).length() == 8);
    Graph p6 = even_prism(3).graph;
    Tour t = best_cover_tour(p6);
    REQUIRE(t.length() == 12);
    REQUIRE(oracle::verify_tour(p6, t));
}

TEST_CASE("contribution audit on Petersen", "[cover]") {
    Graph g = petersen();
    auto fam = build_cover_family(g);
    auto rep = audit_contributions(g, fam);
    for (const auto& msg : rep.violations) UNSCOPED_INFO(msg);
    REQUIRE(rep.ok());
    for (VertexId v = 0; v < 10; ++v) {
        REQUIRE(rep.z[v] == rat(13, 10));
        REQUIRE(rep.pattern[v] == 6);
    }
    REQUIRE(rep.total == 13);
    REQUIRE(rep.total <= rep.global_bound);
}

TEST_CASE("covers and tours stay valid on random reduced-free inputs", "[cover]") {
    // Random 2-connected cubic graphs: the structural guarantees (valid
    // covers, valid tours) hold whether or not the graph is reduced.
    for (int n : {10, 12, 14}) {
        for (std::uint64_t seed : {3ull, 8ull}) {
            Graph g = random_cubic(n, seed);
            auto fam = build_cover_family(g);
            for (int i = 0; i < fam.dist.size(); ++i) {
                REQUIRE(cover_is_valid(g, fam.finals[i]));
                REQUIRE(oracle::verify_cover(g, fam.finals[i]));
                REQUIRE(oracle::verify_tour(g, fam.tours[i]));
            }
            REQUIRE(fam.best_tour().length() <= 2 * n);
        }
    }
}
