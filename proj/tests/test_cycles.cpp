#include <catch2/catch_amalgamated.hpp>

#include "ctsp/cycles.hpp"
#include "ctsp/generate.hpp"

using namespace ctsp;

namespace {

Graph tri_prism() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

int count_len(const std::vector<Cycle>& cs, int len) {
    int k = 0;
    for (const auto& c : cs)
        if (c.length() == len) ++k;
    return k;
}

} // namespace

TEST_CASE("short cycle census of the small named graphs", "[cycles]") {
    auto k4_cycles = enumerate_simple_cycles(k4(), 4);
    REQUIRE(count_len(k4_cycles, 3) == 4);
    REQUIRE(count_len(k4_cycles, 4) == 3);
    REQUIRE(k4_cycles.size() == 7);

    // Petersen: girth 5, twelve 5-cycles, ten 6-cycles.
    auto pet = enumerate_simple_cycles(petersen(), 6);
    REQUIRE(count_len(pet, 3) == 0);
    REQUIRE(count_len(pet, 4) == 0);
    REQUIRE(count_len(pet, 5) == 12);
    REQUIRE(count_len(pet, 6) == 10);

    // Triangular prism: 2 triangles, 3 squares, 6 five-cycles, 3 hexagons.
    auto pr = enumerate_simple_cycles(tri_prism(), 6);
    REQUIRE(count_len(pr, 3) == 2);
    REQUIRE(count_len(pr, 4) == 3);
    REQUIRE(count_len(pr, 5) == 6);
    REQUIRE(count_len(pr, 6) == 3);

    // min_len filter.
    REQUIRE(enumerate_simple_cycles(tri_prism(), 6, 5).size() == 9);
}

TEST_CASE("cycles are canonical and sorted", "[cycles]") {
    auto cs = enumerate_simple_cycles(k4(), 4);
    for (const auto& c : cs) {
        REQUIRE(c.verts[0] == *std::min_element(c.verts.begin(), c.verts.end()));
        REQUIRE(c.edges.front() < c.edges.back());
        REQUIRE(c.verts.size() == c.edges.size());
        // Walk consistency.
        for (size_t i = 0; i < c.edges.size(); ++i) {
            auto [u, v] = k4().edge(c.edges[i]);
            VertexId a = c.verts[i], b = c.verts[(i + 1) % c.verts.size()];
            REQUIRE(((u == std::min(a, b)) && (v == std::max(a, b))));
        }
    }
    for (size_t i = 1; i < cs.size(); ++i) REQUIRE(cs[i - 1].length() <= cs[i].length());

    // Same graph assembled differently enumerates the same cycles.
    std::vector<EdgeId> dummy;
    Graph shuffled(4, {{3, 2}, {1, 3}, {2, 1}, {3, 0}, {2, 0}, {1, 0}}, &dummy);
    auto cs2 = enumerate_simple_cycles(shuffled, 4);
    REQUIRE(cs.size() == cs2.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        REQUIRE(cs[i].edges == cs2[i].edges);
        REQUIRE(cs[i].verts == cs2[i].verts);
    }
}

TEST_CASE("parallel edges form their own cycles", "[cycles]") {
    Graph theta(2, {{0, 1}, {0, 1}, {0, 1}});
    auto cs = enumerate_simple_cycles(theta, 6, 2);
    REQUIRE(cs.size() == 3);  // edge pairs {0,1}, {0,2}, {1,2}
    for (const auto& c : cs) REQUIRE(c.length() == 2);
}

TEST_CASE("cycles_from_edge_set splits a 2-regular set", "[cycles]") {
    Graph p = tri_prism();
    std::vector<char> two_triangles(p.num_edges(), 0);
    for (EdgeId e : {0, 1, 3, 6, 7, 8}) two_triangles[e] = 1;
    auto cs = cycles_from_edge_set(p, two_triangles);
    REQUIRE(cs.size() == 2);
    REQUIRE(cs[0].verts == std::vector<VertexId>{0, 1, 2});
    REQUIRE(cs[1].verts == std::vector<VertexId>{3, 4, 5});

    std::vector<char> open(p.num_edges(), 0);
    open[0] = open[3] = 1;  // path 0-1-2
    REQUIRE_THROWS_AS(cycles_from_edge_set(p, open), std::invalid_argument);
}

TEST_CASE("chords of a cycle", "[cycles]") {
    Graph g = k4();
    auto cs = enumerate_simple_cycles(g, 4, 4);
    REQUIRE(cs.size() == 3);
    for (const auto& c : cs) {
        auto ch = chords_of_cycle(g, c);
        REQUIRE(ch.size() == 2);  // the two diagonals
        for (EdgeId e : ch)
            REQUIRE(std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end());
    }

    // Petersen 5-cycles are induced.
    for (const auto& c : enumerate_simple_cycles(petersen(), 5))
        REQUIRE(chords_of_cycle(petersen(), c).empty());
}

TEST_CASE("cycle covers", "[cycles]") {
    Graph p = tri_prism();
    std::vector<char> flags(p.num_edges(), 0);
    for (EdgeId e : {0, 1, 3, 6, 7, 8}) flags[e] = 1;
    CycleCover cover{cycles_from_edge_set(p, flags)};
    REQUIRE(cycle_cover_is_valid(p, cover));
    REQUIRE(cover_edge_flags(p, cover) == flags);

    // A vertex covered twice is rejected.
    CycleCover bad{{cover.cycles[0], cover.cycles[0]}};
    REQUIRE_THROWS_AS(cover_edge_flags(p, bad), std::invalid_argument);
    REQUIRE_FALSE(cycle_cover_is_valid(p, bad));

    // A vertex left out is rejected.
    CycleCover partial{{cover.cycles[0]}};
    REQUIRE_FALSE(cycle_cover_is_valid(p, partial));
}
