#include <catch2/catch_amalgamated.hpp>

#include "ctsp/generate.hpp"
#include "ctsp/graph.hpp"

using namespace ctsp;

namespace {

// Triangular prism, edges listed out of canonical order on purpose.
Graph tri_prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace

TEST_CASE("edge ids are canonical regardless of input order", "[graph]") {
    std::vector<EdgeId> map1, map2;
    Graph a(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, &map1);
    Graph b(4, {{3, 2}, {1, 3}, {2, 1}, {3, 0}, {2, 0}, {1, 0}}, &map2);
    REQUIRE(a.edges() == b.edges());
    REQUIRE(map1 == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
    REQUIRE(map2 == std::vector<EdgeId>{5, 4, 3, 2, 1, 0});

    // Canonical order of the triangular prism, checked by hand.
    Graph p = tri_prism();
    REQUIRE(p.edges() == std::vector<std::pair<VertexId, VertexId>>{
                             {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

TEST_CASE("construction rejects bad edges", "[graph]") {
    REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("adjacency helpers", "[graph]") {
    Graph p = tri_prism();
    REQUIRE(p.degree(0) == 3);
    REQUIRE(p.incident(0) == std::vector<EdgeId>{0, 1, 2});
    REQUIRE(p.other_end(2, 0) == 3);
    REQUIRE(p.adjacent(0, 3));
    REQUIRE_FALSE(p.adjacent(0, 4));
    REQUIRE(p.edges_between(0, 3) == std::vector<EdgeId>{2});

    Graph theta(2, {{0, 1}, {0, 1}, {0, 1}});
    REQUIRE(theta.num_edges() == 3);
    REQUIRE(theta.edges_between(0, 1).size() == 3);
    REQUIRE(has_parallel_edges(theta));
    REQUIRE_FALSE(has_parallel_edges(p));
}

TEST_CASE("validate reports shape", "[graph]") {
    auto r = validate(petersen());
    REQUIRE(r.connected);
    REQUIRE(r.cubic);
    REQUIRE(r.simple);
    REQUIRE(r.min_degree == 3);
    REQUIRE(r.max_degree == 3);

    Graph path(3, {{0, 1}, {1, 2}});
    auto rp = validate(path);
    REQUIRE(rp.connected);
    REQUIRE_FALSE(rp.cubic);
    REQUIRE(rp.subcubic);
}

TEST_CASE("tour validity", "[graph]") {
    Graph p = tri_prism();

    // Hamiltonian cycle 0-1-4-3-5-2-0, one unit per edge.
    Tour ham = tour_from_edges(p, {0, 4, 6, 7, 5, 1});
    REQUIRE(tour_is_valid(p, ham));
    REQUIRE(ham.length() == 6);

    // Doubling an edge keeps degrees even.
    Tour doubled = tour_from_edges(p, {0, 4, 6, 7, 5, 1, 2, 2});
    REQUIRE(tour_is_valid(p, doubled));
    REQUIRE(doubled.length() == 8);

    std::string why;
    Tour odd = tour_from_edges(p, {0, 1, 3});  // triangle misses 3,4,5
    REQUIRE_FALSE(tour_is_valid(p, odd, &why));
    REQUIRE(why.find("not visited") != std::string::npos);

    Tour open = tour_from_edges(p, {0, 4, 6, 7, 5});  // one edge short of the cycle
    REQUIRE_FALSE(tour_is_valid(p, open, &why));

    Tour both_triangles = tour_from_edges(p, {0, 1, 3, 6, 7, 8});
    REQUIRE_FALSE(tour_is_valid(p, both_triangles, &why));
    REQUIRE(why.find("disconnected") != std::string::npos);

    Tour over = empty_tour(p);
    over.mult[0] = 3;
    REQUIRE_FALSE(tour_is_valid(p, over, &why));
}

TEST_CASE("bridges and blocks", "[graph]") {
    // Two triangles joined by one edge: that edge is the only bridge.
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto bd = bridges_and_blocks(g);
    REQUIRE(bd.bridges == std::vector<EdgeId>{3});
    REQUIRE(bd.components.size() == 2);
    REQUIRE(bd.components[0] == std::vector<VertexId>{0, 1, 2});
    REQUIRE(bd.components[1] == std::vector<VertexId>{3, 4, 5});
    REQUIRE(bd.singletons.empty());

    // Star: every edge is a bridge, every vertex a singleton.
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto sd = bridges_and_blocks(star);
    REQUIRE(sd.bridges.size() == 3);
    REQUIRE(sd.components.size() == 4);
    REQUIRE(sd.singletons == std::vector<VertexId>{0, 1, 2, 3});

    // Parallel edges are never bridges.
    Graph theta(2, {{0, 1}, {0, 1}, {0, 1}});
    REQUIRE(is_bridgeless(theta));
    REQUIRE(is_two_connected_cubic(theta));

    REQUIRE(is_two_connected_cubic(tri_prism()));
    REQUIRE_FALSE(is_two_connected_cubic(star));
}

TEST_CASE("three-edge cuts of the small named graphs", "[graph]") {
    // K4, K3,3 and Petersen only have the vertex stars.
    REQUIRE(enumerate_three_cuts(k4()).size() == 4);
    REQUIRE(enumerate_three_cuts(k33()).size() == 6);
    REQUIRE(enumerate_three_cuts(petersen()).size() == 10);

    for (const auto& cut : enumerate_three_cuts(k4())) {
        REQUIRE(cut.side.size() == 1);
    }

    // Triangular prism: six stars plus the spoke cut {02-edge, 14, 25}.
    Graph p = tri_prism();
    auto cuts = enumerate_three_cuts(p);
    REQUIRE(cuts.size() == 7);
    bool saw_spokes = false;
    for (const auto& cut : cuts) {
        if (cut.cut == std::array<EdgeId, 3>{2, 4, 5}) {
            saw_spokes = true;
            REQUIRE(cut.side == std::vector<VertexId>{0, 1, 2});  // tie toward vertex 0
        }
    }
    REQUIRE(saw_spokes);
}

TEST_CASE("contraction keeps crossing edges and their origins", "[graph]") {
    Graph p = tri_prism();
    auto c = contract_parts(p, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE(c.quotient.num_vertices() == 2);
    REQUIRE(c.quotient.num_edges() == 3);
    REQUIRE(c.edge_origin == std::vector<EdgeId>{2, 4, 5});
    REQUIRE(c.part_of == std::vector<int>{0, 0, 0, 1, 1, 1});

    REQUIRE_THROWS_AS(contract_parts(p, {{0, 1}, {2, 3, 4, 5}, {0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(contract_parts(p, {{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("spanning tree is deterministic", "[graph]") {
    REQUIRE(spanning_tree(tri_prism()) == std::vector<EdgeId>{0, 1, 2, 4, 5});
    Graph two(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(spanning_tree(two), std::invalid_argument);
}
