#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ctsp/cycles.hpp"
#include "ctsp/eulerian_cover.hpp"
#include "ctsp/generate.hpp"
#include "ctsp/oracle.hpp"

using namespace ctsp;

namespace {

Graph tri_prism() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

} // namespace

TEST_CASE("metric closure distances", "[oracle]") {
    auto mc = oracle::metric_closure(petersen());
    int diam = 0;
    for (auto& row : mc.dist)
        for (int d : row) diam = std::max(diam, d);
    REQUIRE(diam == 2);

    Graph two(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(oracle::metric_closure(two), std::invalid_argument);
}

TEST_CASE("optimal tour lengths of the named graphs", "[oracle]") {
    REQUIRE(oracle::held_karp_opt(k4()) == 4);
    REQUIRE(oracle::held_karp_opt(k33()) == 6);
    REQUIRE(oracle::held_karp_opt(tri_prism()) == 6);
    REQUIRE(oracle::held_karp_opt(cube().graph) == 8);
    REQUIRE(oracle::held_karp_opt(even_prism(3).graph) == 12);
    // Petersen is hypohamiltonian: no length-10 tour exists.
    REQUIRE(oracle::held_karp_opt(petersen()) == 11);
}

TEST_CASE("two optimum computations agree", "[oracle]") {
    for (const Graph& g : {k4(), k33(), tri_prism(), petersen(), cube().graph,
                           random_cubic(8, 5), random_cubic(10, 6)}) {
        REQUIRE(oracle::held_karp_opt(g) == oracle::permutation_opt(g));
    }
    REQUIRE_THROWS_AS(oracle::held_karp_opt(random_cubic(20, 1)), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle::permutation_opt(random_cubic(12, 1)), std::invalid_argument);
}

TEST_CASE("hamiltonian cycle search", "[oracle]") {
    auto hc = oracle::hamiltonian_cycle(cube().graph);
    REQUIRE(hc.has_value());
    REQUIRE(hc->length() == 8);
    REQUIRE(oracle::verify_tour(cube().graph, *hc));

    REQUIRE_FALSE(oracle::hamiltonian_cycle(petersen()).has_value());

    // Multigraph: the 2-vertex theta graph has a 2-cycle through distinct
    // parallel edges.
    Graph theta(2, {{0, 1}, {0, 1}, {0, 1}});
    auto tc = oracle::hamiltonian_cycle(theta);
    REQUIRE(tc.has_value());
    REQUIRE(tc->length() == 2);
    int used = 0;
    for (int m : tc->mult) {
        REQUIRE(m <= 1);
        used += m;
    }
    REQUIRE(used == 2);
}

TEST_CASE("tour verifier agrees with the builder-side check", "[oracle]") {
    Graph p = tri_prism();
    std::vector<Tour> cases = {
        tour_from_edges(p, {0, 4, 6, 7, 5, 1}),           // hamiltonian
        tour_from_edges(p, {0, 4, 6, 7, 5, 1, 2, 2}),     // plus a doubled edge
        tour_from_edges(p, {0, 1, 3}),                    // one triangle only
        tour_from_edges(p, {0, 1, 3, 6, 7, 8}),           // two disjoint triangles
        tour_from_edges(p, {0, 4, 6, 7, 5}),              // open walk
        empty_tour(p),
    };
    for (const Tour& t : cases) REQUIRE(oracle::verify_tour(p, t) == tour_is_valid(p, t));
}

TEST_CASE("cover verifier accepts a disjoint cycle cover and catches tampering", "[oracle]") {
    Graph p = tri_prism();
    std::vector<char> flags(p.num_edges(), 0);
    for (EdgeId e : {0, 1, 3, 6, 7, 8}) flags[e] = 1;
    auto cover = cover_from_cycles(p, cycles_from_edge_set(p, flags));
    REQUIRE(cover.size() == 2);
    REQUIRE(cover_is_valid(p, cover));
    REQUIRE(oracle::verify_cover(p, cover));

    auto broken = cover;
    broken.comp_of[3] = 0;
    REQUIRE_FALSE(oracle::verify_cover(p, broken));
    REQUIRE_FALSE(cover_is_valid(p, broken));

    auto odd = cover;
    odd.comps[0].edges[0].second = 2;  // doubling one triangle edge breaks degrees
    REQUIRE_FALSE(oracle::verify_cover(p, odd));
}

TEST_CASE("three-cut oracle matches the enumerator", "[oracle]") {
    for (const Graph& g : {k4(), k33(), tri_prism(), petersen(), random_cubic(12, 9)}) {
        auto from_oracle = oracle::three_cut_oracle(g);
        auto cuts = enumerate_three_cuts(g);
        std::vector<std::array<EdgeId, 3>> from_enum;
        for (const auto& c : cuts) from_enum.push_back(c.cut);
        std::sort(from_oracle.begin(), from_oracle.end());
        std::sort(from_enum.begin(), from_enum.end());
        REQUIRE(from_oracle == from_enum);
    }
}
