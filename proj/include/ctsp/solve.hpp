#pragma once

// End-to-end solver for 2-connected cubic graphs: shrink away chorded
// 6-cycles, search the reduced graph (exhaustively below 10 vertices, via
// matching covers otherwise), then lift the tour back through the rewrites.

#include <stdexcept>

#include "ctsp/cover.hpp"
#include "ctsp/oracle.hpp"
#include "ctsp/reduce.hpp"

namespace ctsp {

// Largest tour length within the guarantee for a 2-connected cubic graph:
// floor((4/3 - 1/61236) n - 2). Meaningful from n = 8 up; at n = 6 the
// shaving term dips just below the Hamiltonian length.
inline long two_connected_cap(int n) { return (81647L * n - 122472) / 61236; }

// Tour on a reduced 2-connected cubic graph. Below 10 vertices every such
// graph is Hamiltonian and the exhaustive search is instant; from 10 up the
// matching-cover machinery takes over.
inline Tour reduced_graph_tour(const Graph& g, bool* exact = nullptr) {
    if (g.num_vertices() < 10) {
        auto ham = oracle::hamiltonian_cycle(g);
        if (!ham)
            throw std::logic_error(
                "reduced_graph_tour: 2-connected cubic graphs below 10 vertices are Hamiltonian");
        if (exact) *exact = true;
        return *ham;
    }
    if (exact) *exact = false;
    return best_cover_tour(g);
}

struct SolveReport {
    ReductionTrace trace;
    bool exact = false;  // reduced graph solved by exhaustive search
    Tour reduced_tour;   // tour on trace.reduced
    Tour tour;           // lifted to the input graph
};

inline SolveReport solve_two_connected(const Graph& g) {
    SolveReport r;
    r.trace = reduce_fully(g);
    r.reduced_tour = reduced_graph_tour(r.trace.reduced, &r.exact);
    r.tour = lift_through(r.trace, r.reduced_tour);
    return r;
}

} // namespace ctsp
