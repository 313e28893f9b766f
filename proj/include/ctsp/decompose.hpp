#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/matching.hpp"
#include "ctsp/rational.hpp"

namespace ctsp {

// Convex combination of perfect matchings hitting every edge with total
// weight exactly 1/3. Only the support is stored; weights are positive
// exact rationals summing to 1.
struct MatchingDistribution {
    std::vector<std::vector<EdgeId>> matchings;
    std::vector<Rat> lambda;

    int size() const { return static_cast<int>(matchings.size()); }
};

namespace detail {

// Phase-1 simplex over exact rationals: find x >= 0 with Ax = b (b >= 0
// entrywise), minimizing the artificial total. Bland's rule on both the
// entering and leaving choices makes it finite and deterministic. Returns
// a basic solution, so at most `rows` entries of x are nonzero.
inline std::optional<std::vector<Rat>> nonnegative_solve(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    const int total = cols + rows;  // real variables then artificials

    // Tableau: rows constraint rows + objective row; last column is rhs.
    std::vector<std::vector<Rat>> T(rows + 1, std::vector<Rat>(total + 1, Rat(0)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) T[i][j] = A[i][j];
        T[i][cols + i] = 1;
        T[i][total] = b[i];
    }
    // Objective: minimize sum of artificials. With the artificial basis the
    // reduced-cost row is minus the sum of the constraint rows on the real
    // columns.
    for (int j = 0; j <= total; ++j) {
        Rat s(0);
        for (int i = 0; i < rows; ++i) s += T[i][j];
        if (j < cols || j == total) T[rows][j] = -s;
    }
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = cols + i;

    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (T[rows][j] < 0) {
                enter = j;
                break;
            }
        if (enter == -1) break;
        int leave = -1;
        Rat best(0);
        for (int i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][total] / T[i][enter];
            if (leave == -1 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == -1) return std::nullopt;  // unbounded; cannot happen here
        Rat piv = T[leave][enter];
        for (int j = 0; j <= total; ++j) T[leave][j] /= piv;
        for (int i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            Rat f = T[i][enter];
            if (f == 0) continue;
            for (int j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    if (T[rows][total] != 0) return std::nullopt;  // artificials stuck positive
    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < rows; ++i)
        if (basis[i] < cols) x[basis[i]] = T[i][total];
    return x;
}

} // namespace detail

// Convex weights over the given matchings putting weight exactly 1/3 on
// every edge. Tries the uniform weighting first (it is the natural answer
// whenever the matching family is edge-transitive enough, e.g. the
// symmetric named graphs); otherwise finds a basic solution by simplex,
// which keeps the support at most |E|+1.
inline MatchingDistribution decompose_over(const Graph& g,
                                           const std::vector<std::vector<EdgeId>>& ms) {
    const int m = g.num_edges();
    const int k = static_cast<int>(ms.size());
    if (k == 0) throw std::invalid_argument("decompose_over: no matchings given");

    std::vector<int> cover(m, 0);
    for (const auto& match : ms)
        for (EdgeId e : match) cover[e]++;

    MatchingDistribution out;
    bool uniform_ok = (k % 3 == 0) && (k <= m + 1);
    for (int e = 0; e < m && uniform_ok; ++e)
        if (cover[e] * 3 != k) uniform_ok = false;
    if (uniform_ok) {
        out.matchings = ms;
        out.lambda.assign(k, Rat(1) / k);
        return out;
    }

    // One row per edge; the weights summing to 1 is implied (each matching
    // covers n/2 of the m = 3n/2 edges).
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (EdgeId e : ms[i]) A[e][i] = 1;
    std::vector<Rat> b(m, rat(1, 3));
    auto x = detail::nonnegative_solve(A, b);
    if (!x) throw std::runtime_error("decompose_over: no convex combination exists");
    for (int i = 0; i < k; ++i) {
        if ((*x)[i] == 0) continue;
        out.matchings.push_back(ms[i]);
        out.lambda.push_back((*x)[i]);
    }
    return out;
}

// Full pipeline: enumerate the 3-cut perfect matchings and weight them.
inline MatchingDistribution decompose_three_cut_matchings(const Graph& g) {
    if (!is_two_connected_cubic(g))
        throw std::invalid_argument("decompose: graph is not 2-connected cubic");
    auto ms = three_cut_perfect_matchings(g);
    if (ms.empty()) throw std::runtime_error("decompose: no 3-cut perfect matchings");
    return decompose_over(g, ms);
}

inline bool distribution_is_valid(const Graph& g, const MatchingDistribution& d,
                                  std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (d.matchings.size() != d.lambda.size() || d.matchings.empty())
        return fail("distribution: size mismatch or empty");
    auto cuts = enumerate_three_cuts(g);
    std::vector<Rat> weight(g.num_edges(), Rat(0));
    Rat total(0);
    for (int i = 0; i < d.size(); ++i) {
        if (d.lambda[i] <= 0) return fail("distribution: nonpositive weight");
        total += d.lambda[i];
        std::vector<char> hit(g.num_vertices(), 0);
        for (EdgeId e : d.matchings[i]) {
            auto [u, v] = g.edge(e);
            if (hit[u] || hit[v]) return fail("distribution: not a matching");
            hit[u] = hit[v] = 1;
            weight[e] += d.lambda[i];
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (!hit[v]) return fail("distribution: matching not perfect");
        if (!is_three_cut_perfect(g, d.matchings[i], cuts))
            return fail("distribution: matching not 3-cut perfect");
    }
    if (total != 1) return fail("distribution: weights do not sum to 1");
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (weight[e] != rat(1, 3))
            return fail("distribution: edge " + std::to_string(e) + " weight is " + rat_str(weight[e]));
    return true;
}

} // namespace ctsp
