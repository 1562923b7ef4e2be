#pragma once

#include <vector>

#include "graph.hpp"

namespace gdr {

// Default size cap for exhaustive solvers. The differential maximizer prunes
// well enough to afford a few more vertices.
inline constexpr int exact_bound_default = 20;
inline constexpr int exact_bound_differential = 24;

// Feasibility checks, exact per definition, usable at any graph size.
// Vertex arguments must be subsets of V(g).
bool is_dominating_set(const graph& g, const std::vector<int>& d);
bool is_total_dominating_set(const graph& g, const std::vector<int>& d);
bool is_k_dominating_set(const graph& g, const std::vector<int>& d, int k);
bool is_nonblocker(const graph& g, const std::vector<int>& s);
bool is_harmless_set(const graph& g, const std::vector<int>& s);
bool is_k_nonblocker(const graph& g, const std::vector<int>& s, int k);

// |N(d0) \ d0| - |d0|; may be negative.
long differential_value(const graph& g, const std::vector<int>& d0);

// Exhaustive exact solvers. Subsets are enumerated by increasing cardinality,
// lexicographically within one cardinality, so results are deterministic.
// All throw too_large_error when the graph exceeds the bound.
std::vector<int> exact_min_dominating_set(const graph& g, int bound = exact_bound_default);

// Throws infeasible_error when g has an isolated vertex.
std::vector<int> exact_min_total_dominating_set(const graph& g, int bound = exact_bound_default);

std::vector<int> exact_min_k_dominating_set(const graph& g, int k, int bound = exact_bound_default);

// Roman domination: zero/one/two label classes, weight = 2|two| + |one|.
// Every zero vertex has a neighbor in two.
struct roman_partition {
    std::vector<int> zero, one, two;
    long weight = 0;
};
roman_partition exact_min_roman(const graph& g, int bound = exact_bound_default);

// Maximizer of the differential. Depth-first include/exclude search over
// vertices in ascending id order with a dominance prune (a vertex whose whole
// neighborhood is already absorbed is never included).
std::vector<int> exact_max_differential_set(const graph& g, int bound = exact_bound_differential);
long exact_differential(const graph& g, int bound = exact_bound_differential);

// Maximum-cardinality feasible sets, found by enumerating subsets in
// decreasing cardinality. Independent of the minimization solvers so the
// complement identities can be tested rather than assumed.
long exact_max_nonblocker(const graph& g, int bound = exact_bound_default);
// Throws infeasible_error when g has an isolated vertex.
long exact_max_harmless(const graph& g, int bound = exact_bound_default);
long exact_max_k_nonblocker(const graph& g, int k, int bound = exact_bound_default);

// Minimum total dominating set of a path, by dynamic programming over the
// given path order. Works for any length; throws infeasible_error on a
// single-vertex path.
std::vector<int> path_total_dominating_set(const std::vector<int>& path_vertices);

} // namespace gdr
