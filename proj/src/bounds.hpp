#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace gdr {

// Per-component breakdown of a certified bound. For exactly solved small
// components the claim is the optimum itself, so achieved <= claimed holds
// unconditionally across entries.
struct bound_entry {
    int n = 0;
    int claimed = 0;
    int achieved = 0;
    std::string method;  // "heuristic", "exact", or "constructive"
};

// Certificate that a returned solution meets a combinatorial size bound.
// achieved <= claimed is a hard postcondition of every producing routine.
struct bound_certificate {
    std::string bound_kind;  // "tds_half", "ds_two_fifths", or "kds_fraction"
    int n = 0;
    int claimed = 0;
    int achieved = 0;
    bool fallback_used = false;
    int additive_slack = 0;
    std::vector<bound_entry> components;
};

// Smallest vertex of a component of three or more degree-two vertices in the
// subgraph they induce, -1 when every such component has at most two. The -1
// outcome is the structural condition under which the n/2 total domination
// bound below is guaranteed.
int degree_two_run(const graph& g);

// Total dominating set of size at most n/2. Requires a connected graph with
// minimum degree two; callers iterate components. Graphs containing a
// degree-two run are accepted only when the exact solver fits and its optimum
// meets the bound, otherwise precondition_error names the run. Throws
// bound_not_certified when the heuristic misses the bound on a graph too
// large to solve exactly.
std::pair<std::vector<int>, bound_certificate> bounded_tds(const graph& g);

// Dominating set with at most floor(2n/5) vertices on every component of
// order eight or more; components of order seven or less are solved exactly
// and may exceed that fraction. Requires minimum degree two on every
// component. Throws bound_not_certified as above.
std::pair<std::vector<int>, bound_certificate> bounded_ds(const graph& g);

// k-dominating set with at most floor(kn/(k+1)) vertices, built by the
// independent-set growing construction. Requires minimum degree k. Never
// falls back: the construction is guaranteed to meet the bound.
std::pair<std::vector<int>, bound_certificate> bounded_kds(const graph& g, int k);

} // namespace gdr
