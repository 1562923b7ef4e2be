#pragma once

#include "graph.hpp"
#include "solve.hpp"

namespace gdr {

// Maximum k-nonblocker within factor k+1 up to an additive k: reduce to a
// kernel of minimum degree k, complement a k-dominating set of it, and lift
// back through the trace. Kernels small enough are solved exactly, which
// also removes the additive loss. k must be at least two.
solve_result solve_k_nonblocker(const graph& g, int k);

} // namespace gdr
