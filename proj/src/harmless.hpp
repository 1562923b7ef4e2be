#pragma once

#include "graph.hpp"
#include "solve.hpp"

namespace gdr {

// Maximum harmless set within factor 2: reduce to a kernel, then per
// component either solve exactly or complement a total dominating set found
// on a doubled copy, and lift back through the trace. Throws infeasible_error
// when the input has an isolated vertex, which no harmless set can serve.
solve_result solve_harmless(const graph& g);

} // namespace gdr
