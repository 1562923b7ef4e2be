#pragma once

#include "graph.hpp"
#include "solve.hpp"

namespace gdr {

// Maximum nonblocker within factor 5/3: reduce to a kernel, solve the kernel
// exactly when it is small, otherwise complement a dominating set of the
// doubled kernel, and lift the answer back through the trace.
solve_result solve_nonblocker(const graph& g);

} // namespace gdr
