#pragma once

#include "graph.hpp"
#include "solve.hpp"

namespace gdr {

// Maximum differential within factor 11/3: reduce to a kernel, strip the
// fringe of pendants and hairs, solve each remaining component exactly when
// small or by star packing when large, and lift back through the trace.
solve_result solve_differential(const graph& g);

} // namespace gdr
