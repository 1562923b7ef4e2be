#pragma once

#include <vector>

#include "graph.hpp"

namespace gdr {

// Centers of a family of vertex-disjoint stars, each with at least two rays,
// grown greedily and then rebalanced by local improvements. Intended for
// connected graphs of minimum degree two; callers check the value of the
// returned set and fall back when the improvements stall early.
std::vector<int> star_pack_centers(const graph& g);

} // namespace gdr
