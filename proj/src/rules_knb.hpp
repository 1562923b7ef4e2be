#pragma once

#include <memory>
#include <vector>

#include "engine.hpp"

namespace gdr {

// Reduction rules for the k-nonblocker problem (k >= 2). A vertex is low
// when its degree is below k; low vertices are never in any solution.
//
//   knb.low_degree_deletion  drop a low vertex whose neighbors are all low,
//                            or a leaf under a vertex with more than k low
//                            neighbors                                   (0,0)
//   knb.low_degree_merging   delete every low vertex at once and attach a
//                            complete bipartite k-by-k gadget; each vertex
//                            that lost q low neighbors is wired to min(q, k)
//                            gadget vertices. Raises the optimum by exactly
//                            k, so lifted solutions give back k.          (k,k)
//
// After merging the graph has minimum degree at least k.
std::vector<std::unique_ptr<rule>> knb_rules(int k);

} // namespace gdr
