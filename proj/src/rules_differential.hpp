#pragma once

#include <memory>
#include <vector>

#include "engine.hpp"

namespace gdr {

// Reduction rules for the differential problem, in pipeline priority order:
//
//   differential.leaf_pair     join two leaves under one parent by an edge (0,0)
//   differential.hair_pair     drop the tips of two hairs on one vertex   (0,0)
//   differential.leaf_hair     drop a hair tip next to a plain leaf       (0,0)
//   differential.long_hair     drop a hair hanging off a degree-two vertex
//                              together with that vertex                  (1,1)
//   differential.neighbor_hair disconnect two adjacent hair carriers      (0,0)
//
// A hair at w is a path w-v-u with degree(v) = 2 and degree(u) = 1. The
// priority order matters: long_hair runs before neighbor_hair so that edge
// removals never create new leaves inside the fixpoint loop.
std::vector<std::unique_ptr<rule>> differential_rules();

} // namespace gdr
