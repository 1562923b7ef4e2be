#pragma once

#include <memory>
#include <vector>

#include "engine.hpp"

namespace gdr {

// Reduction rules for the nonblocker problem, in pipeline priority order:
//
//   nonblocker.isolate            drop an isolated vertex               (0,0)
//   nonblocker.isolated_edge      drop an isolated edge whole           (1,1)
//   nonblocker.merge_leaf_parents contract all parents of leaves        (0,0)
//   nonblocker.extra_leaf         drop one of two leaves on a parent    (1,1)
//
// At the joint fixpoint the graph has at most one leaf.
std::vector<std::unique_ptr<rule>> nonblocker_rules();

} // namespace gdr
