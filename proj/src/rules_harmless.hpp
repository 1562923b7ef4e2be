#pragma once

#include <memory>
#include <vector>

#include "engine.hpp"

namespace gdr {

// Reduction rules for the harmless set problem, in pipeline priority order:
//
//   harmless.isolate        isolated vertex means infeasible; an isolated
//                           edge is deleted whole                       (0,0)
//   harmless.leaf           drop one of two leaves sharing a parent     (1,1)
//   harmless.floating_chain drop a whole path component                 (s,s)
//   harmless.cycle_chain    drop one of three degree-two vertices on a
//                           four-cycle                                  (1,1)
//   harmless.pendant_chain  drop a short pendant chain next to another  (1,1)
//   harmless.long_chain     contract a run of three degree-two vertices (2,2)
std::vector<std::unique_ptr<rule>> harmless_rules();

} // namespace gdr
