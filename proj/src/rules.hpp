#pragma once

#include <memory>
#include <string>
#include <vector>

#include "engine.hpp"

namespace gdr {

// Reduction rules for one problem, in firing priority order. k is only
// meaningful for knonblocker and must be at least 2 there.
std::vector<std::unique_ptr<rule>> rules_for(problem_kind kind, int k = 0);

// Every rule of every problem. knonblocker rules are instantiated at the
// given k.
std::vector<std::unique_ptr<rule>> all_rules(int k = 2);

std::vector<const rule*> rule_pointers(const std::vector<std::unique_ptr<rule>>& rules);

// Returns nullptr if no rule has that id.
const rule* find_rule(const std::vector<std::unique_ptr<rule>>& rules, const std::string& id);

} // namespace gdr
