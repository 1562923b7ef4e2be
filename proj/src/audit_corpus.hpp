#pragma once

#include <cstdint>
#include <vector>

#include "engine.hpp"
#include "graph.hpp"

namespace gdr {

// Builds `count` graphs on at most ten vertices to which `r` is applicable,
// by planting the structure the rule fires on into small random connected
// graphs. Deterministic for a fixed seed.
std::vector<graph> audit_corpus(const rule& r, int count, std::uint64_t seed);

} // namespace gdr
