#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace gdr {

// Exhaustive generation of small graphs, one representative per isomorphism
// class, on vertex ids 0..n-1. Supports n up to 10. Emission order is
// deterministic (ascending packed adjacency of the canonical form).
void for_each_graph(int n, const std::function<void(const graph&)>& fn);
void for_each_connected_graph(int n, const std::function<void(const graph&)>& fn);

// Canonical packed adjacency (upper triangle bits, minimized over vertex
// relabelings). Exposed for tests.
std::uint64_t canonical_form(const graph& g);

} // namespace gdr
