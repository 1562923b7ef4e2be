#pragma once

#include <cstdint>
#include <random>

#include "graph.hpp"

namespace gdr {

// Stable seed mixing so corpora are reproducible across platforms.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Uniform integer in [0, n), n >= 1, independent of library distributions.
int rand_below(std::mt19937_64& rng, int n);

// Erdos-Renyi graph on ids 0..n-1 with edge probability percent/100.
graph random_graph(int n, int edge_percent, std::mt19937_64& rng);

// Connected variant: components are chained by random edges afterwards.
graph random_connected_graph(int n, int edge_percent, std::mt19937_64& rng);

// Connected, minimum degree two, and no three consecutive degree-two
// vertices (so degree-two vertices never bunch up anywhere, cycles included).
graph random_smooth_graph(int n, int edge_percent, std::mt19937_64& rng);

// d-regular graph via the pairing model, retrying until simple. n*d even.
graph random_regular_graph(int n, int d, std::mt19937_64& rng);

} // namespace gdr
