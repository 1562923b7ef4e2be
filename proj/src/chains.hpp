#pragma once

#include <vector>

#include "graph.hpp"

namespace gdr {

// A chain is a maximal run of degree-two vertices together with its two
// anchoring endpoints, or a whole component when that component is a path or
// a cycle.
//
//   floating: the component is a path; vertices lists it end to end,
//             starting at the smaller-id endpoint. No supports.
//   pendant:  one endpoint is a leaf, the other a vertex of degree >= 3
//             (the support). vertices runs support ... leaf.
//   internal: both endpoints have degree >= 3. vertices runs support_a ...
//             support_b with support_a <= support_b. A cycle attached to a
//             single branch vertex has support_a == support_b.
//   cycle:    the component is a cycle; vertices lists it in cycle order
//             starting at the smallest id, toward its smaller neighbor.
enum class chain_kind { floating, pendant, internal, cycle };

struct chain {
    chain_kind kind;
    std::vector<int> vertices;  // full path in order, endpoints included
    int support_a = -1;         // pendant/internal: anchoring vertex
    int support_b = -1;         // internal only
    // Degree-two vertices of the chain (the interior for paths, everything
    // for cycles).
    std::vector<int> interior() const;
};

// Every maximal chain exactly once; the interiors partition the degree-two
// vertices of g. Output ordered by smallest contained vertex id.
std::vector<chain> find_chains(const graph& g);

} // namespace gdr
