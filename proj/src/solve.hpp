#pragma once

#include <string>
#include <vector>

#include "bounds.hpp"
#include "engine.hpp"

namespace gdr {

// Everything a caller needs to audit a solver run: the solution, the
// reduction trace that produced the kernel, and the certificate for the
// bound the construction met. Size-bound certificates keep achieved at or
// below claimed; the differential value certificate keeps achieved at or
// above claimed.
struct solve_result {
    std::vector<int> solution;
    trace reduction;
    bound_certificate certificate;
};

// Certificate for an exactly solved instance: it claims exactly what it
// achieves.
bound_certificate exact_certificate(std::string kind, int n, int size);

} // namespace gdr
