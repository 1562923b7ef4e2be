#pragma once

#include <stdexcept>
#include <string>

namespace gdr {

// Input text could not be parsed. line is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// The instance admits no feasible solution for the requested problem.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A heuristic solver could not certify its guaranteed bound on this input.
class bound_not_certified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The instance exceeds a documented size limit of the requested routine.
class too_large_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
class precondition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A mutation would break a graph invariant (self-loop, duplicate edge,
// unknown vertex, negative id).
class structural_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A lifted solution failed feasibility or value verification.
class lift_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gdr
