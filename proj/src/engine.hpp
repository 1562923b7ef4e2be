#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace gdr {

enum class problem_kind { nonblocker, harmless, differential, knonblocker };

std::string problem_name(problem_kind kind);

// Candidate solutions are vertex subsets for every problem. For the three
// cardinality problems feasibility is the defining property and the value is
// the set size; for differential any subset is feasible and the value is the
// boundary difference.
bool solution_feasible(problem_kind kind, const graph& g, const std::vector<int>& sol, int k = 0);
long solution_value(problem_kind kind, const graph& g, const std::vector<int>& sol);

// One applied reduction step. `a` bounds the optimum loss, `b` is the value
// the lift adds back; payload carries whatever the rule needs to lift.
struct step_record {
    std::string rule_id;
    long a = 0;
    long b = 0;
    nlohmann::json payload;
};

class rule {
public:
    virtual ~rule() = default;
    virtual std::string id() const = 0;
    virtual problem_kind kind() const = 0;
    virtual int k() const { return 0; }

    // Strict rules shrink the fixpoint measure with every application.
    virtual bool strict() const { return true; }

    // Finds the first site in a deterministic scan order and applies the
    // rule there. Returns the reduced graph and the step; nullopt when the
    // rule has no site.
    virtual std::optional<std::pair<graph, step_record>> apply(const graph& g) const = 0;

    virtual bool applicable(const graph& g) const;

    // Maps a solution of `after` to a solution of `before`.
    virtual std::vector<int> lift(const step_record& step, const graph& before,
                                  const graph& after, const std::vector<int>& sol) const = 0;

    // Value added by lifting (may be negative).
    virtual long lift_delta(const step_record& step) const { return step.b; }

    // Whether lifting changes the value by exactly lift_delta, as opposed to
    // at least lift_delta.
    virtual bool lift_exact() const { return true; }
};

// Termination measure for fixpoint loops. Differential rules may add edges
// while destroying leaves, so their measure counts leaves as well.
long fixpoint_measure(problem_kind kind, const graph& g);

struct trace {
    // graphs.front() is the input; graphs[i + 1] is the graph after steps[i].
    std::vector<graph> graphs;
    std::vector<step_record> steps;

    const graph& initial() const { return graphs.front(); }
    const graph& result() const { return graphs.back(); }
    long total_a() const;
    long total_b() const;
};

// Applies rules in priority order until none fires: after every application
// the scan restarts at rules.front(). All rules must share one problem kind.
// Strict rules must shrink the measure; a violation is a structural_error.
trace run_to_fixpoint(const graph& g, const std::vector<const rule*>& rules);

// Replays the trace backwards, lifting sol through every step. Each
// intermediate solution is checked for feasibility and for the step's value
// contract; violations throw lift_error.
std::vector<int> lift_solution(const trace& tr, const std::vector<const rule*>& rules,
                               std::vector<int> sol);

// Steps with vertex and edge diffs plus running totals of a and b.
nlohmann::json trace_to_json(const trace& tr);

struct audit_report {
    std::string rule_id;
    int graphs_checked = 0;
    int solutions_checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty() && graphs_checked > 0; }
};

// Validates one rule against exact optima: applying it loses at most `a`,
// lifting an optimal solution lands exactly on the original optimum, and
// lifting any feasible solution gains at least lift_delta. Graphs where the
// rule does not apply are skipped.
audit_report audit_rule(const rule& r, const std::vector<graph>& corpus,
                        std::uint64_t seed, int samples_per_graph = 12);

} // namespace gdr
