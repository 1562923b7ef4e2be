#include "knonblocker.hpp"

#include <set>
#include <utility>

#include "errors.hpp"
#include "oracle.hpp"
#include "rules.hpp"

namespace gdr {

solve_result solve_k_nonblocker(const graph& g, int k) {
    if (k < 2)
        throw precondition_error("solve_k_nonblocker: k must be at least two");
    auto rules = rules_for(problem_kind::knonblocker, k);
    auto ptrs = rule_pointers(rules);
    trace tr = run_to_fixpoint(g, ptrs);
    const graph& red = tr.result();
    const int n_red = red.vertex_count();

    std::vector<int> sol_red;
    bound_certificate cert;
    if (n_red == 0) {
        cert = exact_certificate("kds_fraction", 0, 0);
    } else if (n_red <= exact_bound_default) {
        std::vector<int> dom = exact_min_k_dominating_set(red, k);
        std::set<int> d(dom.begin(), dom.end());
        for (int v : red.vertices())
            if (!d.count(v)) sol_red.push_back(v);
        cert = exact_certificate("kds_fraction", n_red, static_cast<int>(dom.size()));
    } else {
        auto [dom, kds_cert] = bounded_kds(red, k);
        std::set<int> d(dom.begin(), dom.end());
        for (int v : red.vertices())
            if (!d.count(v)) sol_red.push_back(v);
        cert = std::move(kds_cert);
        // Each merge step in the trace costs exactly k solution vertices on
        // the way back up.
        int merges = 0;
        for (const auto& step : tr.steps)
            if (step.rule_id == "knb.low_degree_merging") ++merges;
        cert.additive_slack = k * merges;
    }

    std::vector<int> sol = lift_solution(tr, ptrs, std::move(sol_red));
    if (!solution_feasible(problem_kind::knonblocker, g, sol, k))
        throw structural_error("lifted solution is not a k-nonblocker");
    solve_result out;
    out.solution = std::move(sol);
    out.reduction = std::move(tr);
    out.certificate = std::move(cert);
    return out;
}

} // namespace gdr
