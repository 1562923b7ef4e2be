#include "nonblocker.hpp"

#include <set>
#include <string>
#include <utility>

#include "errors.hpp"
#include "oracle.hpp"
#include "rules.hpp"

namespace gdr {

bound_certificate exact_certificate(std::string kind, int n, int size) {
    bound_certificate cert;
    cert.bound_kind = std::move(kind);
    cert.n = n;
    cert.claimed = size;
    cert.achieved = size;
    if (n > 0) cert.components.push_back({n, size, size, "exact"});
    return cert;
}

solve_result solve_nonblocker(const graph& g) {
    auto rules = rules_for(problem_kind::nonblocker);
    auto ptrs = rule_pointers(rules);
    trace tr = run_to_fixpoint(g, ptrs);
    const graph& red = tr.result();
    const int n_red = red.vertex_count();

    std::vector<int> sol_red;
    bound_certificate cert;
    if (n_red == 0) {
        cert = exact_certificate("ds_two_fifths", 0, 0);
    } else if (n_red <= exact_bound_default) {
        std::vector<int> dom = exact_min_dominating_set(red);
        std::set<int> d(dom.begin(), dom.end());
        for (int v : red.vertices())
            if (!d.count(v)) sol_red.push_back(v);
        cert = exact_certificate("ds_two_fifths", n_red, static_cast<int>(dom.size()));
    } else {
        // The kernel keeps at most one pendant vertex; bridging the pendant
        // to its twin restores minimum degree two before bounding.
        std::vector<int> leaves;
        for (int v : red.vertices())
            if (red.degree(v) == 1) leaves.push_back(v);
        if (leaves.size() > 1)
            throw structural_error("nonblocker kernel kept more than one pendant");
        auto [doubled, offset] = disjoint_union(red, red);
        if (!leaves.empty()) {
            graph_builder b(doubled);
            b.add_edge(leaves[0], leaves[0] + offset);
            doubled = b.build();
        }
        auto [dom_h, ds_cert] = bounded_ds(doubled);
        std::set<int> dh(dom_h.begin(), dom_h.end());

        // Each copy of the dominating set dominates its side except possibly
        // the pendant, whose dominator may sit in the other copy. A pendant
        // reaches only its support, so the support stands in for it.
        std::set<int> best;
        for (int side = 0; side < 2; ++side) {
            std::set<int> cand;
            for (int v : red.vertices())
                if (dh.count(side == 0 ? v : v + offset)) cand.insert(v);
            if (!leaves.empty()) {
                cand.erase(leaves[0]);
                cand.insert(red.neighbors(leaves[0])[0]);
            }
            if (side == 0 || cand.size() < best.size()) best = std::move(cand);
        }
        std::vector<int> dvec(best.begin(), best.end());
        if (!is_dominating_set(red, dvec))
            throw structural_error("projected dominating set missed a kernel vertex");
        for (int v : red.vertices())
            if (!best.count(v)) sol_red.push_back(v);
        cert = std::move(ds_cert);
    }

    std::vector<int> sol = lift_solution(tr, ptrs, std::move(sol_red));
    if (!solution_feasible(problem_kind::nonblocker, g, sol))
        throw structural_error("lifted nonblocker solution is not feasible");
    solve_result out;
    out.solution = std::move(sol);
    out.reduction = std::move(tr);
    out.certificate = std::move(cert);
    return out;
}

} // namespace gdr
