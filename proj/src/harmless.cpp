#include "harmless.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "errors.hpp"
#include "oracle.hpp"
#include "rules.hpp"

namespace gdr {

namespace {

// Total dominating set of one kernel component, at most (order + pendants)/2
// vertices. Doubling the component, tying the copies at the supports, and
// shedding the pendants yields minimum degree two everywhere, which is what
// the half-order domination bound needs; runs of degree-two vertices are
// contracted away first and restored through the contraction trace.
std::set<int> dominate_component(const graph& h, const rule* contraction,
                                 bound_certificate& cert) {
    std::map<int, int> leaf_of;  // support to its single pendant
    for (int v : h.vertices())
        if (h.degree(v) == 1) {
            int s = h.neighbors(v)[0];
            if (leaf_of.count(s))
                throw structural_error("kernel support kept two pendants");
            leaf_of[s] = v;
        }
    const int pendant_cnt = static_cast<int>(leaf_of.size());

    auto [doubled, offset] = disjoint_union(h, h);
    graph_builder db(doubled);
    for (const auto& [s, l] : leaf_of) {
        db.add_edge(s, s + offset);
        db.remove_vertex(l);
        db.remove_vertex(l + offset);
    }
    doubled = db.build();

    std::vector<const rule*> contract{contraction};
    trace shrink = run_to_fixpoint(doubled, contract);
    const graph& core = shrink.result();

    std::set<int> dom_core;
    for (const auto& sub : components(core)) {
        const int ns = static_cast<int>(sub.size());
        graph hs = induced(core, sub);
        if (ns <= exact_bound_default) {
            std::vector<int> d = exact_min_total_dominating_set(hs);
            cert.components.push_back(
                {ns, static_cast<int>(d.size()), static_cast<int>(d.size()), "exact"});
            dom_core.insert(d.begin(), d.end());
            continue;
        }
        bool floor_ok = true;
        for (int v : hs.vertices())
            if (hs.degree(v) < 2) floor_ok = false;
        if (!floor_ok || degree_two_run(hs) >= 0)
            throw bound_not_certified(
                "contracted double kernel left an uncertified component of order " +
                std::to_string(ns));
        auto [d, tds_cert] = bounded_tds(hs);
        cert.fallback_used = cert.fallback_used || tds_cert.fallback_used;
        for (const auto& entry : tds_cert.components) cert.components.push_back(entry);
        dom_core.insert(d.begin(), d.end());
    }
    if (2L * static_cast<long>(dom_core.size()) > core.vertex_count())
        throw bound_not_certified("double kernel domination exceeded half its order");

    // Complement, lift through the contractions, complement back.
    std::vector<int> sol_core;
    for (int v : core.vertices())
        if (!dom_core.count(v)) sol_core.push_back(v);
    std::vector<int> sol_doubled = lift_solution(shrink, contract, std::move(sol_core));
    std::set<int> keep(sol_doubled.begin(), sol_doubled.end());
    std::set<int> dom_doubled;
    for (int v : doubled.vertices())
        if (!keep.count(v)) dom_doubled.insert(v);

    // Each copy dominates its side except at supports, whose dominator may
    // sit in the other copy; pendants need their support outright. Both
    // repaired projections are valid, so the smaller one wins.
    std::set<int> best;
    for (int side = 0; side < 2; ++side) {
        std::set<int> cand;
        for (int v : h.vertices()) {
            if (h.degree(v) == 1) continue;
            if (dom_doubled.count(side == 0 ? v : v + offset)) cand.insert(v);
        }
        for (const auto& [s, l] : leaf_of) cand.insert(s);
        for (const auto& [s, l] : leaf_of) {
            bool served = false;
            for (int u : h.neighbors(s))
                if (cand.count(u)) {
                    served = true;
                    break;
                }
            if (!served) cand.insert(h.neighbors(s)[0]);
        }
        if (side == 0 || cand.size() < best.size()) best = std::move(cand);
    }

    for (int v : h.vertices()) {
        bool served = false;
        for (int u : h.neighbors(v))
            if (best.count(u)) {
                served = true;
                break;
            }
        if (!served)
            throw structural_error("projected set is not total dominating on the kernel");
    }
    if (2L * static_cast<long>(best.size()) > h.vertex_count() + pendant_cnt)
        throw structural_error("projected dominating set exceeded its size budget");
    return best;
}

} // namespace

solve_result solve_harmless(const graph& g) {
    auto rules = rules_for(problem_kind::harmless);
    auto ptrs = rule_pointers(rules);
    trace tr = run_to_fixpoint(g, ptrs);
    const graph& red = tr.result();
    const rule* contraction = find_rule(rules, "harmless.long_chain");

    bound_certificate cert;
    cert.bound_kind = "tds_half";
    cert.n = g.vertex_count();
    std::set<int> dom;
    for (const auto& comp : components(red)) {
        const int nc = static_cast<int>(comp.size());
        graph h = induced(red, comp);
        if (nc <= exact_bound_default) {
            std::vector<int> d = exact_min_total_dominating_set(h);
            cert.components.push_back(
                {nc, static_cast<int>(d.size()), static_cast<int>(d.size()), "exact"});
            dom.insert(d.begin(), d.end());
            continue;
        }
        std::set<int> d = dominate_component(h, contraction, cert);
        dom.insert(d.begin(), d.end());
    }
    for (const auto& entry : cert.components) {
        cert.claimed += entry.claimed;
        cert.achieved += entry.achieved;
    }

    std::vector<int> sol_red;
    for (int v : red.vertices())
        if (!dom.count(v)) sol_red.push_back(v);
    std::vector<int> sol = lift_solution(tr, ptrs, std::move(sol_red));
    if (!solution_feasible(problem_kind::harmless, g, sol))
        throw structural_error("lifted harmless solution is not feasible");
    solve_result out;
    out.solution = std::move(sol);
    out.reduction = std::move(tr);
    out.certificate = std::move(cert);
    return out;
}

} // namespace gdr
