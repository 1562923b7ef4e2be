#include "engine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "oracle.hpp"

namespace gdr {

std::string problem_name(problem_kind kind) {
    switch (kind) {
        case problem_kind::nonblocker: return "nonblocker";
        case problem_kind::harmless: return "harmless";
        case problem_kind::differential: return "differential";
        case problem_kind::knonblocker: return "knonblocker";
    }
    throw structural_error("problem_name: bad kind");
}

bool solution_feasible(problem_kind kind, const graph& g, const std::vector<int>& sol, int k) {
    switch (kind) {
        case problem_kind::nonblocker: return is_nonblocker(g, sol);
        case problem_kind::harmless: return is_harmless_set(g, sol);
        case problem_kind::knonblocker: return is_k_nonblocker(g, sol, k);
        case problem_kind::differential:
            for (int v : sol)
                if (!g.has_vertex(v)) return false;
            return true;
    }
    throw structural_error("solution_feasible: bad kind");
}

long solution_value(problem_kind kind, const graph& g, const std::vector<int>& sol) {
    if (kind == problem_kind::differential) return differential_value(g, sol);
    return static_cast<long>(sol.size());
}

bool rule::applicable(const graph& g) const {
    try {
        return apply(g).has_value();
    } catch (const infeasible_error&) {
        // A rule that detects infeasibility has found its site.
        return true;
    }
}

long fixpoint_measure(problem_kind kind, const graph& g) {
    long measure = g.vertex_count() + g.edge_count();
    if (kind == problem_kind::differential)
        for (int v : g.vertices())
            if (g.degree(v) == 1) ++measure;
    return measure;
}

long trace::total_a() const {
    long t = 0;
    for (const auto& s : steps) t += s.a;
    return t;
}

long trace::total_b() const {
    long t = 0;
    for (const auto& s : steps) t += s.b;
    return t;
}

trace run_to_fixpoint(const graph& g, const std::vector<const rule*>& rules) {
    if (rules.empty()) throw structural_error("run_to_fixpoint: no rules");
    problem_kind kind = rules.front()->kind();
    for (const rule* r : rules)
        if (r->kind() != kind) throw structural_error("run_to_fixpoint: mixed problem kinds");

    trace tr;
    tr.graphs.push_back(g);
    long cap = fixpoint_measure(kind, g) + 1;
    for (long round = 0; round < cap; ++round) {
        bool fired = false;
        for (const rule* r : rules) {
            auto res = r->apply(tr.graphs.back());
            if (!res) continue;
            if (r->strict()) {
                long before = fixpoint_measure(kind, tr.graphs.back());
                long after = fixpoint_measure(kind, res->first);
                if (after >= before)
                    throw structural_error("run_to_fixpoint: rule " + r->id() +
                                           " did not shrink the measure");
            }
            tr.graphs.push_back(std::move(res->first));
            tr.steps.push_back(std::move(res->second));
            fired = true;
            break;
        }
        if (!fired) return tr;
    }
    throw structural_error("run_to_fixpoint: no fixpoint within the measure cap");
}

std::vector<int> lift_solution(const trace& tr, const std::vector<const rule*>& rules,
                               std::vector<int> sol) {
    problem_kind kind = rules.empty() ? problem_kind::nonblocker : rules.front()->kind();
    for (size_t i = tr.steps.size(); i-- > 0;) {
        const step_record& step = tr.steps[i];
        const rule* r = nullptr;
        for (const rule* c : rules)
            if (c->id() == step.rule_id) { r = c; break; }
        if (!r) throw lift_error("lift_solution: no rule named " + step.rule_id);

        const graph& before = tr.graphs[i];
        const graph& after = tr.graphs[i + 1];
        long value_in = solution_value(kind, after, sol);
        std::vector<int> lifted = r->lift(step, before, after, sol);
        std::sort(lifted.begin(), lifted.end());

        if (!solution_feasible(kind, before, lifted, r->k()))
            throw lift_error("lift_solution: infeasible lift from " + step.rule_id);
        long value_out = solution_value(kind, before, lifted);
        long delta = r->lift_delta(step);
        if (value_out < value_in + delta ||
            (r->lift_exact() && value_out != value_in + delta))
            throw lift_error("lift_solution: value contract broken by " + step.rule_id);
        sol = std::move(lifted);
    }
    return sol;
}

namespace {

std::vector<std::pair<int, int>> edge_diff(const graph& a, const graph& b) {
    // edges of a missing from b
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : a.edges())
        if (!b.has_vertex(u) || !b.has_vertex(v) || !b.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> vertex_diff(const graph& a, const graph& b) {
    std::vector<int> out;
    for (int v : a.vertices())
        if (!b.has_vertex(v)) out.push_back(v);
    return out;
}

nlohmann::json edge_json(const std::vector<std::pair<int, int>>& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : es) arr.push_back({u, v});
    return arr;
}

} // namespace

nlohmann::json trace_to_json(const trace& tr) {
    nlohmann::ordered_json j;
    j["initial"] = {{"n", tr.initial().vertex_count()}, {"m", tr.initial().edge_count()}};
    j["result"] = {{"n", tr.result().vertex_count()}, {"m", tr.result().edge_count()}};
    j["steps"] = nlohmann::json::array();
    long cum_a = 0, cum_b = 0;
    for (size_t i = 0; i < tr.steps.size(); ++i) {
        const step_record& s = tr.steps[i];
        const graph& before = tr.graphs[i];
        const graph& after = tr.graphs[i + 1];
        cum_a += s.a;
        cum_b += s.b;
        nlohmann::ordered_json step;
        step["index"] = i;
        step["rule"] = s.rule_id;
        step["a"] = s.a;
        step["b"] = s.b;
        step["cumulative_a"] = cum_a;
        step["cumulative_b"] = cum_b;
        step["removed_vertices"] = vertex_diff(before, after);
        step["added_vertices"] = vertex_diff(after, before);
        step["removed_edges"] = edge_json(edge_diff(before, after));
        step["added_edges"] = edge_json(edge_diff(after, before));
        j["steps"].push_back(std::move(step));
    }
    j["total_a"] = cum_a;
    j["total_b"] = cum_b;
    return j;
}

namespace {

long exact_optimum(problem_kind kind, const graph& g, int k) {
    switch (kind) {
        case problem_kind::nonblocker: return exact_max_nonblocker(g);
        case problem_kind::harmless: return exact_max_harmless(g);
        case problem_kind::differential: return exact_differential(g);
        case problem_kind::knonblocker: return exact_max_k_nonblocker(g, k);
    }
    throw structural_error("exact_optimum: bad kind");
}

// A maximum solution set: the complement of a minimum dual set for the
// cardinality problems, the maximizer itself for differential.
std::vector<int> exact_optimum_set(problem_kind kind, const graph& g, int k) {
    if (kind == problem_kind::differential) return exact_max_differential_set(g);
    std::vector<int> dual;
    switch (kind) {
        case problem_kind::nonblocker: dual = exact_min_dominating_set(g); break;
        case problem_kind::harmless: dual = exact_min_total_dominating_set(g); break;
        case problem_kind::knonblocker: dual = exact_min_k_dominating_set(g, k); break;
        default: throw structural_error("exact_optimum_set: bad kind");
    }
    std::set<int> in(dual.begin(), dual.end());
    std::vector<int> sol;
    for (int v : g.vertices())
        if (!in.count(v)) sol.push_back(v);
    return sol;
}

std::vector<std::vector<int>> sample_solutions(problem_kind kind, const graph& g, int k,
                                               std::mt19937_64& rng, int want) {
    std::vector<std::vector<int>> out;
    out.emplace_back();  // the empty set is feasible for every kind
    auto ids = g.vertices();
    int attempts = want * 10;
    while (static_cast<int>(out.size()) < want + 1 && attempts-- > 0) {
        std::vector<int> cand;
        for (int v : ids)
            if (rng() & 1u) cand.push_back(v);
        if (solution_feasible(kind, g, cand, k)) out.push_back(std::move(cand));
    }
    return out;
}

} // namespace

audit_report audit_rule(const rule& r, const std::vector<graph>& corpus,
                        std::uint64_t seed, int samples_per_graph) {
    audit_report rep;
    rep.rule_id = r.id();
    problem_kind kind = r.kind();
    int k = r.k();
    std::mt19937_64 rng(seed);

    for (size_t gi = 0; gi < corpus.size(); ++gi) {
        const graph& g = corpus[gi];
        auto res = r.apply(g);
        if (!res) continue;
        const graph& gr = res->first;
        const step_record& step = res->second;
        ++rep.graphs_checked;
        auto complain = [&](const std::string& what) {
            rep.violations.push_back(r.id() + " on corpus graph " + std::to_string(gi) +
                                     ": " + what);
        };

        long opt_before = exact_optimum(kind, g, k);
        long opt_after = exact_optimum(kind, gr, k);
        long delta = r.lift_delta(step);

        if (opt_after + step.a < opt_before)
            complain("optimum drops by more than a");
        if (r.id() == "knb.low_degree_merging" && opt_after != opt_before + k)
            complain("merged optimum is not optimum plus k");

        std::vector<int> opt_set = exact_optimum_set(kind, gr, k);
        std::vector<int> lifted = r.lift(step, g, gr, opt_set);
        std::sort(lifted.begin(), lifted.end());
        if (!solution_feasible(kind, g, lifted, k)) {
            complain("lift of an optimal solution is infeasible");
        } else {
            long v = solution_value(kind, g, lifted);
            if (v != opt_after + delta) complain("lift of an optimal solution misses opt+delta");
            if (v != opt_before) complain("lift of an optimal solution is not optimal");
        }

        for (const auto& sol : sample_solutions(kind, gr, k, rng, samples_per_graph)) {
            ++rep.solutions_checked;
            std::vector<int> up = r.lift(step, g, gr, sol);
            std::sort(up.begin(), up.end());
            if (!solution_feasible(kind, g, up, k)) {
                complain("lift of a feasible solution is infeasible");
                continue;
            }
            long got = solution_value(kind, g, up);
            long in = solution_value(kind, gr, sol);
            if (got < in + delta) complain("lift gains less than delta");
            if (r.lift_exact() && got != in + delta) complain("lift gain is not exact");
        }
    }
    return rep;
}

} // namespace gdr
