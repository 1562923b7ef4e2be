#include "bounds.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "oracle.hpp"

namespace gdr {

namespace {

enum class dom_mode { plain, total };

bool covered(const graph& g, const std::set<int>& d, int v, dom_mode mode) {
    if (mode == dom_mode::plain && d.count(v)) return true;
    for (int u : g.neighbors(v))
        if (d.count(u)) return true;
    return false;
}

bool dominates(const graph& g, const std::set<int>& d, dom_mode mode) {
    for (int v : g.vertices())
        if (!covered(g, d, v, mode)) return false;
    return true;
}

int gain(const graph& g, const std::set<int>& d, int c, dom_mode mode) {
    int got = 0;
    for (int v : g.neighbors(c))
        if (!covered(g, d, v, mode)) ++got;
    if (mode == dom_mode::plain && !d.count(c) && !covered(g, d, c, mode)) ++got;
    return got;
}

std::set<int> greedy_dominating(const graph& g, dom_mode mode) {
    std::set<int> d;
    while (!dominates(g, d, mode)) {
        int best = -1;
        int best_gain = 0;
        for (int c : g.vertices()) {
            int got = gain(g, d, c, mode);
            if (got > best_gain) {
                best_gain = got;
                best = c;
            }
        }
        if (best < 0)
            throw structural_error("greedy domination stalled on an uncoverable vertex");
        d.insert(best);
    }
    return d;
}

// One ascending pass suffices: removals only shrink coverage, so a vertex
// kept once never becomes removable later in the pass.
void minimalize(const graph& g, std::set<int>& d, dom_mode mode) {
    std::vector<int> members(d.begin(), d.end());
    for (int v : members) {
        d.erase(v);
        if (!dominates(g, d, mode)) d.insert(v);
    }
}

bool replace_two_by_one(const graph& g, std::set<int>& d, dom_mode mode) {
    std::vector<int> members(d.begin(), d.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            std::set<int> trial = d;
            trial.erase(members[i]);
            trial.erase(members[j]);
            for (int w : g.vertices()) {
                if (trial.count(w)) continue;
                trial.insert(w);
                if (dominates(g, trial, mode)) {
                    d = std::move(trial);
                    return true;
                }
                trial.erase(w);
            }
        }
    return false;
}

// Improvement stops as soon as the target is met; each successful exchange
// shrinks the set by one, so the loop runs at most |d| times.
std::set<int> heuristic_dominating(const graph& g, dom_mode mode, int target) {
    std::set<int> d = greedy_dominating(g, mode);
    minimalize(g, d, mode);
    while (static_cast<int>(d.size()) > target && replace_two_by_one(g, d, mode))
        minimalize(g, d, mode);
    return d;
}

} // namespace

int degree_two_run(const graph& g) {
    std::vector<int> mid;
    for (int v : g.vertices())
        if (g.degree(v) == 2) mid.push_back(v);
    graph h = induced(g, mid);
    for (const auto& comp : components(h))
        if (comp.size() > 2) return comp.front();
    return -1;
}

std::pair<std::vector<int>, bound_certificate> bounded_tds(const graph& g) {
    const int n = g.vertex_count();
    bound_certificate cert;
    cert.bound_kind = "tds_half";
    cert.n = n;
    if (n == 0) return {{}, cert};
    if (components(g).size() != 1)
        throw precondition_error("bounded_tds: graph is not connected");
    for (int v : g.vertices())
        if (g.degree(v) < 2)
            throw precondition_error("bounded_tds: vertex " + std::to_string(v) +
                                     " has degree below two");
    const int claimed = n / 2;
    const int run = degree_two_run(g);
    std::set<int> d;
    std::string method = "heuristic";
    if (run >= 0) {
        if (n > exact_bound_default)
            throw precondition_error("bounded_tds: degree-two run at vertex " +
                                     std::to_string(run));
        std::vector<int> exact = exact_min_total_dominating_set(g);
        if (static_cast<int>(exact.size()) > claimed)
            throw precondition_error("bounded_tds: degree-two run at vertex " +
                                     std::to_string(run) +
                                     " and the optimum exceeds half the order");
        d.insert(exact.begin(), exact.end());
        method = "exact";
    } else {
        d = heuristic_dominating(g, dom_mode::total, claimed);
        if (static_cast<int>(d.size()) > claimed) {
            if (n > exact_bound_default)
                throw bound_not_certified(
                    "total domination heuristic exceeded half the order on a graph of order " +
                    std::to_string(n));
            std::vector<int> exact = exact_min_total_dominating_set(g);
            if (static_cast<int>(exact.size()) > claimed)
                throw structural_error(
                    "total domination optimum exceeded half the order despite short degree-two runs");
            d.clear();
            d.insert(exact.begin(), exact.end());
            method = "exact";
        }
    }
    std::vector<int> out(d.begin(), d.end());
    if (!is_total_dominating_set(g, out))
        throw structural_error("bounded_tds produced a set that is not total dominating");
    cert.claimed = claimed;
    cert.achieved = static_cast<int>(out.size());
    cert.fallback_used = method == "exact";
    cert.components.push_back({n, claimed, cert.achieved, method});
    return {out, cert};
}

std::pair<std::vector<int>, bound_certificate> bounded_ds(const graph& g) {
    bound_certificate cert;
    cert.bound_kind = "ds_two_fifths";
    cert.n = g.vertex_count();
    for (int v : g.vertices())
        if (g.degree(v) < 2)
            throw precondition_error("bounded_ds: vertex " + std::to_string(v) +
                                     " has degree below two");
    std::vector<int> out;
    for (const auto& comp : components(g)) {
        graph h = induced(g, comp);
        const int nc = static_cast<int>(comp.size());
        bound_entry entry;
        entry.n = nc;
        std::set<int> d;
        if (nc <= 7) {
            // Small components may exceed two fifths of their order, so the
            // exact optimum itself is the claim.
            std::vector<int> exact = exact_min_dominating_set(h);
            d.insert(exact.begin(), exact.end());
            entry.claimed = static_cast<int>(exact.size());
            entry.method = "exact";
        } else {
            entry.claimed = 2 * nc / 5;
            entry.method = "heuristic";
            d = heuristic_dominating(h, dom_mode::plain, entry.claimed);
            if (static_cast<int>(d.size()) > entry.claimed) {
                if (nc > exact_bound_default)
                    throw bound_not_certified(
                        "domination heuristic exceeded two fifths on a component of order " +
                        std::to_string(nc));
                std::vector<int> exact = exact_min_dominating_set(h);
                if (static_cast<int>(exact.size()) > entry.claimed)
                    throw structural_error(
                        "domination optimum exceeded two fifths on a component of order eight or more");
                d.clear();
                d.insert(exact.begin(), exact.end());
                entry.method = "exact";
                cert.fallback_used = true;
            }
        }
        entry.achieved = static_cast<int>(d.size());
        cert.claimed += entry.claimed;
        cert.achieved += entry.achieved;
        cert.components.push_back(entry);
        out.insert(out.end(), d.begin(), d.end());
    }
    std::sort(out.begin(), out.end());
    if (!is_dominating_set(g, out))
        throw structural_error("bounded_ds produced a set that is not dominating");
    return {out, cert};
}

std::pair<std::vector<int>, bound_certificate> bounded_kds(const graph& g, int k) {
    if (k < 1)
        throw precondition_error("bounded_kds: k must be at least one");
    const int n = g.vertex_count();
    bound_certificate cert;
    cert.bound_kind = "kds_fraction";
    cert.n = n;
    if (n == 0) return {{}, cert};
    for (int v : g.vertices())
        if (g.degree(v) < k)
            throw precondition_error("bounded_kds: vertex " + std::to_string(v) +
                                     " has degree below " + std::to_string(k));

    // Discard edges joining two vertices of degree above k. Degrees only
    // decrease, so one ascending pass reaches a subgraph where such pairs are
    // never adjacent and the degree floor of k survives.
    graph_builder b(g);
    for (auto [u, v] : g.edges())
        if (b.degree(u) > k && b.degree(v) > k) b.remove_edge(u, v);
    graph h = b.build();
    for (int v : h.vertices()) {
        if (h.degree(v) < k)
            throw structural_error("edge discarding broke the degree floor");
        if (h.degree(v) > k)
            for (int u : h.neighbors(v))
                if (h.degree(u) > k)
                    throw structural_error("high-degree vertices remained adjacent after discarding");
    }

    // The vertices still above degree k extend to a maximal independent set.
    std::set<int> t;
    for (int v : h.vertices())
        if (h.degree(v) > k) t.insert(v);
    for (int v : h.vertices()) {
        if (t.count(v)) continue;
        bool open = true;
        for (int u : h.neighbors(v))
            if (t.count(u)) {
                open = false;
                break;
            }
        if (open) t.insert(v);
    }

    // Grow the independent set until its complement holds at most kn/(k+1)
    // vertices. Inside the complement all degrees are below k, so a maximal
    // independent set there is strictly larger than the one it replaces.
    while (static_cast<long>(n - static_cast<int>(t.size())) * (k + 1) >
           static_cast<long>(k) * n) {
        std::vector<int> rest;
        for (int v : h.vertices())
            if (!t.count(v)) rest.push_back(v);
        graph hr = induced(h, rest);
        std::set<int> grown;
        for (int v : hr.vertices()) {
            bool open = true;
            for (int u : hr.neighbors(v))
                if (grown.count(u)) {
                    open = false;
                    break;
                }
            if (open) grown.insert(v);
        }
        if (grown.size() <= t.size())
            throw structural_error("independent set stopped growing before the bound was met");
        t = std::move(grown);
    }

    std::vector<int> d;
    for (int v : g.vertices())
        if (!t.count(v)) d.push_back(v);
    const int claimed = static_cast<int>(static_cast<long>(k) * n / (k + 1));
    if (static_cast<int>(d.size()) > claimed)
        throw structural_error("independent-set construction missed its size bound");
    if (!is_k_dominating_set(g, d, k))
        throw structural_error("bounded_kds produced a set that is not k-dominating");
    cert.claimed = claimed;
    cert.achieved = static_cast<int>(d.size());
    cert.components.push_back({n, claimed, cert.achieved, "constructive"});
    return {d, cert};
}

} // namespace gdr
