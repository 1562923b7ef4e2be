#include "rules_harmless.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "oracle.hpp"

namespace gdr {

namespace {

int other_neighbor(const graph& g, int v, int not_this) {
    const auto& nb = g.neighbors(v);
    if (nb.size() != 2) throw structural_error("other_neighbor: degree is not two");
    return nb[0] == not_this ? nb[1] : nb[0];
}

std::set<int> to_set(const std::vector<int>& vs) { return {vs.begin(), vs.end()}; }

class harmless_rule : public rule {
public:
    problem_kind kind() const override { return problem_kind::harmless; }
};

// An isolated vertex can never reach a neighbor outside the solution, so the
// instance is infeasible. In an isolated edge neither endpoint can be in any
// solution: each is the other's only escape. Deleting both changes nothing.
class isolate_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.isolate"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices())
            if (g.degree(v) == 0)
                throw infeasible_error("harmless: isolated vertex " + std::to_string(v));
        for (int u : g.vertices()) {
            if (g.degree(u) != 1) continue;
            int v = g.neighbors(u)[0];
            if (g.degree(v) != 1) continue;
            graph_builder b(g);
            b.remove_vertex(u);
            b.remove_vertex(v);
            step_record s;
            s.rule_id = id();
            s.payload = {{"u", u}, {"v", v}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

// Two leaves under one parent: the kept leaf pins the parent outside every
// solution, so the dropped leaf can always be added back.
class leaf_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.leaf"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int w : g.vertices()) {
            int first_leaf = -1;
            int leaves = 0;
            for (int u : g.neighbors(w)) {
                if (g.degree(u) != 1) continue;
                if (first_leaf < 0) first_leaf = u;
                ++leaves;
            }
            if (leaves < 2) continue;
            graph_builder b(g);
            b.remove_vertex(first_leaf);
            step_record s;
            s.rule_id = id();
            s.a = s.b = 1;
            s.payload = {{"deleted", first_leaf}, {"parent", w}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        std::vector<int> out = sol;
        out.push_back(step.payload.at("deleted").get<int>());
        return out;
    }
};

// A path component is solved outright: its optimum complements a minimum
// total dominating set of the path.
class floating_chain_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.floating_chain"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (const auto& comp : components(g)) {
            if (comp.size() < 2) continue;
            bool path = true;
            int end = -1;
            for (int v : comp) {
                int d = g.degree(v);
                if (d > 2) { path = false; break; }
                if (d == 1 && end < 0) end = v;
            }
            if (!path || end < 0) continue;  // end < 0 means a cycle
            std::vector<int> order{end};
            if (comp.size() > 1) {
                int prev = end, cur = g.neighbors(end)[0];
                order.push_back(cur);
                while (g.degree(cur) == 2) {
                    int nxt = other_neighbor(g, cur, prev);
                    prev = cur;
                    cur = nxt;
                    order.push_back(cur);
                }
            }
            long s_gain = static_cast<long>(order.size()) -
                          static_cast<long>(path_total_dominating_set(order).size());
            graph_builder b(g);
            for (int v : comp) b.remove_vertex(v);
            step_record s;
            s.rule_id = id();
            s.a = s.b = s_gain;
            s.payload = {{"path", order}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        auto order = step.payload.at("path").get<std::vector<int>>();
        std::set<int> keep_out = to_set(path_total_dominating_set(order));
        std::vector<int> out = sol;
        for (int v : order)
            if (!keep_out.count(v)) out.push_back(v);
        return out;
    }
};

// Four-cycle through three degree-two vertices u, v, w: the fourth corner and
// v can never both be chosen (w would lose both escapes), so u fits back in.
class cycle_chain_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.cycle_chain"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices()) {
            if (g.degree(v) != 2) continue;
            const auto& nb = g.neighbors(v);
            int u = nb[0], w = nb[1];
            if (g.degree(u) != 2 || g.degree(w) != 2) continue;
            int x = other_neighbor(g, u, v);
            if (x != other_neighbor(g, w, v) || x == v) continue;
            graph_builder b(g);
            b.remove_vertex(u);
            step_record s;
            s.rule_id = id();
            s.a = s.b = 1;
            s.payload = {{"x", x}, {"u", u}, {"v", v}, {"w", w}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        std::vector<int> out = sol;
        out.push_back(step.payload.at("u").get<int>());
        return out;
    }
};

// A vertex carrying two pendant chains of edge length at most two, one of
// exact length two: the spare chain's tip comes back into the solution. The
// kept length-two chain pins its middle vertex outside every solution, which
// frees the site vertex to be swapped for the kept tip when needed.
class pendant_chain_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.pendant_chain"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices()) {
            std::vector<int> bare, mids;
            for (int x : g.neighbors(v)) {
                if (g.degree(x) == 1) bare.push_back(x);
                if (g.degree(x) == 2) {
                    int y = other_neighbor(g, x, v);
                    if (g.degree(y) == 1) mids.push_back(x);
                }
            }
            if (mids.empty() || bare.size() + mids.size() < 2) continue;
            graph_builder b(g);
            step_record s;
            s.rule_id = id();
            s.a = s.b = 1;
            int kept_mid;
            std::vector<int> deleted;
            if (!bare.empty()) {
                deleted = {bare[0]};
                kept_mid = mids[0];
            } else {
                int z = mids[0];
                deleted = {z, other_neighbor(g, z, v)};
                kept_mid = mids[1];
            }
            for (int d : deleted) b.remove_vertex(d);
            s.payload = {{"site", v},
                         {"kept_mid", kept_mid},
                         {"kept_tip", other_neighbor(g, kept_mid, v)},
                         {"deleted", deleted}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        int v = step.payload.at("site").get<int>();
        int tip = step.payload.at("kept_tip").get<int>();
        auto deleted = step.payload.at("deleted").get<std::vector<int>>();
        std::set<int> out = to_set(sol);
        if (out.count(v)) {
            out.erase(v);
            out.insert(tip);
        }
        out.insert(deleted.back());
        return {out.begin(), out.end()};
    }
};

// A run of three degree-two vertices between distinct non-adjacent anchors
// contracts the anchors into one vertex. An anchor edge would let the run
// plus chord soak up extra solution vertices that the contraction cannot
// repay, so such sites are skipped, as are sites where the contraction would
// isolate the merged vertex (a plain five-cycle or five-path). Lifting picks
// two of the dropped run vertices based on which side the merged vertex's
// escape lies.
class long_chain_rule : public harmless_rule {
public:
    std::string id() const override { return "harmless.long_chain"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices()) {
            if (g.degree(v) != 2) continue;
            const auto& nb = g.neighbors(v);
            int u = nb[0], w = nb[1];
            if (g.degree(u) != 2 || g.degree(w) != 2) continue;
            int x = other_neighbor(g, u, v);
            int y = other_neighbor(g, w, v);
            if (x == y || x == w || y == u) continue;
            if (g.has_edge(x, y)) continue;
            bool external = false;
            for (int p : {x, y})
                for (int q : g.neighbors(p))
                    if (q != x && q != y && q != u && q != v && q != w) external = true;
            if (!external) continue;
            graph_builder b(g);
            b.remove_vertex(u);
            b.remove_vertex(v);
            b.remove_vertex(w);
            int merged = b.merge({x, y});
            step_record s;
            s.rule_id = id();
            s.a = s.b = 2;
            s.payload = {{"x", x}, {"y", y}, {"u", u}, {"v", v}, {"w", w}, {"merged", merged}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph& before, const graph& after,
                          const std::vector<int>& sol) const override {
        int x = step.payload.at("x").get<int>();
        int y = step.payload.at("y").get<int>();
        int u = step.payload.at("u").get<int>();
        int v = step.payload.at("v").get<int>();
        int w = step.payload.at("w").get<int>();
        int merged = step.payload.at("merged").get<int>();

        // Every vertex keeps a neighbor outside a feasible solution, so the
        // merged vertex has an escape whether or not it is in the solution.
        std::set<int> out = to_set(sol);
        int escape = -1;
        for (int q : after.neighbors(merged))
            if (!out.count(q)) { escape = q; break; }
        if (escape < 0) throw lift_error("long_chain: merged vertex has no escape");
        bool on_y_side = before.has_edge(y, escape);

        if (out.count(merged)) {
            out.erase(merged);
            out.insert(x);
            out.insert(y);
        } else {
            out.insert(v);
        }
        out.insert(on_y_side ? w : u);
        return {out.begin(), out.end()};
    }
};

} // namespace

std::vector<std::unique_ptr<rule>> harmless_rules() {
    std::vector<std::unique_ptr<rule>> rs;
    rs.push_back(std::make_unique<isolate_rule>());
    rs.push_back(std::make_unique<leaf_rule>());
    rs.push_back(std::make_unique<floating_chain_rule>());
    rs.push_back(std::make_unique<cycle_chain_rule>());
    rs.push_back(std::make_unique<pendant_chain_rule>());
    rs.push_back(std::make_unique<long_chain_rule>());
    return rs;
}

} // namespace gdr
