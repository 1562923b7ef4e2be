#include "rules_nonblocker.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace gdr {

namespace {

class nonblocker_rule : public rule {
public:
    problem_kind kind() const override { return problem_kind::nonblocker; }
};

// An isolated vertex has no neighbor to escape to, so it is never chosen.
class isolate_rule : public nonblocker_rule {
public:
    std::string id() const override { return "nonblocker.isolate"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices()) {
            if (g.degree(v) != 0) continue;
            graph_builder b(g);
            b.remove_vertex(v);
            step_record s;
            s.rule_id = id();
            s.payload = {{"v", v}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

// An isolated edge holds exactly one solution vertex: either endpoint, never
// both. The smaller endpoint is restored on lift.
class isolated_edge_rule : public nonblocker_rule {
public:
    std::string id() const override { return "nonblocker.isolated_edge"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int u : g.vertices()) {
            if (g.degree(u) != 1) continue;
            int v = g.neighbors(u)[0];
            if (g.degree(v) != 1) continue;
            graph_builder b(g);
            b.remove_vertex(u);
            b.remove_vertex(v);
            step_record s;
            s.rule_id = id();
            s.a = s.b = 1;
            s.payload = {{"u", u}, {"v", v}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        std::vector<int> out = sol;
        out.push_back(std::min(step.payload.at("u").get<int>(),
                               step.payload.at("v").get<int>()));
        return out;
    }
};

// All parents of leaves collapse into one vertex. A parent in a solution can
// always be swapped for one of its leaves, so the contraction loses nothing.
class merge_leaf_parents_rule : public nonblocker_rule {
public:
    std::string id() const override { return "nonblocker.merge_leaf_parents"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        std::vector<int> members;
        for (int v : g.vertices()) {
            if (g.degree(v) < 2) continue;
            for (int u : g.neighbors(v))
                if (g.degree(u) == 1) { members.push_back(v); break; }
        }
        if (members.size() < 2) return std::nullopt;
        graph_builder b(g);
        int merged = b.merge(members);
        step_record s;
        s.rule_id = id();
        s.payload = {{"members", members}, {"merged", merged}};
        return std::make_pair(b.build(), std::move(s));
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph& after,
                          const std::vector<int>& sol) const override {
        int merged = step.payload.at("merged").get<int>();
        std::set<int> out(sol.begin(), sol.end());
        if (!out.count(merged)) return sol;
        out.erase(merged);
        for (int q : after.neighbors(merged)) {
            // Leaves of the merged vertex are forced outside the solution.
            if (after.degree(q) == 1) {
                out.insert(q);
                return {out.begin(), out.end()};
            }
        }
        throw lift_error("merge_leaf_parents: merged vertex has no leaf");
    }
};

// Two leaves under one parent: one leaf is spare. If the parent was chosen it
// trades places with the kept leaf, making room to restore the spare.
class extra_leaf_rule : public nonblocker_rule {
public:
    std::string id() const override { return "nonblocker.extra_leaf"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int z : g.vertices()) {
            std::vector<int> leaves;
            for (int u : g.neighbors(z))
                if (g.degree(u) == 1) leaves.push_back(u);
            if (leaves.size() < 2) continue;
            graph_builder b(g);
            b.remove_vertex(leaves[0]);
            step_record s;
            s.rule_id = id();
            s.a = s.b = 1;
            s.payload = {{"deleted", leaves[0]}, {"kept", leaves[1]}, {"parent", z}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        int u = step.payload.at("deleted").get<int>();
        int x = step.payload.at("kept").get<int>();
        int z = step.payload.at("parent").get<int>();
        std::set<int> out(sol.begin(), sol.end());
        if (out.count(z)) {
            out.erase(z);
            out.insert(x);
        }
        out.insert(u);
        return {out.begin(), out.end()};
    }
};

} // namespace

std::vector<std::unique_ptr<rule>> nonblocker_rules() {
    std::vector<std::unique_ptr<rule>> rs;
    rs.push_back(std::make_unique<isolate_rule>());
    rs.push_back(std::make_unique<isolated_edge_rule>());
    rs.push_back(std::make_unique<merge_leaf_parents_rule>());
    rs.push_back(std::make_unique<extra_leaf_rule>());
    return rs;
}

} // namespace gdr
