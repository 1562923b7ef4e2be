#include "rules_differential.hpp"

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

// The tip of a hair at w through mid, or -1 if no hair runs through mid.
int hair_tip(const graph& g, int w, int mid) {
    if (g.degree(mid) != 2) return -1;
    int u = other_neighbor(g, mid, w);
    return g.degree(u) == 1 ? u : -1;
}

class differential_rule : public rule {
public:
    problem_kind kind() const override { return problem_kind::differential; }
    bool lift_exact() const override { return false; }
};

// Two leaves under one parent become adjacent. A boundary argument shows the
// edge never raises the optimum; lifting swaps a lone chosen leaf for the
// parent when the parent is free.
class leaf_pair_rule : public differential_rule {
public:
    std::string id() const override { return "differential.leaf_pair"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int p : g.vertices()) {
            std::vector<int> leaves;
            for (int u : g.neighbors(p))
                if (g.degree(u) == 1) leaves.push_back(u);
            if (leaves.size() < 2) continue;
            graph_builder b(g);
            b.add_edge(leaves[0], leaves[1]);
            step_record s;
            s.rule_id = id();
            s.payload = {{"parent", p}, {"u1", leaves[0]}, {"u2", leaves[1]}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        int p = step.payload.at("parent").get<int>();
        int u1 = step.payload.at("u1").get<int>();
        int u2 = step.payload.at("u2").get<int>();
        std::set<int> out(sol.begin(), sol.end());
        bool in1 = out.count(u1), in2 = out.count(u2);
        if (in1 != in2 && !out.count(p)) {
            out.erase(in1 ? u1 : u2);
            out.insert(p);
        }
        return {out.begin(), out.end()};
    }
};

// Two hairs on one vertex lose their tips; the mids turn into plain leaves.
class hair_pair_rule : public differential_rule {
public:
    std::string id() const override { return "differential.hair_pair"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int w : g.vertices()) {
            std::vector<int> mids;
            for (int x : g.neighbors(w))
                if (hair_tip(g, w, x) >= 0) mids.push_back(x);
            if (mids.size() < 2) continue;
            int t1 = hair_tip(g, w, mids[0]), t2 = hair_tip(g, w, mids[1]);
            graph_builder b(g);
            b.remove_vertex(t1);
            b.remove_vertex(t2);
            step_record s;
            s.rule_id = id();
            s.payload = {{"w", w}, {"mids", {mids[0], mids[1]}}, {"tips", {t1, t2}}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

// A plain leaf and a hair on the same vertex: the hair tip is spare.
class leaf_hair_rule : public differential_rule {
public:
    std::string id() const override { return "differential.leaf_hair"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int w : g.vertices()) {
            int leaf = -1, mid = -1, tip = -1;
            for (int x : g.neighbors(w)) {
                if (leaf < 0 && g.degree(x) == 1) leaf = x;
                if (mid < 0) {
                    int t = hair_tip(g, w, x);
                    if (t >= 0) { mid = x; tip = t; }
                }
            }
            if (leaf < 0 || mid < 0) continue;
            graph_builder b(g);
            b.remove_vertex(tip);
            step_record s;
            s.rule_id = id();
            s.payload = {{"w", w}, {"leaf", leaf}, {"mid", mid}, {"tip", tip}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

// A hair hanging off a degree-two vertex: all three path vertices go, and the
// hair mid comes back as a chosen vertex, gaining exactly one.
class long_hair_rule : public differential_rule {
public:
    std::string id() const override { return "differential.long_hair"; }
    bool lift_exact() const override { return true; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int w : g.vertices()) {
            if (g.degree(w) != 2) continue;
            for (int v : g.neighbors(w)) {
                int u = hair_tip(g, w, v);
                if (u < 0) continue;
                graph_builder b(g);
                b.remove_vertex(u);
                b.remove_vertex(v);
                b.remove_vertex(w);
                step_record s;
                s.rule_id = id();
                s.a = s.b = 1;
                s.payload = {{"u", u}, {"v", v}, {"w", w}};
                return std::make_pair(b.build(), std::move(s));
            }
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record& step, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        std::vector<int> out = sol;
        out.push_back(step.payload.at("v").get<int>());
        return out;
    }
};

// Two adjacent hair carriers disconnect. Their hairs guarantee boundary
// either way, so the edge is redundant for the optimum.
class neighbor_hair_rule : public differential_rule {
public:
    std::string id() const override { return "differential.neighbor_hair"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int w : g.vertices()) {
            bool w_has = false;
            for (int x : g.neighbors(w))
                if (hair_tip(g, w, x) >= 0) { w_has = true; break; }
            if (!w_has) continue;
            for (int w2 : g.neighbors(w)) {
                if (w2 < w) continue;  // visit each edge once, smaller end first
                bool w2_has = false;
                for (int x : g.neighbors(w2))
                    if (x != w && hair_tip(g, w2, x) >= 0) { w2_has = true; break; }
                if (!w2_has) continue;
                graph_builder b(g);
                b.remove_edge(w, w2);
                step_record s;
                s.rule_id = id();
                s.payload = {{"w1", w}, {"w2", w2}};
                return std::make_pair(b.build(), std::move(s));
            }
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

} // namespace

std::vector<std::unique_ptr<rule>> differential_rules() {
    std::vector<std::unique_ptr<rule>> rs;
    rs.push_back(std::make_unique<leaf_pair_rule>());
    rs.push_back(std::make_unique<hair_pair_rule>());
    rs.push_back(std::make_unique<leaf_hair_rule>());
    rs.push_back(std::make_unique<long_hair_rule>());
    rs.push_back(std::make_unique<neighbor_hair_rule>());
    return rs;
}

} // namespace gdr
