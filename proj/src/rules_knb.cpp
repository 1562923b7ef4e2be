#include "rules_knb.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gdr {

namespace {

class knb_rule : public rule {
public:
    explicit knb_rule(int k) : k_(k) {
        if (k < 2) throw structural_error("knb rules need k >= 2");
    }
    problem_kind kind() const override { return problem_kind::knonblocker; }
    int k() const override { return k_; }

protected:
    int k_;
};

// Low vertices cannot be chosen, and no chosen vertex leans on a low vertex
// that only low vertices see. A vertex with more than k low neighbors keeps
// at least k of them after one leaf goes, so leaves under it are spare.
class low_degree_deletion_rule : public knb_rule {
public:
    using knb_rule::knb_rule;
    std::string id() const override { return "knb.low_degree_deletion"; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        for (int v : g.vertices()) {
            if (g.degree(v) >= k_) continue;
            bool all_low = true;
            for (int u : g.neighbors(v))
                if (g.degree(u) >= k_) { all_low = false; break; }
            if (!all_low) continue;
            graph_builder b(g);
            b.remove_vertex(v);
            step_record s;
            s.rule_id = id();
            s.payload = {{"mode", "buried"}, {"v", v}};
            return std::make_pair(b.build(), std::move(s));
        }
        for (int u : g.vertices()) {
            int low = 0, leaf = -1;
            for (int w : g.neighbors(u)) {
                int d = g.degree(w);
                if (d < k_) ++low;
                if (d == 1 && leaf < 0) leaf = w;
            }
            if (low <= k_ || leaf < 0) continue;
            graph_builder b(g);
            b.remove_vertex(leaf);
            step_record s;
            s.rule_id = id();
            s.payload = {{"mode", "surplus"}, {"u", u}, {"v", leaf}};
            return std::make_pair(b.build(), std::move(s));
        }
        return std::nullopt;
    }

    std::vector<int> lift(const step_record&, const graph&, const graph&,
                          const std::vector<int>& sol) const override {
        return sol;
    }
};

class low_degree_merging_rule : public knb_rule {
public:
    using knb_rule::knb_rule;
    std::string id() const override { return "knb.low_degree_merging"; }
    bool strict() const override { return false; }
    long lift_delta(const step_record&) const override { return -k_; }
    bool lift_exact() const override { return false; }

    std::optional<std::pair<graph, step_record>> apply(const graph& g) const override {
        std::vector<int> lows;
        for (int v : g.vertices())
            if (g.degree(v) < k_) lows.push_back(v);
        if (lows.empty()) return std::nullopt;

        graph_builder b(g);
        std::vector<int> side_u, side_v;
        for (int i = 0; i < k_; ++i) side_u.push_back(b.add_fresh_vertex());
        for (int i = 0; i < k_; ++i) side_v.push_back(b.add_fresh_vertex());
        for (int u : side_u)
            for (int v : side_v) b.add_edge(u, v);

        nlohmann::json wired = nlohmann::json::object();
        for (int h : g.vertices()) {
            if (g.degree(h) < k_) continue;
            int q = 0;
            for (int w : g.neighbors(h))
                if (g.degree(w) < k_) ++q;
            if (q == 0) continue;
            int take = std::min(q, k_);
            for (int i = 0; i < take; ++i) b.add_edge(h, side_v[i]);
            wired[std::to_string(h)] = take;
        }
        for (int v : lows) b.remove_vertex(v);

        step_record s;
        s.rule_id = id();
        s.a = s.b = k_;
        s.payload = {{"lows", lows}, {"side_u", side_u}, {"side_v", side_v}, {"wired", wired}};
        return std::make_pair(b.build(), std::move(s));
    }

    // Gadget vertices hold at least k solution slots' worth of complement
    // mass, so dropping them costs at most k.
    std::vector<int> lift(const step_record&, const graph& before, const graph&,
                          const std::vector<int>& sol) const override {
        std::vector<int> out;
        for (int v : sol)
            if (before.has_vertex(v)) out.push_back(v);
        return out;
    }
};

} // namespace

std::vector<std::unique_ptr<rule>> knb_rules(int k) {
    std::vector<std::unique_ptr<rule>> rs;
    rs.push_back(std::make_unique<low_degree_deletion_rule>(k));
    rs.push_back(std::make_unique<low_degree_merging_rule>(k));
    return rs;
}

} // namespace gdr
