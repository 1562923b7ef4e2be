#include <doctest.h>

#include <vector>

#include "audit_corpus.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "rules_harmless.hpp"

using namespace gdr;

namespace {

graph from_edges(const std::vector<std::pair<int, int>>& es) {
    graph_builder b;
    for (auto [u, v] : es) b.add_edge(u, v);
    return b.build();
}

graph cycle(int n) {
    graph_builder b;
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

const rule& pick(const std::vector<std::unique_ptr<rule>>& rules, const std::string& id) {
    for (const auto& r : rules)
        if (r->id() == id) return *r;
    throw structural_error("missing rule " + id);
}

} // namespace

TEST_CASE("harmless rules come in pipeline priority order") {
    auto rules = harmless_rules();
    REQUIRE(rules.size() == 6);
    CHECK(rules[0]->id() == "harmless.isolate");
    CHECK(rules[1]->id() == "harmless.leaf");
    CHECK(rules[2]->id() == "harmless.floating_chain");
    CHECK(rules[3]->id() == "harmless.cycle_chain");
    CHECK(rules[4]->id() == "harmless.pendant_chain");
    CHECK(rules[5]->id() == "harmless.long_chain");
    for (const auto& r : rules) {
        CHECK(r->kind() == problem_kind::harmless);
        CHECK(r->lift_exact());
        CHECK(r->strict());
    }
}

TEST_CASE("isolate drops a lone edge and detects infeasible inputs") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.isolate");

    graph_builder b(cycle(4));
    b.add_edge(6, 7);
    auto res = r.apply(b.build());
    REQUIRE(res.has_value());
    CHECK(res->first == cycle(4));
    CHECK(res->second.a == 0);
    CHECK(res->second.payload.at("u") == 6);
    CHECK(res->second.payload.at("v") == 7);

    graph_builder iso(cycle(4));
    iso.add_vertex(9);
    CHECK_THROWS_AS(r.apply(iso.build()), infeasible_error);
    CHECK(r.applicable(iso.build()));
    CHECK_FALSE(r.applicable(cycle(4)));
}

TEST_CASE("leaf removes the smallest spare leaf and lifts it back") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.leaf");

    graph g = from_edges({{0, 1}, {0, 2}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("deleted") == 1);
    CHECK(res->second.payload.at("parent") == 0);
    CHECK(res->second.a == 1);
    CHECK_FALSE(res->first.has_vertex(1));

    auto lifted = r.lift(res->second, g, res->first, {});
    CHECK(lifted == std::vector<int>{1});
    CHECK(solution_feasible(problem_kind::harmless, g, lifted));
}

TEST_CASE("floating_chain solves a path component outright") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.floating_chain");

    graph_builder b(cycle(4));
    for (int i = 4; i < 7; ++i) b.add_edge(i, i + 1);
    graph g = b.build();
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->first == cycle(4));
    CHECK(res->second.a == 2);
    CHECK(res->second.b == 2);
    CHECK(res->second.payload.at("path") == nlohmann::json({4, 5, 6, 7}));

    auto lifted = r.lift(res->second, g, res->first, {});
    std::sort(lifted.begin(), lifted.end());
    CHECK(lifted == std::vector<int>{4, 7});
    CHECK_FALSE(r.applicable(cycle(4)));
}

TEST_CASE("cycle_chain clips a square hanging off the graph") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.cycle_chain");

    graph c4 = cycle(4);
    auto res = r.apply(c4);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("v") == 0);
    CHECK(res->second.payload.at("u") == 1);
    CHECK(res->second.payload.at("w") == 3);
    CHECK(res->second.payload.at("x") == 2);
    CHECK_FALSE(res->first.has_vertex(1));

    auto lifted = r.lift(res->second, c4, res->first, {});
    CHECK(lifted == std::vector<int>{1});

    // A triangle has no fourth corner, so the rule must not fire.
    CHECK_FALSE(r.applicable(cycle(3)));
}

TEST_CASE("pendant_chain prefers deleting a bare leaf") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.pendant_chain");

    graph g = from_edges({{0, 1}, {1, 2}, {0, 3}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("site") == 0);
    CHECK(res->second.payload.at("kept_mid") == 1);
    CHECK(res->second.payload.at("kept_tip") == 2);
    CHECK(res->second.payload.at("deleted") == nlohmann::json({3}));
    CHECK_FALSE(res->first.has_vertex(3));

    auto lifted = r.lift(res->second, g, res->first, {0});
    CHECK(lifted == std::vector<int>{2, 3});
    CHECK(solution_feasible(problem_kind::harmless, g, lifted));
}

TEST_CASE("pendant_chain removes a whole spare chain when no leaf exists") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.pendant_chain");

    graph g = from_edges({{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("site") == 0);
    CHECK(res->second.payload.at("kept_mid") == 3);
    CHECK(res->second.payload.at("kept_tip") == 4);
    CHECK(res->second.payload.at("deleted") == nlohmann::json({1, 2}));
    CHECK(res->first.vertex_count() == 3);

    auto lifted = r.lift(res->second, g, res->first, {});
    CHECK(lifted == std::vector<int>{2});
}

TEST_CASE("long_chain contracts a run of three degree-two vertices") {
    auto rules = harmless_rules();
    const rule& r = pick(rules, "harmless.long_chain");

    graph g = from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    const auto& p = res->second.payload;
    CHECK(p.at("v") == 2);
    CHECK(p.at("u") == 1);
    CHECK(p.at("w") == 3);
    CHECK(p.at("x") == 0);
    CHECK(p.at("y") == 4);
    int merged = p.at("merged").get<int>();
    CHECK(res->first.has_vertex(merged));
    CHECK(res->first.vertex_count() == 2);
    CHECK(res->first.has_edge(merged, 5));

    auto lifted = r.lift(res->second, g, res->first, {});
    std::sort(lifted.begin(), lifted.end());
    CHECK(lifted.size() == 2);
    CHECK(solution_feasible(problem_kind::harmless, g, lifted));

    // Plain five-cycles and five-paths would leave the merged vertex
    // isolated, so the rule skips them.
    CHECK_FALSE(r.applicable(cycle(5)));
    CHECK_FALSE(r.applicable(from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("every harmless rule survives its audit") {
    auto rules = harmless_rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        const rule& r = *rules[i];
        auto corpus = audit_corpus(r, 40, mix_seed(7001, i));
        audit_report rep = audit_rule(r, corpus, mix_seed(7002, i));
        INFO(r.id());
        for (const auto& v : rep.violations) INFO(v);
        CHECK(rep.passed());
        CHECK(rep.graphs_checked == 40);
    }
}
