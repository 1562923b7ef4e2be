#include <doctest.h>

#include <vector>

#include "audit_corpus.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "rules_nonblocker.hpp"

using namespace gdr;

namespace {

graph from_edges(const std::vector<std::pair<int, int>>& es) {
    graph_builder b;
    for (auto [u, v] : es) b.add_edge(u, v);
    return b.build();
}

const rule& pick(const std::vector<std::unique_ptr<rule>>& rules, const std::string& id) {
    for (const auto& r : rules)
        if (r->id() == id) return *r;
    throw structural_error("missing rule " + id);
}

} // namespace

TEST_CASE("nonblocker rules come in pipeline priority order") {
    auto rules = nonblocker_rules();
    REQUIRE(rules.size() == 4);
    CHECK(rules[0]->id() == "nonblocker.isolate");
    CHECK(rules[1]->id() == "nonblocker.isolated_edge");
    CHECK(rules[2]->id() == "nonblocker.merge_leaf_parents");
    CHECK(rules[3]->id() == "nonblocker.extra_leaf");
    for (const auto& r : rules) {
        CHECK(r->kind() == problem_kind::nonblocker);
        CHECK(r->lift_exact());
    }
}

TEST_CASE("isolate drops a lone vertex without touching the solution") {
    auto rules = nonblocker_rules();
    const rule& r = pick(rules, "nonblocker.isolate");

    graph_builder b(from_edges({{0, 1}, {1, 2}}));
    b.add_vertex(5);
    graph g = b.build();
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("v") == 5);
    CHECK(res->second.a == 0);
    CHECK_FALSE(res->first.has_vertex(5));
    CHECK(r.lift(res->second, g, res->first, {0, 2}) == std::vector<int>{0, 2});
}

TEST_CASE("isolated_edge keeps one endpoint's worth of value") {
    auto rules = nonblocker_rules();
    const rule& r = pick(rules, "nonblocker.isolated_edge");

    graph_builder b(from_edges({{0, 1}, {1, 2}}));
    b.add_edge(7, 4);
    graph g = b.build();
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.a == 1);
    CHECK(res->second.payload.at("u") == 4);
    CHECK(res->second.payload.at("v") == 7);
    CHECK(res->first == from_edges({{0, 1}, {1, 2}}));

    auto lifted = r.lift(res->second, g, res->first, {});
    CHECK(lifted == std::vector<int>{4});
    CHECK(solution_feasible(problem_kind::nonblocker, g, lifted));
}

TEST_CASE("merge_leaf_parents contracts every parent of a leaf") {
    auto rules = nonblocker_rules();
    const rule& r = pick(rules, "nonblocker.merge_leaf_parents");

    // Double star: parents 0 and 1, leaves 2 and 3.
    graph g = from_edges({{0, 1}, {0, 2}, {1, 3}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("members") == nlohmann::json({0, 1}));
    int merged = res->second.payload.at("merged").get<int>();
    CHECK(res->first.vertex_count() == 3);
    CHECK(res->first.degree(merged) == 2);
    CHECK(res->first.has_edge(merged, 2));
    CHECK(res->first.has_edge(merged, 3));

    // A merged vertex in the solution trades places with one of its leaves.
    auto swapped = r.lift(res->second, g, res->first, {merged});
    CHECK(swapped == std::vector<int>{2});
    auto kept = r.lift(res->second, g, res->first, {2, 3});
    std::sort(kept.begin(), kept.end());
    CHECK(kept == std::vector<int>{2, 3});
    CHECK(solution_feasible(problem_kind::nonblocker, g, kept));

    // One parent alone is not enough.
    CHECK_FALSE(r.applicable(from_edges({{0, 1}, {0, 2}})));
}

TEST_CASE("extra_leaf swaps the parent out when it was chosen") {
    auto rules = nonblocker_rules();
    const rule& r = pick(rules, "nonblocker.extra_leaf");

    graph g = from_edges({{0, 1}, {0, 2}, {0, 3}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("deleted") == 1);
    CHECK(res->second.payload.at("kept") == 2);
    CHECK(res->second.payload.at("parent") == 0);

    auto plain = r.lift(res->second, g, res->first, {3});
    std::sort(plain.begin(), plain.end());
    CHECK(plain == std::vector<int>{1, 3});

    auto swapped = r.lift(res->second, g, res->first, {0});
    std::sort(swapped.begin(), swapped.end());
    CHECK(swapped == std::vector<int>{1, 2});
    CHECK(solution_feasible(problem_kind::nonblocker, g, swapped));
}

TEST_CASE("every nonblocker rule survives its audit") {
    auto rules = nonblocker_rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        const rule& r = *rules[i];
        auto corpus = audit_corpus(r, 40, mix_seed(7101, i));
        audit_report rep = audit_rule(r, corpus, mix_seed(7102, i));
        INFO(r.id());
        for (const auto& v : rep.violations) INFO(v);
        CHECK(rep.passed());
        CHECK(rep.graphs_checked == 40);
    }
}
