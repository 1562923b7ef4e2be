#include <doctest.h>

#include <vector>

#include "audit_corpus.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rules_differential.hpp"

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

TEST_CASE("differential rules come in pipeline priority order") {
    auto rules = differential_rules();
    REQUIRE(rules.size() == 5);
    CHECK(rules[0]->id() == "differential.leaf_pair");
    CHECK(rules[1]->id() == "differential.hair_pair");
    CHECK(rules[2]->id() == "differential.leaf_hair");
    CHECK(rules[3]->id() == "differential.long_hair");
    CHECK(rules[4]->id() == "differential.neighbor_hair");
    for (const auto& r : rules) {
        CHECK(r->kind() == problem_kind::differential);
        CHECK(r->lift_exact() == (r->id() == "differential.long_hair"));
    }
}

TEST_CASE("leaf_pair joins two leaves and swaps a lone leaf for the parent") {
    auto rules = differential_rules();
    const rule& r = pick(rules, "differential.leaf_pair");

    graph g = from_edges({{0, 1}, {0, 2}, {0, 3}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.a == 0);
    CHECK(res->second.payload.at("parent") == 0);
    CHECK(res->second.payload.at("u1") == 1);
    CHECK(res->second.payload.at("u2") == 2);
    CHECK(res->first.has_edge(1, 2));
    CHECK(res->first.edge_count() == 4);

    auto swapped = r.lift(res->second, g, res->first, {1});
    CHECK(swapped == std::vector<int>{0});
    CHECK(differential_value(g, swapped) == 2);

    auto both = r.lift(res->second, g, res->first, {1, 2});
    std::sort(both.begin(), both.end());
    CHECK(both == std::vector<int>{1, 2});
    auto parent = r.lift(res->second, g, res->first, {0, 1});
    std::sort(parent.begin(), parent.end());
    CHECK(parent == std::vector<int>{0, 1});
}

TEST_CASE("hair_pair removes both tips, leaving the mids as leaves") {
    auto rules = differential_rules();
    const rule& r = pick(rules, "differential.hair_pair");

    graph g = from_edges({{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("w") == 0);
    CHECK(res->second.payload.at("mids") == nlohmann::json({1, 3}));
    CHECK(res->second.payload.at("tips") == nlohmann::json({2, 4}));
    CHECK(res->first == from_edges({{0, 1}, {0, 3}}));
    CHECK(r.lift(res->second, g, res->first, {0}) == std::vector<int>{0});
}

TEST_CASE("leaf_hair drops the hair tip next to a plain leaf") {
    auto rules = differential_rules();
    const rule& r = pick(rules, "differential.leaf_hair");

    graph g = from_edges({{0, 1}, {0, 2}, {2, 3}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("w") == 0);
    CHECK(res->second.payload.at("leaf") == 1);
    CHECK(res->second.payload.at("mid") == 2);
    CHECK(res->second.payload.at("tip") == 3);
    CHECK(res->first == from_edges({{0, 1}, {0, 2}}));
}

TEST_CASE("long_hair removes the hair and its carrier for exactly one unit") {
    auto rules = differential_rules();
    const rule& r = pick(rules, "differential.long_hair");

    graph g = from_edges({{0, 1}, {1, 2}, {0, 4}, {4, 5}, {5, 6}, {6, 4}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.a == 1);
    CHECK(res->second.payload.at("w") == 0);
    CHECK(res->second.payload.at("v") == 1);
    CHECK(res->second.payload.at("u") == 2);
    CHECK(res->first == from_edges({{4, 5}, {5, 6}, {6, 4}}));

    auto lifted = r.lift(res->second, g, res->first, {});
    CHECK(lifted == std::vector<int>{1});
    CHECK(differential_value(g, lifted) == 1);
    auto more = r.lift(res->second, g, res->first, {5});
    std::sort(more.begin(), more.end());
    CHECK(more == std::vector<int>{1, 5});
    CHECK(differential_value(g, more) == differential_value(res->first, {5}) + 1);
}

TEST_CASE("neighbor_hair cuts the edge between two hair carriers") {
    auto rules = differential_rules();
    const rule& r = pick(rules, "differential.neighbor_hair");

    graph g = from_edges({{0, 1}, {0, 2}, {2, 3}, {1, 4}, {4, 5}});
    auto res = r.apply(g);
    REQUIRE(res.has_value());
    CHECK(res->second.payload.at("w1") == 0);
    CHECK(res->second.payload.at("w2") == 1);
    CHECK_FALSE(res->first.has_edge(0, 1));
    CHECK(res->first.vertex_count() == 6);

    // A carrier whose only hair runs through the common edge does not count.
    CHECK_FALSE(r.applicable(from_edges({{0, 1}, {1, 2}, {0, 3}, {3, 4}})));
}

TEST_CASE("every differential rule survives its audit") {
    auto rules = differential_rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        const rule& r = *rules[i];
        auto corpus = audit_corpus(r, 40, mix_seed(7201, i));
        audit_report rep = audit_rule(r, corpus, mix_seed(7202, i));
        INFO(r.id());
        for (const auto& v : rep.violations) INFO(v);
        CHECK(rep.passed());
        CHECK(rep.graphs_checked == 40);
    }
}
