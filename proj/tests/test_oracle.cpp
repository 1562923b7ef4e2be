#include <doctest.h>

#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"

using namespace gdr;

namespace {

graph cycle(int n) {
    graph_builder b;
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

graph path(int n) {
    graph_builder b;
    b.add_vertex(0);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

graph star(int leaves) {
    graph_builder b;
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.build();
}

graph complete(int n) {
    graph_builder b;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

graph petersen() {
    graph_builder b;
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);        // outer cycle
        b.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        b.add_edge(i, 5 + i);               // spokes
    }
    return b.build();
}

} // namespace

TEST_CASE("minimum dominating sets of small named graphs") {
    CHECK(exact_min_dominating_set(cycle(4)).size() == 2);
    CHECK(exact_min_dominating_set(cycle(5)).size() == 2);
    CHECK(exact_min_dominating_set(cycle(7)).size() == 3);
    CHECK(exact_min_dominating_set(cycle(10)).size() == 4);
    CHECK(exact_min_dominating_set(star(5)).size() == 1);
    CHECK(exact_min_dominating_set(path(4)).size() == 2);
    CHECK(exact_min_dominating_set(graph{}).empty());

    auto d = exact_min_dominating_set(cycle(6));
    CHECK(d.size() == 2);
    CHECK(is_dominating_set(cycle(6), d));
}

TEST_CASE("minimum total dominating sets of small named graphs") {
    CHECK(exact_min_total_dominating_set(cycle(4)).size() == 2);
    CHECK(exact_min_total_dominating_set(cycle(5)).size() == 3);
    CHECK(exact_min_total_dominating_set(cycle(6)).size() == 4);
    CHECK(exact_min_total_dominating_set(path(5)).size() == 3);
    CHECK(exact_min_total_dominating_set(complete(4)).size() == 2);
    CHECK(exact_min_total_dominating_set(petersen()).size() == 4);
    CHECK(exact_min_total_dominating_set(star(6)).size() == 2);

    auto d = exact_min_total_dominating_set(path(6));
    CHECK(is_total_dominating_set(path(6), d));
    CHECK_FALSE(is_total_dominating_set(path(6), {2, 3, 4}));

    graph_builder b;
    b.add_edge(0, 1);
    b.add_vertex(9);
    CHECK_THROWS_AS(exact_min_total_dominating_set(b.build()), infeasible_error);
}

TEST_CASE("minimum k-dominating sets of small named graphs") {
    graph k4 = complete(4);
    CHECK(exact_min_k_dominating_set(k4, 2).size() == 2);
    CHECK(exact_min_k_dominating_set(k4, 3).size() == 3);

    graph_builder b33;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) b33.add_edge(i, j);
    CHECK(exact_min_k_dominating_set(b33.build(), 2).size() == 3);

    CHECK(exact_min_k_dominating_set(cycle(6), 2).size() == 3);
    CHECK(exact_min_k_dominating_set(complete(5), 2).size() == 2);

    // A leaf has degree below 2, so it is forced into the set.
    auto d = exact_min_k_dominating_set(star(3), 2);
    CHECK(d == std::vector<int>{1, 2, 3});
    CHECK(is_k_dominating_set(star(3), d, 2));
    CHECK_FALSE(is_k_dominating_set(cycle(6), {0, 3}, 2));
}

TEST_CASE("roman domination weight and partition") {
    auto rp = exact_min_roman(path(4));
    CHECK(rp.weight == 3);
    CHECK(rp.two.size() + rp.one.size() + rp.zero.size() == 4);

    CHECK(exact_min_roman(cycle(5)).weight == 4);
    CHECK(exact_min_roman(star(6)).weight == 2);
    CHECK(exact_min_roman(complete(4)).weight == 2);
    CHECK(exact_min_roman(graph{}).weight == 0);

    // Every zero-labeled vertex must have a two-labeled neighbor.
    graph g = cycle(7);
    rp = exact_min_roman(g);
    for (int v : rp.zero) {
        bool ok = false;
        for (int w : g.neighbors(v))
            for (int t : rp.two)
                if (w == t) ok = true;
        CHECK(ok);
    }
}

TEST_CASE("maximum differential of small named graphs") {
    CHECK(exact_differential(path(4)) == 1);
    CHECK(exact_differential(cycle(4)) == 1);
    CHECK(exact_differential(star(4)) == 3);
    CHECK(exact_differential(cycle(5)) == 1);
    CHECK(exact_differential(complete(6)) == 4);
    CHECK(exact_differential(path(2)) == 0);
    CHECK(exact_differential(graph{}) == 0);

    auto d0 = exact_max_differential_set(star(4));
    CHECK(d0 == std::vector<int>{0});
    CHECK(differential_value(star(4), d0) == 3);
    CHECK(differential_value(cycle(4), {0, 2}) == 0);
    CHECK(differential_value(cycle(4), {1, 3}) == 0);
}

TEST_CASE("feasibility checkers on hand solutions") {
    graph c6 = cycle(6);
    CHECK(is_nonblocker(c6, {0, 1, 3, 4}));
    CHECK_FALSE(is_nonblocker(c6, {0, 1, 2, 3, 4, 5}));
    CHECK(is_nonblocker(c6, {}));

    CHECK(is_harmless_set(c6, {0, 3}));
    CHECK(is_harmless_set(c6, {0, 1}));
    CHECK_FALSE(is_harmless_set(c6, {0, 2}));

    CHECK(is_k_nonblocker(complete(5), {0, 1, 2}, 2));
    CHECK_FALSE(is_k_nonblocker(complete(5), {0, 1, 2, 3}, 2));
}

TEST_CASE("duality between maximum problems and domination numbers") {
    // Spot checks; the acceptance suite covers these exhaustively.
    for (const graph& g : {cycle(5), cycle(6), path(5), star(4), complete(4), petersen()}) {
        long n = g.vertex_count();
        CHECK(exact_max_nonblocker(g) ==
              n - static_cast<long>(exact_min_dominating_set(g).size()));
        CHECK(exact_max_harmless(g) ==
              n - static_cast<long>(exact_min_total_dominating_set(g).size()));
        CHECK(exact_max_k_nonblocker(g, 2) ==
              n - static_cast<long>(exact_min_k_dominating_set(g, 2).size()));
        CHECK(exact_differential(g) == n - exact_min_roman(g).weight);
    }
}

TEST_CASE("harmless maximum rejects isolated vertices") {
    graph_builder b;
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_vertex(7);
    CHECK_THROWS_AS(exact_max_harmless(b.build()), infeasible_error);
}

TEST_CASE("size bound is enforced") {
    graph big = cycle(21);
    CHECK_THROWS_AS(exact_min_dominating_set(big), too_large_error);
    CHECK_NOTHROW(exact_min_dominating_set(big, 24));
    CHECK_NOTHROW(exact_differential(big));
}

TEST_CASE("path total domination agrees with the exhaustive solver") {
    for (int n = 2; n <= 12; ++n) {
        graph p = path(n);
        std::vector<int> order;
        for (int i = 0; i < n; ++i) order.push_back(i);
        auto dp = path_total_dominating_set(order);
        CHECK(is_total_dominating_set(p, dp));
        CHECK(dp.size() == exact_min_total_dominating_set(p).size());
    }
    CHECK_THROWS_AS(path_total_dominating_set({5}), infeasible_error);
    CHECK(path_total_dominating_set({}).empty());

    // Path ids need not be contiguous or sorted.
    graph_builder b;
    b.add_edge(10, 3);
    b.add_edge(3, 7);
    b.add_edge(7, 1);
    auto d = path_total_dominating_set({10, 3, 7, 1});
    CHECK(is_total_dominating_set(b.build(), d));
    CHECK(d.size() == 2);
}
