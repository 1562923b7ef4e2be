#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"

using namespace gdr;

TEST_CASE("mix_seed is stable and sensitive to every argument") {
    CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
    CHECK(mix_seed(1) != mix_seed(2));
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
    CHECK(mix_seed(1, 2, 3) != mix_seed(1, 2, 4));
    CHECK(mix_seed(7) == mix_seed(7, 0, 0));
}

TEST_CASE("rand_below covers its range and rejects empty ranges") {
    std::mt19937_64 rng(7);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        int x = rand_below(rng, 5);
        CHECK(x >= 0);
        CHECK(x < 5);
        seen.insert(x);
    }
    CHECK(seen.size() == 5);
    CHECK_THROWS_AS(rand_below(rng, 0), structural_error);
}

TEST_CASE("random_graph respects vertex ids and edge probability extremes") {
    std::mt19937_64 rng(11);
    graph empty = random_graph(6, 0, rng);
    CHECK(empty.vertex_count() == 6);
    CHECK(empty.edge_count() == 0);
    graph full = random_graph(6, 100, rng);
    CHECK(full.edge_count() == 15);
    CHECK(full.vertices() == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("random generators are deterministic for a fixed seed") {
    std::mt19937_64 a(mix_seed(42)), b(mix_seed(42));
    CHECK(random_graph(10, 30, a) == random_graph(10, 30, b));
    CHECK(random_connected_graph(10, 30, a) == random_connected_graph(10, 30, b));
    CHECK(random_smooth_graph(10, 30, a) == random_smooth_graph(10, 30, b));
    CHECK(random_regular_graph(10, 3, a) == random_regular_graph(10, 3, b));
}

TEST_CASE("random_connected_graph is connected at every size and density") {
    std::mt19937_64 rng(mix_seed(5, 1));
    for (int n = 1; n <= 12; ++n)
        for (int pct : {10, 40, 80}) {
            graph g = random_connected_graph(n, pct, rng);
            CHECK(g.vertex_count() == n);
            CHECK(components(g).size() == 1);
        }
}

TEST_CASE("random_smooth_graph has no thin spots") {
    std::mt19937_64 rng(mix_seed(5, 2));
    for (int n : {4, 7, 12, 25})
        for (int trial = 0; trial < 10; ++trial) {
            graph g = random_smooth_graph(n, 25, rng);
            CHECK(components(g).size() == 1);
            for (int v : g.vertices()) {
                CHECK(g.degree(v) >= 2);
                if (g.degree(v) != 2) continue;
                const auto& nb = g.neighbors(v);
                CHECK((g.degree(nb[0]) > 2 || g.degree(nb[1]) > 2));
            }
        }
    CHECK_THROWS_AS(random_smooth_graph(3, 50, rng), structural_error);
}

TEST_CASE("random_regular_graph hits the requested degree") {
    std::mt19937_64 rng(mix_seed(5, 3));
    for (auto [n, d] : {std::pair{8, 3}, {9, 4}, {12, 5}}) {
        graph g = random_regular_graph(n, d, rng);
        CHECK(g.vertex_count() == n);
        for (int v : g.vertices()) CHECK(g.degree(v) == d);
    }
    CHECK_THROWS_AS(random_regular_graph(7, 3, rng), structural_error);
    CHECK_THROWS_AS(random_regular_graph(5, 5, rng), structural_error);
}
