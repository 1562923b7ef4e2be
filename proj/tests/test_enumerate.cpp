#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"

using namespace gdr;

namespace {

long count_graphs(int n, bool connected) {
    long count = 0;
    auto bump = [&](const graph&) { ++count; };
    if (connected)
        for_each_connected_graph(n, bump);
    else
        for_each_graph(n, bump);
    return count;
}

} // namespace

TEST_CASE("graph counts per isomorphism class match the known sequence") {
    const std::vector<long> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<long> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CHECK(count_graphs(n, false) == all[n - 1]);
        CHECK(count_graphs(n, true) == connected[n - 1]);
    }
}

TEST_CASE("emitted graphs are canonical, distinct and ascending") {
    std::vector<std::uint64_t> forms;
    for_each_graph(6, [&](const graph& g) {
        CHECK(g.vertex_count() == 6);
        CHECK(g.vertices() == std::vector<int>{0, 1, 2, 3, 4, 5});
        forms.push_back(canonical_form(g));
    });
    for (size_t i = 1; i < forms.size(); ++i) CHECK(forms[i - 1] < forms[i]);
}

TEST_CASE("canonical_form is invariant under relabeling") {
    std::mt19937_64 rng(mix_seed(20260817));
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + rand_below(rng, 8);
        graph g = random_graph(n, 15 + rand_below(rng, 70), rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rand_below(rng, i)]);
        graph_builder b;
        for (int v = 0; v < n; ++v) b.add_vertex(perm[v]);
        for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
        CHECK(canonical_form(g) == canonical_form(b.build()));
    }
}

TEST_CASE("canonical_form separates non-isomorphic graphs of one degree sequence") {
    // C6 and two triangles share the degree sequence but not the form.
    graph_builder c6, twin;
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    for (int i : {0, 3}) {
        twin.add_edge(i, i + 1);
        twin.add_edge(i + 1, i + 2);
        twin.add_edge(i, i + 2);
    }
    CHECK(canonical_form(c6.build()) != canonical_form(twin.build()));
}

TEST_CASE("enumeration rejects unsupported sizes") {
    CHECK_THROWS_AS(for_each_graph(11, [](const graph&) {}), too_large_error);
    CHECK_THROWS_AS(for_each_graph(0, [](const graph&) {}), too_large_error);
}
