#include <doctest.h>

#include "errors.hpp"
#include "graph.hpp"

using namespace gdr;

namespace {

graph path_graph(int n) {
    graph_builder b;
    for (int v = 0; v < n; ++v) b.add_vertex(v);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

} // namespace

TEST_CASE("builder constructs and mutates") {
    graph_builder b;
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_vertex(7);
    graph g = b.build();

    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(7) == 0);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.vertices() == std::vector<int>{0, 1, 2, 7});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.first_fresh() == 8);
}

TEST_CASE("builder rejects invariant violations") {
    graph_builder b;
    b.add_edge(0, 1);
    CHECK_THROWS_AS(b.add_edge(1, 1), structural_error);
    CHECK_THROWS_AS(b.add_edge(1, 0), structural_error);
    CHECK_THROWS_AS(b.add_vertex(-1), structural_error);
    CHECK_THROWS_AS(b.remove_edge(0, 2), structural_error);
    CHECK_THROWS_AS(b.remove_vertex(9), structural_error);
    CHECK_THROWS_AS(b.merge({}), structural_error);
}

TEST_CASE("remove_vertex drops incident edges") {
    graph_builder b(path_graph(4));
    b.remove_vertex(1);
    graph g = b.build();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(2, 3));
    CHECK(g.degree(0) == 0);
}

TEST_CASE("fresh ids are never reused") {
    graph_builder b(path_graph(3));
    b.remove_vertex(2);
    int z = b.add_fresh_vertex();
    CHECK(z == 3);
    graph g = b.build();
    CHECK(g.first_fresh() == 4);

    graph_builder b2(g);
    b2.remove_vertex(3);
    CHECK(b2.add_fresh_vertex() == 4);
}

TEST_CASE("merge contracts a set to a fresh vertex") {
    // Star center 0 with rays 1..3, plus pendant 4 on ray 1.
    graph_builder b;
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(0, 3);
    b.add_edge(1, 4);
    int z = b.merge({0, 1});
    CHECK(z == 5);
    graph g = b.build();
    CHECK(g.vertices() == std::vector<int>{2, 3, 4, 5});
    CHECK(g.neighbors(z) == std::vector<int>{2, 3, 4});
    CHECK(g.edge_count() == 3);
    CHECK(g.first_fresh() == 6);
}

TEST_CASE("merge of a whole component leaves an isolated fresh vertex") {
    graph_builder b(path_graph(3));
    int z = b.merge({0, 1, 2});
    graph g = b.build();
    CHECK(g.vertices() == std::vector<int>{z});
    CHECK(g.degree(z) == 0);
}

TEST_CASE("induced subgraph keeps ids and first_fresh") {
    graph g = path_graph(5);
    graph h = induced(g, {0, 1, 3});
    CHECK(h.vertices() == std::vector<int>{0, 1, 3});
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(0, 1));
    CHECK(h.first_fresh() == g.first_fresh());
    CHECK_THROWS_AS(induced(g, {99}), structural_error);
}

TEST_CASE("components are sorted and complete") {
    graph_builder b(path_graph(3));
    b.add_edge(5, 6);
    b.add_vertex(4);
    graph g = b.build();
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{4});
    CHECK(comps[2] == std::vector<int>{5, 6});
    CHECK(component_of(g, 6) == std::vector<int>{5, 6});
}

TEST_CASE("disjoint_union shifts the second operand") {
    graph a = path_graph(3);
    graph_builder bb;
    bb.add_edge(0, 1);
    graph b = bb.build();

    auto [u, offset] = disjoint_union(a, b);
    CHECK(offset == 3);
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 3);
    CHECK(u.has_edge(offset + 0, offset + 1));
    CHECK(u.first_fresh() == offset + b.first_fresh());
}
