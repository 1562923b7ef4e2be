#pragma once

#include <map>
#include <utility>
#include <vector>

namespace gdr {

// Undirected graph with stable non-negative integer vertex ids.
// No self-loops, no parallel edges. Adjacency lists are sorted ascending.
// Instances are immutable; edits go through graph_builder. Ids of removed
// vertices are never reused: fresh ids come from first_fresh(), which only
// grows along any chain of edits.
class graph {
public:
    graph() = default;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return edge_count_; }
    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    // Degree of an existing vertex.
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Sorted neighbor list of an existing vertex.
    const std::vector<int>& neighbors(int v) const;

    // All vertex ids, ascending.
    std::vector<int> vertices() const;

    // All edges as (u, v) with u < v, lexicographically ascending.
    std::vector<std::pair<int, int>> edges() const;

    // Smallest id never used by this graph or any graph it was edited from.
    int first_fresh() const { return first_fresh_; }

    const std::map<int, std::vector<int>>& adjacency() const { return adj_; }

    // Structural equality; first_fresh() is not compared.
    bool operator==(const graph& other) const { return adj_ == other.adj_; }

private:
    std::map<int, std::vector<int>> adj_;
    long edge_count_ = 0;
    int first_fresh_ = 0;

    friend class graph_builder;
};

// Incrementally edits a copy of a graph and finalizes it with build().
// All mutations keep the graph invariants; violations throw structural_error.
class graph_builder {
public:
    graph_builder() = default;
    explicit graph_builder(const graph& g) : g_(g) {}

    // Adds v if absent; no-op otherwise.
    void add_vertex(int v);

    // Allocates and adds a vertex with a never-used id. Returns the id.
    int add_fresh_vertex();

    // Adds edge {u, v}, creating missing endpoints.
    void add_edge(int u, int v);

    // Removes v and all incident edges.
    void remove_vertex(int v);

    void remove_edge(int u, int v);

    // Replaces the non-empty vertex set vs by one fresh vertex adjacent to
    // every neighbor of vs outside vs. Returns the fresh id.
    int merge(const std::vector<int>& vs);

    bool has_vertex(int v) const { return g_.has_vertex(v); }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int degree(int v) const { return g_.degree(v); }

    // Raises the fresh-id floor so later fresh ids skip everything below f.
    void reserve_ids_below(int f);

    graph build() const { return g_; }

private:
    void insert_arc(int u, int v);
    void erase_arc(int u, int v);

    graph g_;
};

// Subgraph induced by vs. first_fresh() carries over from g.
graph induced(const graph& g, const std::vector<int>& vs);

// Connected components. Ids ascend within each component; components are
// ordered by their smallest id.
std::vector<std::vector<int>> components(const graph& g);

// Vertices of the component containing v, ascending.
std::vector<int> component_of(const graph& g, int v);

// Disjoint union of a and b. Every vertex id of b is shifted up by the
// returned offset; ids of a are kept.
std::pair<graph, int> disjoint_union(const graph& a, const graph& b);

} // namespace gdr
