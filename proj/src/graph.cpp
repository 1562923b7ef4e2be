#include "graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"

namespace gdr {

bool graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<int>& graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw structural_error("neighbors: unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (const auto& [u, nbrs] : adj_)
        for (int v : nbrs)
            if (u < v) out.emplace_back(u, v);
    return out;
}

void graph_builder::add_vertex(int v) {
    if (v < 0) throw structural_error("add_vertex: negative id " + std::to_string(v));
    g_.adj_.try_emplace(v);
    g_.first_fresh_ = std::max(g_.first_fresh_, v + 1);
}

int graph_builder::add_fresh_vertex() {
    int v = g_.first_fresh_;
    add_vertex(v);
    return v;
}

void graph_builder::insert_arc(int u, int v) {
    auto& nbrs = g_.adj_[u];
    nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), v), v);
}

void graph_builder::erase_arc(int u, int v) {
    auto& nbrs = g_.adj_[u];
    nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), v));
}

void graph_builder::add_edge(int u, int v) {
    if (u == v) throw structural_error("add_edge: self-loop at " + std::to_string(u));
    if (g_.has_edge(u, v))
        throw structural_error("add_edge: duplicate edge {" + std::to_string(u) + ", " +
                               std::to_string(v) + "}");
    add_vertex(u);
    add_vertex(v);
    insert_arc(u, v);
    insert_arc(v, u);
    ++g_.edge_count_;
}

void graph_builder::remove_vertex(int v) {
    auto it = g_.adj_.find(v);
    if (it == g_.adj_.end())
        throw structural_error("remove_vertex: unknown vertex " + std::to_string(v));
    for (int w : it->second) erase_arc(w, v);
    g_.edge_count_ -= static_cast<long>(it->second.size());
    g_.adj_.erase(it);
}

void graph_builder::remove_edge(int u, int v) {
    if (!g_.has_edge(u, v))
        throw structural_error("remove_edge: no edge {" + std::to_string(u) + ", " +
                               std::to_string(v) + "}");
    erase_arc(u, v);
    erase_arc(v, u);
    --g_.edge_count_;
}

void graph_builder::reserve_ids_below(int f) {
    g_.first_fresh_ = std::max(g_.first_fresh_, f);
}

int graph_builder::merge(const std::vector<int>& vs) {
    if (vs.empty()) throw structural_error("merge: empty vertex set");
    std::set<int> inside(vs.begin(), vs.end());
    std::set<int> outside;
    for (int v : inside) {
        if (!g_.has_vertex(v))
            throw structural_error("merge: unknown vertex " + std::to_string(v));
        for (int w : g_.neighbors(v))
            if (!inside.count(w)) outside.insert(w);
    }
    for (int v : inside) remove_vertex(v);
    int z = add_fresh_vertex();
    for (int w : outside) add_edge(z, w);
    return z;
}

graph induced(const graph& g, const std::vector<int>& vs) {
    graph_builder b;
    std::set<int> keep(vs.begin(), vs.end());
    for (int v : keep) {
        if (!g.has_vertex(v))
            throw structural_error("induced: unknown vertex " + std::to_string(v));
        b.add_vertex(v);
        for (int w : g.neighbors(v))
            if (v < w && keep.count(w)) b.add_edge(v, w);
    }
    b.reserve_ids_below(g.first_fresh());
    return b.build();
}

std::vector<std::vector<int>> components(const graph& g) {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (const auto& [root, nbrs] : g.adjacency()) {
        if (seen.count(root)) continue;
        std::vector<int> comp;
        std::vector<int> stack{root};
        seen.insert(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> component_of(const graph& g, int v) {
    if (!g.has_vertex(v))
        throw structural_error("component_of: unknown vertex " + std::to_string(v));
    std::vector<int> comp;
    std::set<int> seen{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : g.neighbors(u))
            if (seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::pair<graph, int> disjoint_union(const graph& a, const graph& b) {
    int offset = a.first_fresh();
    graph_builder out(a);
    for (const auto& [v, nbrs] : b.adjacency()) out.add_vertex(v + offset);
    for (auto [u, v] : b.edges()) out.add_edge(u + offset, v + offset);
    return {out.build(), offset};
}

} // namespace gdr
