#include "audit_corpus.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "errors.hpp"
#include "generators.hpp"
#include "rules_knb.hpp"

namespace gdr {

namespace {

graph base_graph(std::mt19937_64& rng, int max_n) {
    int hi = std::min(6, max_n);
    int n = 3 + rand_below(rng, hi - 2);
    return random_connected_graph(n, 40, rng);
}

int pick_vertex(const graph& g, std::mt19937_64& rng) {
    auto vs = g.vertices();
    return vs[rand_below(rng, static_cast<int>(vs.size()))];
}

graph attach_leaves(const graph& g, int v, int count) {
    graph_builder b(g);
    for (int i = 0; i < count; ++i) b.add_edge(v, b.add_fresh_vertex());
    return b.build();
}

// Appends the path w - mid - tip, turning it into a hair at w.
graph attach_hair(graph_builder& b, int w) {
    int mid = b.add_fresh_vertex();
    int tip = b.add_fresh_vertex();
    b.add_edge(w, mid);
    b.add_edge(mid, tip);
    return b.build();
}

graph add_path_component(const graph& g, int length) {
    graph_builder b(g);
    int prev = b.add_fresh_vertex();
    for (int i = 1; i < length; ++i) {
        int next = b.add_fresh_vertex();
        b.add_edge(prev, next);
        prev = next;
    }
    return b.build();
}

graph plant(const std::string& id, int k, std::mt19937_64& rng) {
    if (id == "harmless.isolate" || id == "nonblocker.isolated_edge") {
        return add_path_component(base_graph(rng, 6), 2);
    }
    if (id == "harmless.leaf" || id == "nonblocker.extra_leaf" ||
        id == "differential.leaf_pair") {
        graph g = base_graph(rng, 6);
        return attach_leaves(g, pick_vertex(g, rng), 2);
    }
    if (id == "harmless.floating_chain") {
        return add_path_component(base_graph(rng, 6), 2 + rand_below(rng, 3));
    }
    if (id == "harmless.cycle_chain") {
        graph g = base_graph(rng, 6);
        int x = pick_vertex(g, rng);
        graph_builder b(g);
        int a = b.add_fresh_vertex();
        int mid = b.add_fresh_vertex();
        int c = b.add_fresh_vertex();
        b.add_edge(x, a);
        b.add_edge(a, mid);
        b.add_edge(mid, c);
        b.add_edge(c, x);
        return b.build();
    }
    if (id == "harmless.pendant_chain") {
        graph g = base_graph(rng, 6);
        int v = pick_vertex(g, rng);
        graph_builder b(g);
        attach_hair(b, v);
        if (rand_below(rng, 2) == 0) {
            b.add_edge(v, b.add_fresh_vertex());
            return b.build();
        }
        return attach_hair(b, v);
    }
    if (id == "harmless.long_chain") {
        graph g = base_graph(rng, 6);
        auto vs = g.vertices();
        int x = vs[rand_below(rng, static_cast<int>(vs.size()))];
        int y = x;
        while (y == x) y = vs[rand_below(rng, static_cast<int>(vs.size()))];
        graph_builder b(g);
        int u = b.add_fresh_vertex();
        int mid = b.add_fresh_vertex();
        int w = b.add_fresh_vertex();
        b.add_edge(x, u);
        b.add_edge(u, mid);
        b.add_edge(mid, w);
        b.add_edge(w, y);
        return b.build();
    }
    if (id == "nonblocker.isolate") {
        graph g = base_graph(rng, 6);
        graph_builder b(g);
        b.add_fresh_vertex();
        return b.build();
    }
    if (id == "nonblocker.merge_leaf_parents") {
        graph g = base_graph(rng, 6);
        auto vs = g.vertices();
        int p = vs[rand_below(rng, static_cast<int>(vs.size()))];
        int q = p;
        while (q == p) q = vs[rand_below(rng, static_cast<int>(vs.size()))];
        return attach_leaves(attach_leaves(g, p, 1), q, 1);
    }
    if (id == "differential.hair_pair") {
        graph g = base_graph(rng, 6);
        int w = pick_vertex(g, rng);
        graph_builder b(g);
        attach_hair(b, w);
        return attach_hair(b, w);
    }
    if (id == "differential.leaf_hair") {
        graph g = base_graph(rng, 6);
        int w = pick_vertex(g, rng);
        graph_builder b(g);
        b.add_edge(w, b.add_fresh_vertex());
        return attach_hair(b, w);
    }
    if (id == "differential.long_hair") {
        graph g = base_graph(rng, 6);
        graph_builder b(g);
        int w = b.add_fresh_vertex();
        b.add_edge(pick_vertex(g, rng), w);
        return attach_hair(b, w);
    }
    if (id == "differential.neighbor_hair") {
        graph g = base_graph(rng, 6);
        auto es = g.edges();
        auto [w1, w2] = es[rand_below(rng, static_cast<int>(es.size()))];
        graph_builder b(g);
        attach_hair(b, w1);
        return attach_hair(b, w2);
    }
    if (id == "knb.low_degree_deletion") {
        graph g = base_graph(rng, 9 - k);
        if (rand_below(rng, 2) == 0) return add_path_component(g, 2);
        return attach_leaves(g, pick_vertex(g, rng), k + 1);
    }
    if (id == "knb.low_degree_merging") {
        graph g = base_graph(rng, 6);
        g = attach_leaves(g, pick_vertex(g, rng), 1 + rand_below(rng, 2));
        auto rules = knb_rules(k);
        std::vector<const rule*> deletion{rules.front().get()};
        return run_to_fixpoint(g, deletion).result();
    }
    throw structural_error("no corpus recipe for rule " + id);
}

} // namespace

std::vector<graph> audit_corpus(const rule& r, int count, std::uint64_t seed) {
    std::vector<graph> out;
    std::mt19937_64 rng(mix_seed(seed, 0x61756469));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > count * 200)
            throw structural_error("could not build corpus for rule " + r.id());
        graph g = plant(r.id(), r.k(), rng);
        if (g.vertex_count() > 10 || !r.applicable(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace gdr
