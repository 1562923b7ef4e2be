#include "generators.hpp"

#include <algorithm>

#include "errors.hpp"

namespace gdr {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix(splitmix(splitmix(a) ^ b) ^ c);
}

int rand_below(std::mt19937_64& rng, int n) {
    if (n <= 0) throw structural_error("rand_below: empty range");
    // Rejection keeps the draw unbiased.
    std::uint64_t span = static_cast<std::uint64_t>(n);
    std::uint64_t limit = ~0ull - ~0ull % span;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return static_cast<int>(x % span);
}

graph random_graph(int n, int edge_percent, std::mt19937_64& rng) {
    graph_builder b;
    for (int v = 0; v < n; ++v) b.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_below(rng, 100) < edge_percent) b.add_edge(u, v);
    return b.build();
}

graph random_connected_graph(int n, int edge_percent, std::mt19937_64& rng) {
    graph g = random_graph(n, edge_percent, rng);
    while (true) {
        auto comps = components(g);
        if (comps.size() <= 1) return g;
        graph_builder b(g);
        // Join the first component to a random vertex of each later one.
        for (size_t i = 1; i < comps.size(); ++i) {
            int u = comps[0][rand_below(rng, static_cast<int>(comps[0].size()))];
            int v = comps[i][rand_below(rng, static_cast<int>(comps[i].size()))];
            b.add_edge(u, v);
        }
        g = b.build();
    }
}

graph random_smooth_graph(int n, int edge_percent, std::mt19937_64& rng) {
    if (n < 4) throw structural_error("random_smooth_graph: need at least four vertices");
    graph g = random_connected_graph(n, edge_percent, rng);
    while (true) {
        // Raise a violating vertex's degree by one random edge and rescan.
        // Degrees only grow, so this terminates.
        int fix = -1;
        for (int v : g.vertices()) {
            if (g.degree(v) < 2) { fix = v; break; }
            if (g.degree(v) != 2) continue;
            const auto& nb = g.neighbors(v);
            if (g.degree(nb[0]) == 2 && g.degree(nb[1]) == 2) { fix = v; break; }
        }
        if (fix < 0) return g;
        std::vector<int> candidates;
        for (int u : g.vertices())
            if (u != fix && !g.has_edge(fix, u)) candidates.push_back(u);
        if (candidates.empty())
            throw structural_error("random_smooth_graph: saturated vertex");
        graph_builder b(g);
        b.add_edge(fix, candidates[rand_below(rng, static_cast<int>(candidates.size()))]);
        g = b.build();
    }
}

graph random_regular_graph(int n, int d, std::mt19937_64& rng) {
    if (n * d % 2 != 0 || d >= n)
        throw structural_error("random_regular_graph: bad parameters");
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rand_below(rng, static_cast<int>(i))]);
        graph_builder b;
        for (int v = 0; v < n; ++v) b.add_vertex(v);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || b.has_edge(u, v)) ok = false;
            else b.add_edge(u, v);
        }
        if (ok) return b.build();
    }
    throw structural_error("random_regular_graph: no simple pairing found");
}

} // namespace gdr
