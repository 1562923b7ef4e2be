#include "chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace gdr {

std::vector<int> chain::interior() const {
    if (kind == chain_kind::cycle) return vertices;
    // The first and last stored vertices are never interior: supports,
    // leaves, and path endpoints all have degree other than two.
    std::vector<int> out;
    for (size_t i = 1; i + 1 < vertices.size(); ++i) out.push_back(vertices[i]);
    return out;
}

namespace {

// Walks from `from` through degree-two vertices starting at `next`, stopping
// at the first vertex that is not degree two. Appends the walked vertices
// (including the stop vertex) to path.
int walk_run(const graph& g, int from, int next, std::vector<int>& path) {
    int prev = from, cur = next;
    while (g.degree(cur) == 2) {
        path.push_back(cur);
        const auto& nb = g.neighbors(cur);
        int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    }
    path.push_back(cur);
    return cur;
}

} // namespace

std::vector<chain> find_chains(const graph& g) {
    std::vector<chain> out;
    std::set<int> consumed;  // interior vertices already assigned

    for (const auto& comp : components(g)) {
        bool all_deg2 = true, some_deg_ge3 = false;
        for (int v : comp) {
            int d = g.degree(v);
            if (d != 2) all_deg2 = false;
            if (d >= 3) some_deg_ge3 = true;
        }

        if (all_deg2 && comp.size() >= 3) {
            // Cycle component: start at smallest id toward its smaller neighbor.
            chain c;
            c.kind = chain_kind::cycle;
            int start = comp[0];
            const auto& nb = g.neighbors(start);
            int prev = start, cur = std::min(nb[0], nb[1]);
            c.vertices.push_back(start);
            while (cur != start) {
                c.vertices.push_back(cur);
                const auto& cnb = g.neighbors(cur);
                int nxt = (cnb[0] == prev) ? cnb[1] : cnb[0];
                prev = cur;
                cur = nxt;
            }
            out.push_back(std::move(c));
            continue;
        }

        if (!some_deg_ge3) {
            // Path component (single vertices excluded: a chain needs an edge).
            if (comp.size() < 2) continue;
            int start = -1;
            for (int v : comp)
                if (g.degree(v) <= 1) { start = v; break; }
            // comp is sorted ascending, so the first leaf is the smaller endpoint.
            chain c;
            c.kind = chain_kind::floating;
            c.vertices.push_back(start);
            if (g.degree(start) == 1)
                walk_run(g, start, g.neighbors(start)[0], c.vertices);
            out.push_back(std::move(c));
            continue;
        }

        // Pendant chains: walk from each leaf to the first branch vertex.
        for (int v : comp) {
            if (g.degree(v) != 1) continue;
            std::vector<int> path{v};
            int stop = walk_run(g, v, g.neighbors(v)[0], path);
            chain c;
            c.kind = chain_kind::pendant;
            c.support_a = stop;
            std::reverse(path.begin(), path.end());
            c.vertices = std::move(path);
            for (size_t i = 1; i + 1 < c.vertices.size(); ++i) consumed.insert(c.vertices[i]);
            out.push_back(std::move(c));
        }

        // Internal chains: remaining degree-two runs anchored at branch
        // vertices on both ends.
        for (int v : comp) {
            if (g.degree(v) != 2 || consumed.count(v)) continue;
            const auto& nb = g.neighbors(v);
            std::vector<int> left{v}, right;
            int a = walk_run(g, v, nb[0], left);
            std::reverse(left.begin(), left.end());
            int b = walk_run(g, v, nb[1], right);
            std::vector<int> path = left;
            path.insert(path.end(), right.begin(), right.end());
            if (a > b) {
                std::reverse(path.begin(), path.end());
                std::swap(a, b);
            } else if (a == b && path.size() > 3 && path[1] > path[path.size() - 2]) {
                // Loop anchored at a single branch vertex: orient toward the
                // smaller first interior vertex.
                std::reverse(path.begin(), path.end());
            }
            chain c;
            c.kind = chain_kind::internal;
            c.vertices = std::move(path);
            c.support_a = a;
            c.support_b = b;
            for (size_t i = 1; i + 1 < c.vertices.size(); ++i) consumed.insert(c.vertices[i]);
            out.push_back(std::move(c));
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const chain& x, const chain& y) {
        int mx = *std::min_element(x.vertices.begin(), x.vertices.end());
        int my = *std::min_element(y.vertices.begin(), y.vertices.end());
        return mx < my;
    });
    return out;
}

} // namespace gdr
