#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "errors.hpp"

namespace gdr {

namespace {

struct bit_context {
    int n = 0;
    std::vector<int> ids;             // index -> vertex id, ascending
    std::map<int, int> index;         // vertex id -> index
    std::vector<std::uint32_t> open;  // open neighborhood masks
    std::uint32_t full = 0;
};

bit_context make_context(const graph& g, int bound, const std::string& op) {
    bit_context ctx;
    ctx.n = g.vertex_count();
    if (ctx.n > bound || ctx.n > 31)
        throw too_large_error(op + ": graph has " + std::to_string(ctx.n) +
                              " vertices, bound is " + std::to_string(std::min(bound, 31)));
    ctx.ids = g.vertices();
    for (int i = 0; i < ctx.n; ++i) ctx.index[ctx.ids[i]] = i;
    ctx.open.assign(ctx.n, 0);
    for (int i = 0; i < ctx.n; ++i)
        for (int w : g.neighbors(ctx.ids[i])) ctx.open[i] |= 1u << ctx.index.at(w);
    ctx.full = ctx.n == 31 ? 0x7fffffffu : (1u << ctx.n) - 1;
    return ctx;
}

std::vector<int> to_ids(const bit_context& ctx, std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < ctx.n; ++i)
        if (mask >> i & 1u) out.push_back(ctx.ids[i]);
    return out;
}

// Next mask with the same popcount (Gosper); masks of one cardinality are
// visited in increasing numeric order.
std::uint32_t next_same_popcount(std::uint32_t m) {
    std::uint32_t c = m & -m;
    std::uint32_t r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

std::uint32_t first_mask(int size) { return size == 0 ? 0u : (1u << size) - 1; }

template <typename Pred>
std::uint32_t find_smallest_set(const bit_context& ctx, Pred feasible) {
    for (int s = 0; s <= ctx.n; ++s) {
        std::uint32_t m = first_mask(s);
        while (true) {
            if (feasible(m)) return m;
            if (s == 0) break;
            std::uint32_t nxt = next_same_popcount(m);
            if (nxt > ctx.full) break;
            m = nxt;
        }
    }
    throw structural_error("oracle: no feasible set of any cardinality");
}

template <typename Pred>
long find_largest_size(const bit_context& ctx, Pred feasible) {
    for (int s = ctx.n; s >= 0; --s) {
        std::uint32_t m = first_mask(s);
        while (true) {
            if (feasible(m)) return s;
            if (s == 0) break;
            std::uint32_t nxt = next_same_popcount(m);
            if (nxt > ctx.full) break;
            m = nxt;
        }
    }
    return -1;
}

bool covers_closed(const bit_context& ctx, std::uint32_t d) {
    std::uint32_t covered = d;
    for (int i = 0; i < ctx.n; ++i)
        if (d >> i & 1u) covered |= ctx.open[i];
    return covered == ctx.full;
}

bool covers_open(const bit_context& ctx, std::uint32_t d) {
    std::uint32_t covered = 0;
    for (int i = 0; i < ctx.n; ++i)
        if (d >> i & 1u) covered |= ctx.open[i];
    return covered == ctx.full;
}

bool k_dominates(const bit_context& ctx, std::uint32_t d, int k) {
    for (int i = 0; i < ctx.n; ++i) {
        if (d >> i & 1u) continue;
        if (std::popcount(ctx.open[i] & d) < k) return false;
    }
    return true;
}

void require_no_isolate(const bit_context& ctx, const std::string& op) {
    for (int i = 0; i < ctx.n; ++i)
        if (ctx.open[i] == 0)
            throw infeasible_error(op + ": isolated vertex " + std::to_string(ctx.ids[i]));
}

} // namespace

bool is_dominating_set(const graph& g, const std::vector<int>& d) {
    std::map<int, bool> in;
    for (int v : d) in[v] = true;
    for (int v : g.vertices()) {
        if (in.count(v)) continue;
        bool hit = false;
        for (int w : g.neighbors(v))
            if (in.count(w)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

bool is_total_dominating_set(const graph& g, const std::vector<int>& d) {
    std::map<int, bool> in;
    for (int v : d) in[v] = true;
    for (int v : g.vertices()) {
        bool hit = false;
        for (int w : g.neighbors(v))
            if (in.count(w)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

bool is_k_dominating_set(const graph& g, const std::vector<int>& d, int k) {
    std::map<int, bool> in;
    for (int v : d) in[v] = true;
    for (int v : g.vertices()) {
        if (in.count(v)) continue;
        int hits = 0;
        for (int w : g.neighbors(v))
            if (in.count(w) && ++hits >= k) break;
        if (hits < k) return false;
    }
    return true;
}

bool is_nonblocker(const graph& g, const std::vector<int>& s) {
    std::map<int, bool> in;
    for (int v : s) in[v] = true;
    for (int v : s) {
        bool out = false;
        for (int w : g.neighbors(v))
            if (!in.count(w)) { out = true; break; }
        if (!out) return false;
    }
    return true;
}

bool is_harmless_set(const graph& g, const std::vector<int>& s) {
    std::map<int, bool> in;
    for (int v : s) in[v] = true;
    for (int v : g.vertices()) {
        bool out = false;
        for (int w : g.neighbors(v))
            if (!in.count(w)) { out = true; break; }
        if (!out) return false;
    }
    return true;
}

bool is_k_nonblocker(const graph& g, const std::vector<int>& s, int k) {
    std::map<int, bool> in;
    for (int v : s) in[v] = true;
    for (int v : s) {
        int out = 0;
        for (int w : g.neighbors(v))
            if (!in.count(w) && ++out >= k) break;
        if (out < k) return false;
    }
    return true;
}

long differential_value(const graph& g, const std::vector<int>& d0) {
    std::map<int, bool> in;
    for (int v : d0) in[v] = true;
    std::map<int, bool> boundary;
    for (int v : d0)
        for (int w : g.neighbors(v))
            if (!in.count(w)) boundary[w] = true;
    return static_cast<long>(boundary.size()) - static_cast<long>(d0.size());
}

std::vector<int> exact_min_dominating_set(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_min_dominating_set");
    std::uint32_t m = find_smallest_set(ctx, [&](std::uint32_t d) { return covers_closed(ctx, d); });
    return to_ids(ctx, m);
}

std::vector<int> exact_min_total_dominating_set(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_min_total_dominating_set");
    require_no_isolate(ctx, "exact_min_total_dominating_set");
    std::uint32_t m = find_smallest_set(ctx, [&](std::uint32_t d) { return covers_open(ctx, d); });
    return to_ids(ctx, m);
}

std::vector<int> exact_min_k_dominating_set(const graph& g, int k, int bound) {
    if (k < 1) throw precondition_error("exact_min_k_dominating_set: k must be positive");
    bit_context ctx = make_context(g, bound, "exact_min_k_dominating_set");
    // Vertices of degree below k cannot be k-dominated from outside, so they
    // belong to every k-dominating set.
    std::uint32_t forced = 0;
    for (int i = 0; i < ctx.n; ++i)
        if (std::popcount(ctx.open[i]) < k) forced |= 1u << i;
    std::vector<int> free_bits;
    for (int i = 0; i < ctx.n; ++i)
        if (!(forced >> i & 1u)) free_bits.push_back(i);
    int nf = static_cast<int>(free_bits.size());
    std::uint32_t free_full = nf == 0 ? 0u : (nf == 31 ? 0x7fffffffu : (1u << nf) - 1);
    for (int s = 0; s <= nf; ++s) {
        std::uint32_t m = first_mask(s);
        while (true) {
            std::uint32_t d = forced;
            for (int j = 0; j < nf; ++j)
                if (m >> j & 1u) d |= 1u << free_bits[j];
            if (k_dominates(ctx, d, k)) return to_ids(ctx, d);
            if (s == 0) break;
            std::uint32_t nxt = next_same_popcount(m);
            if (nxt > free_full) break;
            m = nxt;
        }
    }
    throw structural_error("exact_min_k_dominating_set: unreachable");
}

roman_partition exact_min_roman(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_min_roman");
    long best = 2L * ctx.n + 1;
    std::uint32_t best_two = 0;
    for (int s = 0; s <= ctx.n && 2L * s < best; ++s) {
        std::uint32_t m = first_mask(s);
        while (true) {
            std::uint32_t covered = m;
            for (int i = 0; i < ctx.n; ++i)
                if (m >> i & 1u) covered |= ctx.open[i];
            long w = 2L * s + std::popcount(ctx.full & ~covered);
            if (w < best) {
                best = w;
                best_two = m;
            }
            if (s == 0) break;
            std::uint32_t nxt = next_same_popcount(m);
            if (nxt > ctx.full) break;
            m = nxt;
        }
    }
    std::uint32_t covered = best_two;
    for (int i = 0; i < ctx.n; ++i)
        if (best_two >> i & 1u) covered |= ctx.open[i];
    roman_partition rp;
    rp.two = to_ids(ctx, best_two);
    rp.zero = to_ids(ctx, covered & ~best_two);
    rp.one = to_ids(ctx, ctx.full & ~covered);
    rp.weight = best;
    return rp;
}

namespace {

struct diff_search {
    const bit_context& ctx;
    long best = 0;
    std::uint32_t best_d = 0;

    void run(int i, std::uint32_t d, std::uint32_t b) {
        // Every vertex already in d costs one; the most the remainder can add
        // is every other vertex turning into boundary.
        long ceiling = static_cast<long>(ctx.n) - 2L * std::popcount(d);
        if (ceiling <= best) return;
        if (i == ctx.n) {
            long val = std::popcount(b) - std::popcount(d);
            if (val > best) {
                best = val;
                best_d = d;
            }
            return;
        }
        std::uint32_t bit = 1u << i;
        std::uint32_t gain = ctx.open[i] & ~(d | b);
        // Including a vertex with no fresh neighbors only costs.
        if (gain != 0) {
            std::uint32_t nd = d | bit;
            std::uint32_t nb = (b | ctx.open[i]) & ~nd;
            run(i + 1, nd, nb);
        }
        run(i + 1, d, b);
    }
};

} // namespace

std::vector<int> exact_max_differential_set(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_max_differential_set");
    diff_search s{ctx};
    s.run(0, 0, 0);
    return to_ids(ctx, s.best_d);
}

long exact_differential(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_differential");
    diff_search s{ctx};
    s.run(0, 0, 0);
    return s.best;
}

long exact_max_nonblocker(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_max_nonblocker");
    return find_largest_size(ctx, [&](std::uint32_t m) {
        for (int i = 0; i < ctx.n; ++i)
            if ((m >> i & 1u) && (ctx.open[i] & ~m) == 0) return false;
        return true;
    });
}

long exact_max_harmless(const graph& g, int bound) {
    bit_context ctx = make_context(g, bound, "exact_max_harmless");
    require_no_isolate(ctx, "exact_max_harmless");
    return find_largest_size(ctx, [&](std::uint32_t m) {
        for (int i = 0; i < ctx.n; ++i)
            if ((ctx.open[i] & ~m) == 0) return false;
        return true;
    });
}

long exact_max_k_nonblocker(const graph& g, int k, int bound) {
    if (k < 1) throw precondition_error("exact_max_k_nonblocker: k must be positive");
    bit_context ctx = make_context(g, bound, "exact_max_k_nonblocker");
    return find_largest_size(ctx, [&](std::uint32_t m) {
        for (int i = 0; i < ctx.n; ++i)
            if ((m >> i & 1u) && std::popcount(ctx.open[i] & ~m) < k) return false;
        return true;
    });
}

std::vector<int> path_total_dominating_set(const std::vector<int>& path_vertices) {
    int n = static_cast<int>(path_vertices.size());
    if (n == 0) return {};
    if (n == 1) throw infeasible_error("path_total_dominating_set: single vertex has no neighbor");

    // State per prefix: whether the previous vertex is in the set and whether
    // it is already dominated. Value is the set size so far; -1 marks
    // unreachable states. Transitions require each vertex to end dominated.
    constexpr int unreachable = -1;
    struct cell {
        int cost = unreachable;
        int parent = -1;  // encoded previous state
        bool take = false;
    };
    auto encode = [](bool in, bool dom) { return (in ? 1 : 0) | (dom ? 2 : 0); };
    std::vector<std::array<cell, 4>> dp(n);
    // First vertex: not dominated yet in either case.
    dp[0][encode(false, false)] = {0, -1, false};
    dp[0][encode(true, false)] = {1, -1, true};
    for (int i = 1; i < n; ++i) {
        for (int st = 0; st < 4; ++st) {
            cell cur = dp[i - 1][st];
            if (cur.cost == unreachable) continue;
            bool prev_in = st & 1, prev_dom = st & 2;
            for (bool take : {false, true}) {
                bool prev_dom_now = prev_dom || take;
                // All vertices before i-1 are settled; i-1 must be dominated
                // once i is placed.
                if (!prev_dom_now) continue;
                bool cur_dom = prev_in;
                int ns = encode(take, cur_dom);
                int nc = cur.cost + (take ? 1 : 0);
                if (dp[i][ns].cost == unreachable || nc < dp[i][ns].cost)
                    dp[i][ns] = {nc, st, take};
            }
        }
    }
    int best_state = -1, best_cost = unreachable;
    for (int st = 0; st < 4; ++st) {
        if (!(st & 2)) continue;  // last vertex must be dominated
        cell c = dp[n - 1][st];
        if (c.cost == unreachable) continue;
        if (best_cost == unreachable || c.cost < best_cost) {
            best_cost = c.cost;
            best_state = st;
        }
    }
    if (best_state < 0) throw infeasible_error("path_total_dominating_set: no feasible assignment");
    std::vector<int> out;
    int st = best_state;
    for (int i = n - 1; i >= 0; --i) {
        cell c = dp[i][st];
        if (c.take) out.push_back(path_vertices[i]);
        st = c.parent;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gdr
