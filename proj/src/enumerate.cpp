#include "enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <unordered_set>

#include "errors.hpp"

namespace gdr {

namespace {

constexpr int max_enum_n = 10;

// Packed form: bit j*(j-1)/2 + i set iff edge {i, j} with i < j exists.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

graph materialize(int n, std::uint64_t bits) {
    graph_builder b;
    for (int v = 0; v < n; ++v) b.add_vertex(v);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits >> pair_index(i, j) & 1ull) b.add_edge(i, j);
    return b.build();
}

struct canon_state {
    int n;
    std::array<std::uint16_t, max_enum_n> row;    // adjacency masks
    std::vector<std::vector<int>> cells;          // refinement cells in order
    std::array<int, max_enum_n> pos_cell;         // position -> cell index
    std::array<std::uint16_t, max_enum_n> best;   // canonical column masks
    std::array<std::uint16_t, max_enum_n> cur;
    std::array<int, max_enum_n> perm;
    std::uint16_t used = 0;
};

// Column mask of candidate v against the first `pos` placed vertices.
std::uint16_t column_of(const canon_state& st, int pos, int v) {
    std::uint16_t col = 0;
    for (int j = 0; j < pos; ++j)
        if (st.row[v] >> st.perm[j] & 1u) col |= 1u << j;
    return col;
}

void search(canon_state& st, int pos) {
    if (pos == st.n) {
        for (int i = 0; i < st.n; ++i) {
            if (st.cur[i] < st.best[i]) break;
            if (st.cur[i] > st.best[i]) return;
        }
        st.best = st.cur;
        return;
    }
    bool eq = true;
    for (int i = 0; i < pos; ++i)
        if (st.cur[i] != st.best[i]) { eq = false; break; }
    for (int v : st.cells[st.pos_cell[pos]]) {
        if (st.used >> v & 1u) continue;
        std::uint16_t col = column_of(st, pos, v);
        if (eq && col > st.best[pos]) continue;
        st.cur[pos] = col;
        st.perm[pos] = v;
        st.used |= 1u << v;
        search(st, pos + 1);
        st.used &= ~(1u << v);
        // best may have shrunk below this branch; recompute the relation
        eq = true;
        for (int i = 0; i < pos; ++i)
            if (st.cur[i] != st.best[i]) { eq = false; break; }
    }
}

std::uint64_t canonical_bits(int n, const std::array<std::uint16_t, max_enum_n>& row) {
    canon_state st;
    st.n = n;
    st.row = row;

    // Neighborhood color refinement down to stable classes. Class order is
    // derived from the signatures alone, so it is isomorphism-invariant.
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = std::popcount(row[v]);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int u = 0; u < n; ++u)
                if (row[v] >> u & 1u) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        for (const auto& [s, v] : sig) keys.push_back(s);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) -
                                       keys.begin());
        if (next == color) break;
        color = std::move(next);
    }

    int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    st.cells.assign(classes, {});
    for (int v = 0; v < n; ++v) st.cells[color[v]].push_back(v);
    int p = 0;
    for (int c = 0; c < classes; ++c)
        for (size_t i = 0; i < st.cells[c].size(); ++i) st.pos_cell[p++] = c;

    st.best.fill(0xffff);
    search(st, 0);

    std::uint64_t bits = 0;
    for (int j = 0; j < n; ++j)
        bits |= static_cast<std::uint64_t>(st.best[j]) << pair_index(0, j);
    return bits;
}

const std::vector<std::uint64_t>& graphs_of_order(int n) {
    static std::map<int, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1 || n > max_enum_n) throw too_large_error("graph enumeration supports 1..10 vertices");

    std::vector<std::uint64_t> result;
    if (n == 1) {
        result = {0};
    } else {
        const auto& parents = graphs_of_order(n - 1);
        std::unordered_set<std::uint64_t> seen;
        int base = pair_index(0, n - 1);
        std::array<std::uint16_t, max_enum_n> row;
        for (std::uint64_t parent : parents) {
            for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
                std::uint64_t child = parent | mask << base;
                row.fill(0);
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (child >> pair_index(i, j) & 1ull) {
                            row[i] |= 1u << j;
                            row[j] |= 1u << i;
                        }
                seen.insert(canonical_bits(n, row));
            }
        }
        result.assign(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
    }
    return cache.emplace(n, std::move(result)).first->second;
}

} // namespace

std::uint64_t canonical_form(const graph& g) {
    int n = g.vertex_count();
    if (n > max_enum_n) throw too_large_error("canonical_form supports up to 10 vertices");
    auto ids = g.vertices();
    std::array<std::uint16_t, max_enum_n> row;
    row.fill(0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(ids[i], ids[j])) {
                row[i] |= 1u << j;
                row[j] |= 1u << i;
            }
    return canonical_bits(n, row);
}

void for_each_graph(int n, const std::function<void(const graph&)>& fn) {
    for (std::uint64_t bits : graphs_of_order(n)) fn(materialize(n, bits));
}

void for_each_connected_graph(int n, const std::function<void(const graph&)>& fn) {
    for (std::uint64_t bits : graphs_of_order(n)) {
        graph g = materialize(n, bits);
        if (components(g).size() == 1) fn(g);
    }
}

} // namespace gdr
