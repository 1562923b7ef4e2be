#include "starpack.hpp"

#include <map>
#include <set>

#include "errors.hpp"

namespace gdr {

std::vector<int> star_pack_centers(const graph& g) {
    std::map<int, int> center_of;       // tip to its center
    std::map<int, std::set<int>> rays;  // center to its tips
    std::set<int> open;                 // vertices in no star
    for (int v : g.vertices()) open.insert(v);

    auto open_neighbors = [&](int x) {
        std::vector<int> out;
        for (int u : g.neighbors(x))
            if (open.count(u)) out.push_back(u);
        return out;
    };

    auto make_center = [&](int x, const std::vector<int>& tips) {
        open.erase(x);
        std::set<int>& r = rays[x];
        for (int t : tips) {
            open.erase(t);
            center_of[t] = x;
            r.insert(t);
        }
    };

    // Detaches tip x from its star. A star reduced to one ray dissolves:
    // its center and last tip reopen.
    auto detach = [&](int x) {
        int y = center_of[x];
        center_of.erase(x);
        rays[y].erase(x);
        if (rays[y].size() == 1) {
            int z = *rays[y].begin();
            rays.erase(y);
            center_of.erase(z);
            open.insert(y);
            open.insert(z);
        }
    };

    // The open vertex with the most open neighbors, at least two, becomes
    // the center of a star over all of them.
    auto grow = [&]() {
        bool fired = false;
        for (;;) {
            int best = -1;
            std::size_t best_cnt = 1;
            for (int x : open) {
                std::size_t cnt = open_neighbors(x).size();
                if (cnt > best_cnt) {
                    best_cnt = cnt;
                    best = x;
                }
            }
            if (best < 0) return fired;
            make_center(best, open_neighbors(best));
            fired = true;
        }
    };

    // A tip with two open neighbors serves better as a center of its own.
    // Its old center is adjacent, so if that star dissolved the center is
    // swept straight into the new star.
    auto promote_tip = [&]() {
        int pick = -1;
        for (const auto& [x, y] : center_of) {
            (void)y;
            if (open_neighbors(x).size() >= 2) {
                pick = x;
                break;
            }
        }
        if (pick < 0) return false;
        detach(pick);
        make_center(pick, open_neighbors(pick));
        return true;
    };

    auto uncovered = [&](int v) {
        if (rays.count(v)) return false;
        for (int u : g.neighbors(v))
            if (rays.count(u)) return false;
        return true;
    };

    // An adjacent uncovered pair plus a borrowed tip forms a fresh star over
    // three previously wasted or single-duty vertices.
    auto consume_pair = [&]() {
        for (auto [p, q] : g.edges()) {
            if (!uncovered(p) || !uncovered(q)) continue;
            for (int head : {p, q}) {
                int other = head == p ? q : p;
                for (int x : g.neighbors(head)) {
                    if (!center_of.count(x)) continue;
                    detach(x);
                    make_center(head, {x, other});
                    return true;
                }
            }
        }
        return false;
    };

    // Greedy growth shrinks the open set and the improvements never grow it,
    // but a borrowed tip can dissolve a star, so the loop is capped instead
    // of trusted to settle.
    const long cap = 8L * g.vertex_count() + 32;
    for (long round = 0; round < cap; ++round) {
        if (grow()) continue;
        if (promote_tip()) continue;
        if (consume_pair()) continue;
        break;
    }

    std::vector<int> centers;
    for (const auto& [c, r] : rays) {
        if (r.size() < 2) throw structural_error("star packing kept a star with one ray");
        centers.push_back(c);
    }
    return centers;
}

} // namespace gdr
