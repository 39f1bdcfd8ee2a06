#include "topograph/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace topograph {

namespace {

bool extend(const SimpleGraph& g, const SimpleGraph& h, std::vector<int>& map,
            std::vector<bool>& used, int next) {
    const int n = g.order();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (g.degree(next) != h.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (g.adjacent(next, prev) != h.adjacent(cand, map[prev])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (extend(g, h, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.order() > 10 || h.order() > 10)
        throw capacity_error("isomorphism search is capped at order 10");
    if (g.order() != h.order()) return false;
    if (g.size() != h.size()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.order(), -1);
    std::vector<bool> used(g.order(), false);
    return extend(g, h, map, used, 0);
}

}  // namespace topograph
