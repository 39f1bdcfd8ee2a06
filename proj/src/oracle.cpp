#include "topograph/oracle.hpp"

#include <algorithm>
#include <string>

namespace topograph {

namespace {

void require_order(const SimpleGraph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw capacity_error(std::string(what) + " oracle is capped at order " +
                             std::to_string(cap) + ", got " +
                             std::to_string(g.order()));
}

int independent_extend(const SimpleGraph& g, int next,
                       std::vector<int>& chosen) {
    if (next == g.order()) return static_cast<int>(chosen.size());
    // skip next
    int best = independent_extend(g, next + 1, chosen);
    // take next if compatible
    for (int v : chosen)
        if (g.adjacent(v, next)) return best;
    chosen.push_back(next);
    best = std::max(best, independent_extend(g, next + 1, chosen));
    chosen.pop_back();
    return best;
}

int clique_extend(const SimpleGraph& g, int next, std::vector<int>& chosen) {
    if (next == g.order()) return static_cast<int>(chosen.size());
    int best = clique_extend(g, next + 1, chosen);
    for (int v : chosen)
        if (!g.adjacent(v, next)) return best;
    chosen.push_back(next);
    best = std::max(best, clique_extend(g, next + 1, chosen));
    chosen.pop_back();
    return best;
}

bool dominates(const SimpleGraph& g, const std::vector<int>& set) {
    std::vector<bool> covered(g.order(), false);
    for (int v : set) {
        covered[v] = true;
        for (int u = 0; u < g.order(); ++u)
            if (g.adjacent(v, u)) covered[u] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool connected_without(const SimpleGraph& g, int removed) {
    const int n = g.order();
    int start = removed == 0 ? 1 : 0;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (u == removed || seen[u] || !g.adjacent(v, u)) continue;
            seen[u] = true;
            ++reached;
            stack.push_back(u);
        }
    }
    return reached == n - 1;
}

}  // namespace

int oracle_max_independent(const SimpleGraph& g) {
    require_order(g, OracleLimits::max_order_enumeration, "independence");
    std::vector<int> chosen;
    return independent_extend(g, 0, chosen);
}

int oracle_min_dominating(const SimpleGraph& g) {
    require_order(g, OracleLimits::max_order_enumeration, "domination");
    if (g.order() == 0) return 0;
    for (int k = 1; k <= g.order(); ++k) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        do {
            if (dominates(g, c)) return k;
        } while (next_combination(c, g.order()));
    }
    return g.order();  // unreachable
}

int oracle_max_clique(const SimpleGraph& g) {
    require_order(g, OracleLimits::max_order_enumeration, "clique");
    std::vector<int> chosen;
    return clique_extend(g, 0, chosen);
}

std::vector<int> oracle_articulation(const SimpleGraph& g) {
    require_order(g, OracleLimits::max_order_removal, "articulation");
    std::vector<int> out;
    if (g.order() <= 2) return out;
    for (int v = 0; v < g.order(); ++v)
        if (!connected_without(g, v)) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> oracle_all_pairs_distances(const SimpleGraph& g) {
    require_order(g, OracleLimits::max_order_distances, "distance");
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u)) d[v][u] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (d[i][k] + d[k][j] < d[i][j]) {
                        d[i][j] = d[i][k] + d[k][j];
                        changed = true;
                    }
    }
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

}  // namespace topograph
