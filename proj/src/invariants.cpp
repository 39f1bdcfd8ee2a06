#include "topograph/invariants.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace topograph {

std::pair<int, int> degree_extremes(const SimpleGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    int lo = g.degree(0), hi = lo;
    for (int v = 1; v < g.order(); ++v) {
        const int d = g.degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

namespace {

std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& g) {
    std::vector<std::vector<int>> adj(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto r = g.row(v);
        for (int w = 0; w < g.words(); ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                const int u = w * 64 + std::countr_zero(bits);
                adj[v].push_back(u);
                bits &= bits - 1;
            }
        }
    }
    return adj;
}

// BFS distances from source; -1 for unreachable.
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

}  // namespace

Connectivity connectivity(const SimpleGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    const auto adj = adjacency_lists(g);
    std::vector<bool> seen(g.order(), false);
    int components = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++components;
        const auto dist = bfs(adj, s);
        for (int v = 0; v < g.order(); ++v)
            if (dist[v] >= 0) seen[v] = true;
    }
    return {components == 1, components};
}

Eccentricities eccentricities(const SimpleGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    const auto adj = adjacency_lists(g);
    Eccentricities out;
    out.ecc.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        const auto dist = bfs(adj, v);
        int e = 0;
        for (int d : dist) {
            if (d < 0)
                throw std::invalid_argument(
                    "eccentricities require a connected graph");
            e = std::max(e, d);
        }
        out.ecc[v] = e;
    }
    out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
    out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
    return out;
}

std::vector<int> cut_vertices(const SimpleGraph& g) {
    const int n = g.order();
    const auto adj = adjacency_lists(g);
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> articulation(n, false);
    int timer = 0;

    // Iterative depth-first low-link; child counts decide the root case.
    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, edge] = stack.back();
            if (edge < adj[v].size()) {
                const int u = adj[v][edge++];
                if (disc[u] < 0) {
                    parent[u] = v;
                    disc[u] = low[u] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({u, 0});
                } else if (u != parent[v]) {
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) articulation[p] = true;
                }
            }
        }
        if (root_children > 1) articulation[root] = true;
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (articulation[v]) out.push_back(v);
    return out;
}

std::vector<int> pendant_vertices(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> topo_witness_order(const TopoGraph& g) {
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount(g.mask_of(a)) < popcount(g.mask_of(b));
    });
    return order;
}

InvariantReport compute_report(const SimpleGraph& g, const Budget& budget,
                               std::span<const int> tie_order) {
    InvariantReport r;
    r.order = g.order();
    r.size = g.size();
    std::tie(r.min_degree, r.max_degree) = degree_extremes(g);
    const auto conn = connectivity(g);
    r.is_connected = conn.is_connected;
    r.component_count = conn.component_count;
    if (r.is_connected) {
        const auto ecc = eccentricities(g);
        r.radius = ecc.radius;
        r.diameter = ecc.diameter;
        r.cut_verts = cut_vertices(g);
    }
    r.pendants = pendant_vertices(g);
    r.clique = clique_number(g, budget);
    r.independent = independence_number(g, budget);
    r.dominating = domination_number(g, budget, tie_order);
    return r;
}

}  // namespace topograph
