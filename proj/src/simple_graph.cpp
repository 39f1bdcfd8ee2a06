#include "topograph/simple_graph.hpp"

#include <bit>

namespace topograph {

SimpleGraph::SimpleGraph(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative graph order");
    words_ = (order + 63) / 64;
    rows_.assign(static_cast<std::size_t>(order_) * words_, 0);
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1}
                                                            << (v % 64);
    rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1}
                                                            << (u % 64);
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

long long SimpleGraph::size() const {
    long long total = 0;
    for (int v = 0; v < order_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) es.emplace_back(u, v);
    return es;
}

const std::string& SimpleGraph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void SimpleGraph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(order_);
    labels_[v] = std::move(s);
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph null_graph(int n) { return SimpleGraph(n); }

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph complement_graph(const SimpleGraph& g) {
    SimpleGraph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

}  // namespace topograph
