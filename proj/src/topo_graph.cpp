#include "topograph/topo_graph.hpp"

namespace topograph {

TopoGraph::TopoGraph(int n) : ground_(n) {
    const Mask full = ground_.full();
    vertices_.reserve(full - 1);
    for (Mask m = 1; m < full; ++m) vertices_.push_back(m);
}

void TopoGraph::check_vertex(Mask v) const {
    if (!is_vertex(v))
        throw std::out_of_range("mask " + std::to_string(v) +
                                " is not a vertex of G_tau(n=" +
                                std::to_string(ground_.n) + ")");
}

int TopoGraph::degree(Mask v) const {
    check_vertex(v);
    return (1 << (ground_.n - popcount(v))) - 1;
}

std::vector<Mask> TopoGraph::neighbors(Mask v) const {
    check_vertex(v);
    const Mask comp = ground_.full() & ~v;
    std::vector<Mask> out;
    out.reserve(degree(v));
    // Nonempty submasks of the complement, ascending.
    for (Mask m = 1; m < ground_.full(); ++m)
        if ((m & ~comp) == 0) out.push_back(m);
    return out;
}

long long TopoGraph::edge_count_formula() const {
    long long p3 = 1;
    for (int i = 0; i < ground_.n; ++i) p3 *= 3;
    return (p3 - (2LL << ground_.n) + 1) / 2;
}

SimpleGraph TopoGraph::to_simple() const {
    SimpleGraph g(order());
    for (int i = 0; i < order(); ++i) {
        g.set_label(i, set_notation(vertices_[i]));
        for (int j = i + 1; j < order(); ++j)
            if (is_adjacent(vertices_[i], vertices_[j])) g.add_edge(i, j);
    }
    return g;
}

}  // namespace topograph
