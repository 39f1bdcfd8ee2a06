#pragma once

#include <vector>

#include "topograph/simple_graph.hpp"
#include "topograph/subset.hpp"

namespace topograph {

// The discrete topological graph G_tau for a ground set of n elements:
// vertices are the nonempty proper subsets of {1,...,n}, two vertices are
// adjacent exactly when the subsets are disjoint. Adjacency is computed from
// the masks, never stored. Vertex order is increasing mask value; this is the
// canonical order everywhere.
class TopoGraph {
public:
    explicit TopoGraph(int n);

    int n() const { return ground_.n; }
    int order() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Mask>& vertices() const { return vertices_; }

    bool is_vertex(Mask m) const {
        return m > 0 && m < ground_.full();
    }

    static bool is_adjacent(Mask u, Mask v) { return u != v && (u & v) == 0; }

    // Closed form 2^(n-|v|) - 1; equals the neighbor count.
    int degree(Mask v) const;

    // The nonempty subsets of the complement of v, in increasing mask order.
    std::vector<Mask> neighbors(Mask v) const;

    // (3^n - 2^(n+1) + 1) / 2
    long long edge_count_formula() const;

    // Explicit graph with identical vertex order; labels are set notation.
    SimpleGraph to_simple() const;

    int index_of(Mask v) const { return static_cast<int>(v) - 1; }
    Mask mask_of(int index) const { return static_cast<Mask>(index) + 1; }

private:
    void check_vertex(Mask v) const;

    GroundSet ground_;
    std::vector<Mask> vertices_;
};

inline TopoGraph build_topo_graph(int n) { return TopoGraph(n); }

}  // namespace topograph
