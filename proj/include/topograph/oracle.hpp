#pragma once

#include <vector>

#include "topograph/simple_graph.hpp"

namespace topograph {

// Deliberately naive reference implementations. They share nothing with the
// optimized solvers beyond the SimpleGraph type, refuse inputs above their
// caps, and exist only to validate the solvers and adjudicate claims.
struct OracleLimits {
    static constexpr int max_order_enumeration = 24;
    static constexpr int max_order_removal = 200;
    static constexpr int max_order_distances = 500;
};

// Exact beta by enumerating vertex subsets, pruning on adjacency violation.
int oracle_max_independent(const SimpleGraph& g);

// Exact gamma by increasing-cardinality subset enumeration, first hit wins.
int oracle_min_dominating(const SimpleGraph& g);

// Exact omega by subset enumeration with adjacency pruning.
int oracle_max_clique(const SimpleGraph& g);

// Exact articulation points by removing each vertex and re-checking
// connectivity. Requires a connected input.
std::vector<int> oracle_articulation(const SimpleGraph& g);

// Exact distances by triangle relaxation repeated to a fixpoint.
// Unreachable pairs are reported as -1.
std::vector<std::vector<int>> oracle_all_pairs_distances(const SimpleGraph& g);

}  // namespace topograph
