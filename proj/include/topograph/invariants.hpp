#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topograph/simple_graph.hpp"
#include "topograph/topo_graph.hpp"

namespace topograph {

// Per-invocation time limit for the NP-hard solvers. The deadline starts when
// a solver is entered, not when the budget is created.
struct Budget {
    std::optional<std::chrono::nanoseconds> limit;

    static Budget unlimited() { return {}; }
    static Budget seconds(double s) {
        return {std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double>(s))};
    }
};

// Result of an exact solver. When the budget ran out, `exact` is false and
// `value` is the best bound found (lower bound for maximization, upper bound
// for minimization); the witness certifies that bound.
struct SolverResult {
    int value = 0;
    std::vector<int> witness;
    bool exact = true;
};

std::pair<int, int> degree_extremes(const SimpleGraph& g);  // (delta, Delta)

struct Connectivity {
    bool is_connected;
    int component_count;
};
Connectivity connectivity(const SimpleGraph& g);

struct Eccentricities {
    std::vector<int> ecc;
    int radius;
    int diameter;
};
// Rejects disconnected input with std::invalid_argument.
Eccentricities eccentricities(const SimpleGraph& g);

// Exact maximum clique, branch and bound with greedy coloring bounds.
SolverResult clique_number(const SimpleGraph& g,
                           const Budget& budget = Budget::seconds(30));

// Exact maximum independent set: maximum clique of the complement.
SolverResult independence_number(const SimpleGraph& g,
                                 const Budget& budget = Budget::seconds(30));

// Exact minimum dominating set: branch and bound over closed neighborhoods
// with a disjoint-neighborhood packing lower bound. Among all minimum
// witnesses, the reported one is lexicographically least under `tie_order`
// (a permutation of the vertices; empty means index order).
SolverResult domination_number(const SimpleGraph& g,
                               const Budget& budget = Budget::seconds(30),
                               std::span<const int> tie_order = {});

// Witness tie-break order for topo graph reports: subsets of fewer elements
// first, then increasing mask. Makes the reported minimum dominating set of
// G_tau the singletons.
std::vector<int> topo_witness_order(const TopoGraph& g);

// Articulation points by depth-first low-link, ascending vertex index.
std::vector<int> cut_vertices(const SimpleGraph& g);

// Vertices of degree exactly 1, ascending.
std::vector<int> pendant_vertices(const SimpleGraph& g);

struct InvariantReport {
    int order = 0;
    long long size = 0;
    int min_degree = 0;
    int max_degree = 0;
    SolverResult clique;
    SolverResult independent;
    SolverResult dominating;
    bool is_connected = false;
    int component_count = 0;
    std::optional<int> radius;    // absent when disconnected
    std::optional<int> diameter;
    std::vector<int> cut_verts;   // only when connected
    std::vector<int> pendants;
};

InvariantReport compute_report(const SimpleGraph& g,
                               const Budget& budget = Budget::seconds(30),
                               std::span<const int> tie_order = {});

}  // namespace topograph
