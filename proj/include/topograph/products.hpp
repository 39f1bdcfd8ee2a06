#pragma once

#include <vector>

#include "topograph/simple_graph.hpp"

namespace topograph {

// Corona G (.) H: one copy of H per vertex of G, the i-th vertex of G joined
// to every vertex of its copy. Layout: vertices of G first (indices 0..|G|-1),
// then copy i at indices |G| + i*|H| .. |G| + (i+1)*|H| - 1.
SimpleGraph corona(const SimpleGraph& g, const SimpleGraph& h);

// Join G + H: disjoint union plus all cross edges. Vertices of G first.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

// Subgraph induced by the vertex indices in s (order preserved).
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& s);

}  // namespace topograph
