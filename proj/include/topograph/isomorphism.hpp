#pragma once

#include "topograph/simple_graph.hpp"

namespace topograph {

// Exhaustive permutation search with order/size/degree-sequence rejection.
// Both orders must be <= 10; larger inputs raise capacity_error.
bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace topograph
