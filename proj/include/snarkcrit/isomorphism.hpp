#pragma once

#include "snarkcrit/graph.hpp"

namespace snarkcrit {

// Multigraph isomorphism respecting loops, edge multiplicities, dangling edges
// per vertex and free edges. Backtracking with colour-refinement pruning;
// intended for the small graphs used in tests and self-checks.
bool isomorphic(const CubicGraph& g, const CubicGraph& h);

}  // namespace snarkcrit
