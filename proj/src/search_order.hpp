#pragma once

#include <vector>

#include "snarkcrit/graph.hpp"

namespace snarkcrit::detail {

// Edges of each connected component in breadth-first discovery order,
// starting from a vertex of maximum degree. Free edges form their own
// single-edge groups at the end.
std::vector<std::vector<EdgeId>> component_edge_orders(const CubicGraph& g);

}  // namespace snarkcrit::detail
