#pragma once

#include <optional>
#include <vector>

#include "snarkcrit/graph.hpp"

namespace snarkcrit {

struct StructureProfile {
  bool connected = false;
  int bridge_count = 0;
  std::optional<int> girth;                     // nullopt: acyclic
  std::optional<int> cyclic_edge_connectivity;  // nullopt: undefined or not computed
};

// Connectivity of the vertex set; dangling and free edges are ignored.
bool is_connected(const CubicGraph& g);

// Shortest cycle length: 1 for a loop, 2 for a parallel pair, nullopt for a forest.
std::optional<int> girth(const CubicGraph& g);

// Cut-edges in id order. Loops, dangling and free edges are never bridges.
std::vector<EdgeId> find_bridges(const CubicGraph& g);

// Minimum size of an edge cut leaving two components that both contain a
// cycle, or nullopt when g has no two vertex-disjoint cycles. Throws
// GraphError unless g is connected and cubic.
std::optional<int> cyclic_edge_connectivity(const CubicGraph& g);

// Exhaustive check for a cycle-separating cut with at most max_size edges.
bool has_cyclic_cut_at_most(const CubicGraph& g, int max_size);

// cyclic_edge_connectivity is only filled in for connected cubic graphs.
StructureProfile structure_profile(const CubicGraph& g);

}  // namespace snarkcrit
