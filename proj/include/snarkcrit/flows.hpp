#pragma once

// Nowhere-zero group flows on multigraphs with loops, parallel and dangling
// edges, over Z4 or the Klein four-group Z2 x Z2.
//
// Orientation is stored per edge relative to the graph's edge record: by
// default an edge runs from `a` to `b`. Dangling edges are normalized with
// the dangling side at `b`, so the default orientation points them outward.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "snarkcrit/graph.hpp"

namespace snarkcrit {

enum class FlowGroup { kZ4, kKlein };

std::string_view group_name(FlowGroup group);

// Elements are encoded as 0..3: residues mod 4 for Z4, two-bit vectors for
// Z2 x Z2. 0 is the identity in both.
std::uint8_t group_add(FlowGroup group, std::uint8_t x, std::uint8_t y);
std::uint8_t group_neg(FlowGroup group, std::uint8_t x);

struct FlowAssignment {
  FlowGroup group = FlowGroup::kZ4;
  std::vector<std::uint8_t> values;  // per edge id
  std::vector<bool> reversed;        // true when the edge runs from b to a
};

// The head endpoint of e under f (kDangling for an outward dangling edge).
VertexId flow_head(const CubicGraph& g, const FlowAssignment& f, EdgeId e);

// Flips the orientation of e and negates its value, which describes the same flow.
FlowAssignment reverse_edge(const FlowAssignment& f, EdgeId e);

struct FlowStats {
  long nodes = 0;
};

std::optional<FlowAssignment> nowhere_zero_flow(const CubicGraph& g, FlowGroup group,
                                                FlowStats* stats = nullptr);

// Conservation at every vertex: inflow equals outflow. Loops cancel and
// dangling edges count only at their attached end. Throws GraphError when f
// does not cover every edge of g.
bool verify_kirchhoff(const CubicGraph& g, const FlowAssignment& f);

bool is_nowhere_zero(const FlowAssignment& f);

// Sum of the values on dangling edges, each read as leaving the graph.
std::uint8_t dangling_outflow(const CubicGraph& g, const FlowAssignment& f);

// Nowhere-zero flow on identify_vertices(g, p); the witness lives on that graph.
std::optional<FlowAssignment> flow_on_identification(const CubicGraph& g, const VertexPair& p,
                                                     FlowGroup group);

}  // namespace snarkcrit
