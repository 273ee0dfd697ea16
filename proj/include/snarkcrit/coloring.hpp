#pragma once

// Proper 3-edge-colouring of subcubic multigraphs with dangling edges.
//
// Colours are the non-zero elements of the Klein four-group Z2 x Z2, encoded
// as two-bit values 01, 10 and 11. At a vertex of degree 3 the three colours
// are distinct exactly when they sum (xor) to zero, so once two edges at such
// a vertex are coloured the third is forced.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "snarkcrit/graph.hpp"

namespace snarkcrit {

enum class KleinColor : std::uint8_t { k01 = 1, k10 = 2, k11 = 3 };

inline KleinColor klein_sum(KleinColor x, KleinColor y) {
  return static_cast<KleinColor>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

// One colour per edge id. Loops never receive a colour since a graph with a
// loop has no proper colouring.
struct EdgeColoring {
  std::vector<KleinColor> colors;
};

struct FlowAssignment;  // flows.hpp

struct ColoringStats {
  long nodes = 0;  // search decisions taken
};

// Returns a proper 3-edge-colouring or nullopt. Throws GraphError when a
// vertex has degree above 3.
std::optional<EdgeColoring> three_edge_colorable(const CubicGraph& g,
                                                 ColoringStats* stats = nullptr);

bool chromatic_index_is_4(const CubicGraph& g);

bool is_proper_coloring(const CubicGraph& g, const EdgeColoring& c);

// Applies a permutation of {01, 10, 11}; perm[i] is the image of colour i + 1.
EdgeColoring permute_colors(const EdgeColoring& c, const std::array<KleinColor, 3>& perm);

// The same edge values read as a Z2 x Z2 flow under the graph's default
// orientation. Every element is its own inverse, so orientation is irrelevant.
FlowAssignment coloring_as_flow(const EdgeColoring& c);

}  // namespace snarkcrit
