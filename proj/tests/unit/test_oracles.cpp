// The oracles themselves, checked on graphs whose answers are known by hand.

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace snarkcrit;

namespace {

CubicGraph petersen_by_hand() {
  return CubicGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

CubicGraph k4_by_hand() { return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

CubicGraph k33() {
  return CubicGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("colouring oracles") {
  CHECK_FALSE(oracle::enumerate_colorings(petersen_by_hand()));
  CHECK_FALSE(oracle::backtrack_colorable(petersen_by_hand()));
  CHECK_FALSE(oracle::matching_colorable(petersen_by_hand()));
  for (const CubicGraph& g : {k4_by_hand(), k33()}) {
    CHECK(oracle::enumerate_colorings(g));
    CHECK(oracle::backtrack_colorable(g));
    CHECK(oracle::matching_colorable(g));
  }
  CHECK_FALSE(oracle::backtrack_colorable(CubicGraph(1, {{0, 0}})));
}

TEST_CASE("flow oracle") {
  CHECK_FALSE(oracle::brute_force_flow(petersen_by_hand(), true));
  CHECK_FALSE(oracle::brute_force_flow(petersen_by_hand(), false));
  CHECK(oracle::brute_force_flow(k4_by_hand(), true));
  CHECK(oracle::brute_force_flow(k33(), false));
  // A cycle carries a constant flow; a path with a bridge cannot.
  CHECK(oracle::brute_force_flow(CubicGraph(3, {{0, 1}, {1, 2}, {2, 0}}), true));
  CHECK_FALSE(oracle::brute_force_flow(CubicGraph(2, {{0, 1}}), true));
  // Two dangling edges at one vertex must carry opposite values.
  CHECK(oracle::brute_force_flow(CubicGraph(1, {{0, kDangling}, {0, kDangling}}), true));
  CHECK_FALSE(oracle::brute_force_flow(CubicGraph(1, {{0, kDangling}}), true));
}

TEST_CASE("girth, bridges and cyclic cuts") {
  CHECK(oracle::girth_by_edge_removal(petersen_by_hand()) == 5);
  CHECK(oracle::girth_by_edge_removal(k33()) == 4);
  CHECK(oracle::girth_by_edge_removal(CubicGraph(3, {{0, 1}, {1, 2}})) == -1);
  CHECK(oracle::cyclic_connectivity_by_bipartition(petersen_by_hand()) == 5);
  CHECK(oracle::cyclic_connectivity_by_bipartition(k33()) == -1);
  // Prism: the three rungs separate the two triangles.
  const CubicGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(oracle::cyclic_connectivity_by_bipartition(prism) == 3);
  CHECK(oracle::bridges_by_deletion(prism).empty());
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const CubicGraph g = oracle::random_bridgeless_cubic(14, rng);
    CHECK(g.is_cubic());
    CHECK(g.is_simple());
    CHECK(oracle::bridges_by_deletion(g).empty());
  }
  CHECK_THROWS(oracle::random_simple_cubic(7, rng));
}
