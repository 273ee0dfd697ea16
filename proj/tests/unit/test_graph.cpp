#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "snarkcrit/graph.hpp"
#include "snarkcrit/io.hpp"
#include "snarkcrit/isomorphism.hpp"
#include "snarkcrit/structure.hpp"

using namespace snarkcrit;

namespace {

int loops(const CubicGraph& g) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [](const Edge& e) { return e.is_loop(); }));
}

CubicGraph two_triangles_bridged() {
  return CubicGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("construction") {
  const CubicGraph dumbbell(2, {{0, 1}, {0, 0}, {1, 1}});
  CHECK(dumbbell.is_cubic());
  CHECK(loops(dumbbell) == 2);
  CHECK(dumbbell.degree(0) == 3);
  CHECK(isomorphic(dumbbell, make_named("dumbbell")));

  const CubicGraph empty(0, {});
  CHECK(empty.order() == 0);
  CHECK(empty.size() == 0);
  CHECK(empty.is_cubic());

  const CubicGraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(theta.is_cubic());
  CHECK(theta.has_parallel_edges());
  CHECK(theta.edges_between(0, 1).size() == 3);
  CHECK_FALSE(theta.is_simple());

  CHECK_THROWS_AS(CubicGraph(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(CubicGraph(2, {{-5, 1}}), GraphError);
  CHECK_THROWS(VertexPair(3, 3));
}

TEST_CASE("dangling edges are normalized to the b side") {
  const CubicGraph g(1, {{kDangling, 0}, {0, 0}});
  CHECK(g.edge(0).a == 0);
  CHECK(g.edge(0).b == kDangling);
  CHECK(g.degree(0) == 3);
  CHECK(g.dangling_count() == 1);
  CHECK(degree_sum_consistent(g));
}

TEST_CASE("remove_vertex_pair") {
  const CubicGraph p = make_named("petersen");
  for (const VertexPair& pair : all_pairs(p)) {
    const CubicGraph h = remove_vertex_pair(p, pair);
    CHECK(h.order() == 8);
    CHECK(h.dangling_count() == (p.adjacent(pair.u(), pair.v()) ? 4 : 6));
    CHECK(h.size() == 15 - (p.adjacent(pair.u(), pair.v()) ? 1 : 0));
    CHECK(degree_sum_consistent(h));
    for (VertexId v = 0; v < h.order(); ++v) CHECK(h.degree(v) == 3);
  }

  const CubicGraph d = make_named("dumbbell");
  const CubicGraph gone = remove_vertex_pair(d, VertexPair(0, 1));
  CHECK(gone.order() == 0);
  CHECK(gone.size() == 0);
  CHECK(removal_drops_loop(d, VertexPair(0, 1)));
  CHECK_FALSE(removal_drops_loop(p, VertexPair(0, 1)));

  // Surviving vertices keep their relative order.
  const CubicGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const CubicGraph rest = remove_vertex_pair(path, VertexPair(0, 2));
  REQUIRE(rest.order() == 2);
  CHECK(rest.dangling_count() == 3);
  CHECK(rest.degree(0) == 2);
  CHECK(rest.degree(1) == 1);
  CHECK(rest.free_edge_count() == 0);
}

TEST_CASE("identify_vertices") {
  const CubicGraph theta = make_named("theta");
  const CubicGraph one = identify_vertices(theta, VertexPair(0, 1));
  CHECK(one.order() == 1);
  CHECK(loops(one) == 3);
  CHECK(one.degree(0) == 6);

  const CubicGraph p = make_named("petersen");
  for (const VertexPair& pair : all_pairs(p)) {
    const CubicGraph h = identify_vertices(p, pair);
    CHECK(h.order() == 9);
    CHECK(h.size() == 15);
    CHECK(h.degree(std::min(pair.u(), pair.v())) == 6);
    CHECK(loops(h) == (p.adjacent(pair.u(), pair.v()) ? 1 : 0));
    CHECK(degree_sum_consistent(h));
  }
}

TEST_CASE("delete_edge and contract_edge") {
  const CubicGraph theta = make_named("theta");
  const CubicGraph t2 = delete_edge(theta, 0);
  CHECK(t2.order() == 2);
  CHECK(t2.edges_between(0, 1).size() == 2);
  const CubicGraph tc = contract_edge(theta, 0);
  CHECK(tc.order() == 1);
  CHECK(loops(tc) == 2);

  const CubicGraph d = make_named("dumbbell");
  const EdgeId bridge = d.edges_between(0, 1).front();
  const CubicGraph split = delete_edge(d, bridge);
  CHECK(split.order() == 2);
  CHECK(loops(split) == 2);
  CHECK_FALSE(is_connected(split));
  const CubicGraph dc = contract_edge(d, bridge);
  CHECK(dc.order() == 1);
  CHECK(loops(dc) == 2);

  const CubicGraph p = make_named("petersen");
  for (EdgeId e = 0; e < p.size(); ++e) {
    const CubicGraph pd = delete_edge(p, e);
    CHECK(pd.order() == 10);
    CHECK(pd.size() == 14);
    int deg2 = 0;
    for (VertexId v = 0; v < pd.order(); ++v) deg2 += pd.degree(v) == 2;
    CHECK(deg2 == 2);
    const CubicGraph pc = contract_edge(p, e);
    CHECK(pc.order() == 9);
    CHECK(pc.size() == 14);
    CHECK_FALSE(pc.has_loops());
  }
  CHECK_THROWS_AS(contract_edge(d, 1), GraphError);
  CHECK_THROWS_AS(delete_edge(p, 15), GraphError);
}

TEST_CASE("suppress_edge") {
  const CubicGraph p = make_named("petersen");
  for (EdgeId e = 0; e < p.size(); ++e) {
    const CubicGraph s = suppress_edge(p, e);
    CHECK(s.order() == 8);
    CHECK(s.size() == 12);
    CHECK(s.is_cubic());
  }
  const CubicGraph k4 = make_named("k4");
  for (EdgeId e = 0; e < k4.size(); ++e) CHECK(isomorphic(suppress_edge(k4, e), make_named("theta")));

  const CubicGraph d = make_named("dumbbell");
  const EdgeId bridge = d.edges_between(0, 1).front();
  CHECK_FALSE(is_suppressible(d, bridge));
  CHECK_THROWS_AS(suppress_edge(d, bridge), NonSuppressibleError);
}

TEST_CASE("expand_triangle") {
  const CubicGraph k4 = make_named("k4");
  const CubicGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  for (VertexId v = 0; v < 4; ++v) CHECK(isomorphic(expand_triangle(k4, v), prism));

  const CubicGraph p = make_named("petersen");
  const CubicGraph pt = expand_triangle(p, 0);
  CHECK(pt.order() == 12);
  CHECK(pt.is_cubic());
  CHECK(girth(pt) == 3);
  CHECK(oracle::girth_by_edge_removal(pt) == 3);

  const CubicGraph theta = make_named("theta");
  const CubicGraph tt = expand_triangle(theta, 1);
  CHECK(tt.order() == 4);
  CHECK(tt.is_cubic());

  // Contracting two triangle edges leaves the third as a loop; dropping it
  // gives back the original graph.
  const VertexId n = p.order();
  const CubicGraph once = contract_edge(pt, pt.edges_between(n, n + 1).front());
  const CubicGraph twice = contract_edge(once, once.edges_between(0, n).front());
  REQUIRE(loops(twice) == 1);
  EdgeId loop = 0;
  while (!twice.edge(loop).is_loop()) ++loop;
  CHECK(isomorphic(delete_edge(twice, loop), p));
}

TEST_CASE("pair enumeration") {
  const CubicGraph p = make_named("petersen");
  const auto pairs = all_pairs(p);
  CHECK(pairs.size() == 45);
  CHECK(pairs.front().u() == 0);
  CHECK(pairs.front().v() == 1);
  CHECK(adjacent_pairs(p).size() == 15);
  CHECK(connecting_edges(make_named("theta"), VertexPair(0, 1)).size() == 3);
}

TEST_CASE("isomorphism distinguishes multigraph features") {
  CHECK(isomorphic(make_named("petersen"), make_named("petersen")));
  CHECK_FALSE(isomorphic(make_named("theta"), make_named("dumbbell")));
  const CubicGraph a(2, {{0, 1}, {0, kDangling}, {1, kDangling}});
  const CubicGraph b(2, {{0, 1}, {0, 1}, {0, kDangling}});
  CHECK_FALSE(isomorphic(a, b));
  CHECK_FALSE(isomorphic(make_named("blanusa1"), make_named("blanusa2")));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const CubicGraph g = oracle::random_simple_cubic(12, rng);
    std::vector<VertexId> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.a], perm[e.b]});
    std::shuffle(edges.begin(), edges.end(), rng);
    CHECK(isomorphic(g, CubicGraph(12, edges)));
  }
}

TEST_CASE("bridges") {
  const CubicGraph d = make_named("dumbbell");
  CHECK(find_bridges(d) == d.edges_between(0, 1));
  CHECK(find_bridges(make_named("petersen")).empty());
  const CubicGraph t = two_triangles_bridged();
  CHECK(find_bridges(t) == std::vector<EdgeId>{6});
  CHECK(oracle::bridges_by_deletion(t) == std::vector<EdgeId>{6});
}
