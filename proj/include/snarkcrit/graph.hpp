#pragma once

// Multigraph model for cubic graphs and the local surgery operations used to
// study criticality: vertex-pair removal, identification, edge deletion,
// contraction, suppression and triangle expansion.
//
// Graphs may carry loops, parallel edges and dangling edges. A dangling edge
// has one endpoint equal to kDangling; a free edge has two. Graphs are
// immutable after construction and every operation returns a new graph.

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snarkcrit {

using VertexId = int;
using EdgeId = int;

inline constexpr VertexId kDangling = -1;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by suppress_edge when splicing would need to close a loop through a
// degree-2 vertex.
class NonSuppressibleError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct Edge {
  VertexId a = kDangling;
  VertexId b = kDangling;

  bool is_loop() const { return a == b && a != kDangling; }
  bool is_dangling() const { return (a == kDangling) != (b == kDangling); }
  bool is_free() const { return a == kDangling && b == kDangling; }
  // The endpoint opposite to `end` (which must be a or b).
  VertexId other(VertexId end) const { return end == a ? b : a; }
};

// One edge-end at a vertex. Loops contribute two incidences.
struct Incidence {
  EdgeId edge;
  VertexId other;
};

class CubicGraph {
 public:
  CubicGraph() = default;

  // Throws GraphError when an endpoint is neither kDangling nor < vertex_count.
  // Dangling edges are normalized so that the dangling side is `b`.
  CubicGraph(int vertex_count, std::vector<Edge> edges);

  int order() const { return vertex_count_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  bool has_edge(EdgeId e) const { return e >= 0 && e < size(); }

  std::span<const Incidence> incidences(VertexId v) const;
  int degree(VertexId v) const;

  bool is_cubic() const;
  bool has_loops() const;
  bool has_parallel_edges() const;
  int dangling_count() const;
  int free_edge_count() const;
  // No loops, no parallel edges, no dangling or free edges.
  bool is_simple() const;

  // Non-loop edges joining u and v, in id order.
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return !edges_between(u, v).empty(); }

  std::string describe() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> incidences_;
};

// Two distinct vertices.
class VertexPair {
 public:
  VertexPair(VertexId u, VertexId v);

  VertexId u() const { return u_; }
  VertexId v() const { return v_; }

 private:
  VertexId u_;
  VertexId v_;
};

bool is_adjacent(const CubicGraph& g, const VertexPair& p);
std::vector<EdgeId> connecting_edges(const CubicGraph& g, const VertexPair& p);

// All unordered pairs in lexicographic order.
std::vector<VertexPair> all_pairs(const CubicGraph& g);
std::vector<VertexPair> adjacent_pairs(const CubicGraph& g);

CubicGraph build_graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_list);

// Deletes u and v. Edges with exactly one endpoint in {u, v} become dangling;
// edges with both endpoints in {u, v} (loops at u or v, edges joining u and v)
// are deleted. A dangling edge attached to u or v becomes a free edge.
// Remaining vertices keep their relative order.
CubicGraph remove_vertex_pair(const CubicGraph& g, const VertexPair& p);

// True when remove_vertex_pair has to drop a loop at u or v, which is the
// case where the deletion convention above is a choice rather than forced.
bool removal_drops_loop(const CubicGraph& g, const VertexPair& p);

// Merges u and v into vertex min(u, v). Edges joining u and v become loops.
CubicGraph identify_vertices(const CubicGraph& g, const VertexPair& p);

CubicGraph delete_edge(const CubicGraph& g, EdgeId e);

// identify_vertices on the endpoints of e, minus the loop coming from e.
CubicGraph contract_edge(const CubicGraph& g, EdgeId e);

// Deletes e and splices out both resulting degree-2 vertices.
CubicGraph suppress_edge(const CubicGraph& g, EdgeId e);
bool is_suppressible(const CubicGraph& g, EdgeId e);

// Replaces v by a triangle whose vertices each take one former incidence of v.
// The first triangle vertex reuses id v; the other two are appended.
CubicGraph expand_triangle(const CubicGraph& g, VertexId v);

// Sum of vertex degrees equals 2 * attached edges + dangling edges.
bool degree_sum_consistent(const CubicGraph& g);

}  // namespace snarkcrit
