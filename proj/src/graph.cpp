#include "snarkcrit/graph.hpp"

#include <algorithm>
#include <sstream>

namespace snarkcrit {

CubicGraph::CubicGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  std::vector<int> degree(vertex_count, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    for (VertexId end : {e.a, e.b}) {
      if (end != kDangling && (end < 0 || end >= vertex_count)) {
        std::ostringstream msg;
        msg << "edge " << i << " references nonexistent vertex " << end;
        throw GraphError(msg.str());
      }
    }
    if (e.a == kDangling && e.b != kDangling) std::swap(e.a, e.b);
    if (e.a != kDangling) ++degree[e.a];
    if (e.b != kDangling) ++degree[e.b];
  }

  offsets_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidences_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const auto id = static_cast<EdgeId>(i);
    if (e.a != kDangling) incidences_[fill[e.a]++] = {id, e.b};
    if (e.b != kDangling) incidences_[fill[e.b]++] = {id, e.a};
  }
}

const Edge& CubicGraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw GraphError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

std::span<const Incidence> CubicGraph::incidences(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
}

int CubicGraph::degree(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  return offsets_[v + 1] - offsets_[v];
}

bool CubicGraph::is_cubic() const {
  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

bool CubicGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool CubicGraph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> keys;
  for (const Edge& e : edges_) {
    if (e.a == kDangling || e.b == kDangling || e.is_loop()) continue;
    keys.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

int CubicGraph::dangling_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_dangling(); }));
}

int CubicGraph::free_edge_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_free(); }));
}

bool CubicGraph::is_simple() const {
  return !has_loops() && !has_parallel_edges() && dangling_count() == 0 && free_edge_count() == 0;
}

std::vector<EdgeId> CubicGraph::edges_between(VertexId u, VertexId v) const {
  std::vector<EdgeId> out;
  if (u == v) return out;
  for (const Incidence& inc : incidences(u))
    if (inc.other == v) out.push_back(inc.edge);
  return out;
}

std::string CubicGraph::describe() const {
  std::ostringstream os;
  os << vertex_count_ << " vertices, " << edges_.size() << " edges:";
  for (const Edge& e : edges_) {
    os << ' ';
    os << (e.a == kDangling ? std::string("*") : std::to_string(e.a)) << '-'
       << (e.b == kDangling ? std::string("*") : std::to_string(e.b));
  }
  return os.str();
}

VertexPair::VertexPair(VertexId u, VertexId v) : u_(u), v_(v) {
  if (u == v) throw GraphError("vertex pair needs two distinct vertices");
}

namespace {

void require_pair(const CubicGraph& g, const VertexPair& p) {
  if (!g.has_vertex(p.u()) || !g.has_vertex(p.v()))
    throw GraphError("vertex pair (" + std::to_string(p.u()) + ", " + std::to_string(p.v()) +
                     ") is not in the graph");
}

// Builds a graph on the surviving vertices, renumbered densely in order.
CubicGraph rebuild(int vertex_count, const std::vector<VertexId>& relabel,
                   const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto map = [&](VertexId x) { return x == kDangling ? kDangling : relabel[x]; };
    out.push_back({map(e.a), map(e.b)});
  }
  return CubicGraph(vertex_count, std::move(out));
}

}  // namespace

bool is_adjacent(const CubicGraph& g, const VertexPair& p) {
  require_pair(g, p);
  return g.adjacent(p.u(), p.v());
}

std::vector<EdgeId> connecting_edges(const CubicGraph& g, const VertexPair& p) {
  require_pair(g, p);
  return g.edges_between(p.u(), p.v());
}

std::vector<VertexPair> all_pairs(const CubicGraph& g) {
  std::vector<VertexPair> out;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexPair> adjacent_pairs(const CubicGraph& g) {
  std::vector<VertexPair> out;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

CubicGraph build_graph(int vertex_count,
                       std::span<const std::pair<VertexId, VertexId>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) edges.push_back({a, b});
  return CubicGraph(vertex_count, std::move(edges));
}

CubicGraph remove_vertex_pair(const CubicGraph& g, const VertexPair& p) {
  require_pair(g, p);
  const auto removed = [&](VertexId x) { return x == p.u() || x == p.v(); };

  std::vector<VertexId> relabel(g.order(), kDangling);
  int next = 0;
  for (VertexId x = 0; x < g.order(); ++x)
    if (!removed(x)) relabel[x] = next++;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool ra = removed(e.a);
    const bool rb = removed(e.b);
    if (ra && rb) continue;
    edges.push_back({ra ? kDangling : e.a, rb ? kDangling : e.b});
  }
  return rebuild(next, relabel, edges);
}

bool removal_drops_loop(const CubicGraph& g, const VertexPair& p) {
  require_pair(g, p);
  for (const Edge& e : g.edges())
    if (e.is_loop() && (e.a == p.u() || e.a == p.v())) return true;
  return false;
}

CubicGraph identify_vertices(const CubicGraph& g, const VertexPair& p) {
  require_pair(g, p);
  if (g.dangling_count() > 0 || g.free_edge_count() > 0)
    throw GraphError("identify_vertices requires a graph without dangling edges");
  const VertexId keep = std::min(p.u(), p.v());
  const VertexId gone = std::max(p.u(), p.v());

  std::vector<VertexId> relabel(g.order());
  for (VertexId x = 0; x < g.order(); ++x) {
    if (x == gone)
      relabel[x] = keep;
    else
      relabel[x] = x > gone ? x - 1 : x;
  }
  return rebuild(g.order() - 1, relabel, g.edges());
}

CubicGraph delete_edge(const CubicGraph& g, EdgeId e) {
  g.edge(e);
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + e);
  return CubicGraph(g.order(), std::move(edges));
}

CubicGraph contract_edge(const CubicGraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  if (target.is_loop()) throw GraphError("cannot contract loop " + std::to_string(e));
  if (target.a == kDangling || target.b == kDangling)
    throw GraphError("cannot contract dangling edge " + std::to_string(e));
  // identify_vertices keeps edge ids, so e is still e afterwards.
  return delete_edge(identify_vertices(g, VertexPair(target.a, target.b)), e);
}

namespace {

// Splices out vertex x, which must have exactly two incidences, in a mutable
// edge list. The two incident edges are replaced by one edge stored in the
// slot of the first; the second slot is marked for deletion.
void splice(std::vector<Edge>& edges, std::vector<bool>& dead, VertexId x) {
  std::vector<std::pair<std::size_t, int>> ends;  // (edge index, 0 for a / 1 for b)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (dead[i]) continue;
    if (edges[i].a == x) ends.emplace_back(i, 0);
    if (edges[i].b == x) ends.emplace_back(i, 1);
  }
  if (ends.size() != 2)
    throw NonSuppressibleError("vertex " + std::to_string(x) + " does not have degree 2");
  if (ends[0].first == ends[1].first)
    throw NonSuppressibleError("vertex " + std::to_string(x) +
                               " carries a loop and cannot be suppressed");
  const auto far = [&](std::pair<std::size_t, int> end) {
    const Edge& e = edges[end.first];
    return end.second == 0 ? e.b : e.a;
  };
  const VertexId left = far(ends[0]);
  const VertexId right = far(ends[1]);
  edges[ends[0].first] = {left, right};
  dead[ends[1].first] = true;
}

}  // namespace

CubicGraph suppress_edge(const CubicGraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  if (target.is_loop()) throw NonSuppressibleError("cannot suppress loop " + std::to_string(e));
  if (target.a == kDangling || target.b == kDangling)
    throw NonSuppressibleError("cannot suppress dangling edge " + std::to_string(e));
  if (!g.is_cubic()) throw GraphError("suppress_edge requires a cubic graph");

  std::vector<Edge> edges = g.edges();
  std::vector<bool> dead(edges.size(), false);
  dead[e] = true;
  splice(edges, dead, target.a);
  splice(edges, dead, target.b);

  const VertexId lo = std::min(target.a, target.b);
  const VertexId hi = std::max(target.a, target.b);
  std::vector<VertexId> relabel(g.order(), kDangling);
  int next = 0;
  for (VertexId x = 0; x < g.order(); ++x)
    if (x != lo && x != hi) relabel[x] = next++;

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!dead[i]) kept.push_back(edges[i]);
  return rebuild(next, relabel, kept);
}

bool is_suppressible(const CubicGraph& g, EdgeId e) {
  try {
    suppress_edge(g, e);
    return true;
  } catch (const NonSuppressibleError&) {
    return false;
  }
}

CubicGraph expand_triangle(const CubicGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  if (g.degree(v) != 3) throw GraphError("expand_triangle needs a vertex of degree 3");
  for (const Incidence& inc : g.incidences(v))
    if (inc.other == v) throw GraphError("expand_triangle: loop at vertex " + std::to_string(v));

  const VertexId t1 = g.order();
  const VertexId t2 = g.order() + 1;
  const VertexId corners[3] = {v, t1, t2};
  std::vector<Edge> edges = g.edges();
  int slot = 0;
  for (const Incidence& inc : g.incidences(v)) {
    Edge& e = edges[inc.edge];
    if (e.a == v)
      e.a = corners[slot];
    else
      e.b = corners[slot];
    ++slot;
  }
  edges.push_back({v, t1});
  edges.push_back({t1, t2});
  edges.push_back({t2, v});
  return CubicGraph(g.order() + 2, std::move(edges));
}

bool degree_sum_consistent(const CubicGraph& g) {
  long sum = 0;
  for (VertexId v = 0; v < g.order(); ++v) sum += g.degree(v);
  long expected = 0;
  for (const Edge& e : g.edges()) expected += (e.a != kDangling) + (e.b != kDangling);
  return sum == expected;
}

}  // namespace snarkcrit
