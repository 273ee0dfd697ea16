#include "snarkcrit/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace snarkcrit {

bool is_connected(const CubicGraph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incidences(v))
      if (inc.other != kDangling && !seen[inc.other]) {
        seen[inc.other] = true;
        ++reached;
        stack.push_back(inc.other);
      }
  }
  return reached == g.order();
}

std::optional<int> girth(const CubicGraph& g) {
  if (g.has_loops()) return 1;
  if (g.has_parallel_edges()) return 2;
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.order());
  std::vector<EdgeId> via(g.order());
  for (VertexId s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    via[s] = -1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (const Incidence& inc : g.incidences(x)) {
        const VertexId y = inc.other;
        if (y == kDangling || inc.edge == via[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = inc.edge;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<EdgeId> find_bridges(const CubicGraph& g) {
  std::vector<int> disc(g.order(), -1), low(g.order(), 0);
  std::vector<EdgeId> bridges;
  int timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (VertexId root = 0; root < g.order(); ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incidences(f.v);
      if (f.next < inc.size()) {
        const Incidence cur = inc[f.next++];
        if (cur.other == kDangling || cur.other == f.v || cur.edge == f.parent_edge) continue;
        if (disc[cur.other] < 0) {
          disc[cur.other] = low[cur.other] = timer++;
          stack.push_back({cur.other, cur.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[cur.other]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > disc[parent.v]) bridges.push_back(done.parent_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

namespace {

// Vertex sets of all cycles of length <= max_length (loops and parallel
// pairs included), deduplicated.
std::vector<std::vector<VertexId>> short_cycles(const CubicGraph& g, int max_length) {
  std::set<std::vector<VertexId>> found;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) found.insert({e.a});
  }
  if (max_length >= 2) {
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = u + 1; v < g.order(); ++v)
        if (g.edges_between(u, v).size() >= 2) found.insert({u, v});
  }

  // Simple cycles of length >= 3 rooted at their smallest vertex.
  std::vector<VertexId> path;
  std::vector<bool> on_path(g.order(), false);
  std::function<void(VertexId, VertexId)> extend = [&](VertexId root, VertexId x) {
    for (const Incidence& inc : g.incidences(x)) {
      const VertexId y = inc.other;
      if (y == kDangling || y == x || y < root) continue;
      if (y == root && path.size() >= 3) {
        std::vector<VertexId> cyc = path;
        std::sort(cyc.begin(), cyc.end());
        found.insert(std::move(cyc));
        continue;
      }
      if (on_path[y] || static_cast<int>(path.size()) >= max_length) continue;
      on_path[y] = true;
      path.push_back(y);
      extend(root, y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  for (VertexId root = 0; root < g.order(); ++root) {
    path = {root};
    on_path[root] = true;
    extend(root, root);
    on_path[root] = false;
  }
  return {found.begin(), found.end()};
}

// Minimum number of edges separating vertex set `from` from `to` (unit
// capacities, undirected). Stops early once `cap` is reached.
int min_edge_cut(const CubicGraph& g, const std::vector<VertexId>& from,
                 const std::vector<VertexId>& to, int cap) {
  const int n = g.order();
  const int source = n;
  const int sink = n + 1;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(n + 2);
  const auto add = [&](int x, int y, int c_xy, int c_yx) {
    out[x].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({y, c_xy});
    out[y].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({x, c_yx});
  };
  const int big = g.size() + 1;
  for (const Edge& e : g.edges())
    if (!e.is_loop() && !e.is_dangling() && !e.is_free()) add(e.a, e.b, 1, 1);
  for (VertexId v : from) add(source, v, big, 0);
  for (VertexId v : to) add(v, sink, big, 0);

  int flow = 0;
  std::vector<int> pred(n + 2);
  while (flow < cap) {
    std::fill(pred.begin(), pred.end(), -1);
    std::deque<int> queue{source};
    pred[source] = -2;
    while (!queue.empty() && pred[sink] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : out[x])
        if (arcs[a].cap > 0 && pred[arcs[a].to] == -1) {
          pred[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
    }
    if (pred[sink] == -1) break;
    for (int x = sink; x != source;) {
      const int a = pred[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

bool disjoint(const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return false;
    if (x[i] < y[j])
      ++i;
    else
      ++j;
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), edges_(n, 0), vertices_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void add_edge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent_[y] = x;
      edges_[x] += edges_[y];
      vertices_[x] += vertices_[y];
    }
    ++edges_[x];
  }
  bool cyclic(int root) const { return edges_[root] >= vertices_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<int> edges_;
  std::vector<int> vertices_;
};

// True when deleting the edges flagged in `removed` leaves two or more
// components that contain a cycle.
bool separates_cycles(const CubicGraph& g, const std::vector<bool>& removed) {
  UnionFind uf(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    if (removed[e] || edge.is_dangling() || edge.is_free()) continue;
    uf.add_edge(edge.a, edge.b);
  }
  int cyclic = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (uf.find(v) == v && uf.cyclic(v) && ++cyclic >= 2) return true;
  return false;
}

bool cyclic_cut_of_size(const CubicGraph& g, int k) {
  const int m = g.size();
  if (k > m) return false;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<bool> removed(m, false);
  while (true) {
    for (int e : pick) removed[e] = true;
    const bool hit = separates_cycles(g, removed);
    for (int e : pick) removed[e] = false;
    if (hit) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool has_cyclic_cut_at_most(const CubicGraph& g, int max_size) {
  for (int k = 0; k <= max_size; ++k)
    if (cyclic_cut_of_size(g, k)) return true;
  return false;
}

std::optional<int> cyclic_edge_connectivity(const CubicGraph& g) {
  if (!g.is_cubic()) throw GraphError("cyclic edge-connectivity is only computed for cubic graphs");
  if (!is_connected(g)) throw GraphError("cyclic edge-connectivity needs a connected graph");
  const auto g_len = girth(g);
  if (!g_len) return std::nullopt;

  // Upper bound: minimum cut between two disjoint short cycles. Every such
  // cut separates two cycles, so the bound is attained by a real cyclic cut.
  int best = std::numeric_limits<int>::max();
  for (int limit = *g_len + 2; limit <= std::max(g.order(), *g_len + 2); limit += 2) {
    const auto cycles = short_cycles(g, limit);
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j)
        if (disjoint(cycles[i], cycles[j]))
          best = std::min(best, min_edge_cut(g, cycles[i], cycles[j], best));
    if (best != std::numeric_limits<int>::max()) break;
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;

  // Certify minimality by ruling out every smaller cycle-separating cut.
  for (int k = 0; k < best; ++k)
    if (cyclic_cut_of_size(g, k)) return k;
  return best;
}

StructureProfile structure_profile(const CubicGraph& g) {
  StructureProfile p;
  p.connected = is_connected(g);
  p.bridge_count = static_cast<int>(find_bridges(g).size());
  p.girth = girth(g);
  if (p.connected && g.is_cubic() && g.dangling_count() == 0 && g.free_edge_count() == 0)
    p.cyclic_edge_connectivity = cyclic_edge_connectivity(g);
  return p;
}

}  // namespace snarkcrit
