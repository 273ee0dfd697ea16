#include "search_order.hpp"

#include <algorithm>
#include <deque>

namespace snarkcrit::detail {

std::vector<std::vector<EdgeId>> component_edge_orders(const CubicGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> seen_vertex(g.order(), false);
  std::vector<bool> seen_edge(g.size(), false);

  std::vector<VertexId> starts(g.order());
  for (VertexId v = 0; v < g.order(); ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](VertexId x, VertexId y) { return g.degree(x) > g.degree(y); });

  for (VertexId s : starts) {
    if (seen_vertex[s]) continue;
    std::vector<EdgeId> order;
    std::deque<VertexId> queue{s};
    seen_vertex[s] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incidences(v)) {
        if (!seen_edge[inc.edge]) {
          seen_edge[inc.edge] = true;
          order.push_back(inc.edge);
        }
        if (inc.other != kDangling && !seen_vertex[inc.other]) {
          seen_vertex[inc.other] = true;
          queue.push_back(inc.other);
        }
      }
    }
    out.push_back(std::move(order));
  }
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!seen_edge[e]) out.push_back({e});
  return out;
}

}  // namespace snarkcrit::detail
