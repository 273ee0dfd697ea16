#include "snarkcrit/flows.hpp"

#include <array>

#include "search_order.hpp"

namespace snarkcrit {

namespace {

// Addition and negation tables, indexed [group][x][y] and [group][x].
constexpr std::uint8_t kAdd[2][4][4] = {
    {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}},
    {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
};
constexpr std::uint8_t kNeg[2][4] = {{0, 3, 2, 1}, {0, 1, 2, 3}};

constexpr int index_of(FlowGroup group) { return group == FlowGroup::kZ4 ? 0 : 1; }

}  // namespace

std::string_view group_name(FlowGroup group) {
  return group == FlowGroup::kZ4 ? "Z4" : "Z2xZ2";
}

std::uint8_t group_add(FlowGroup group, std::uint8_t x, std::uint8_t y) {
  return kAdd[index_of(group)][x & 3][y & 3];
}

std::uint8_t group_neg(FlowGroup group, std::uint8_t x) { return kNeg[index_of(group)][x & 3]; }

VertexId flow_head(const CubicGraph& g, const FlowAssignment& f, EdgeId e) {
  const Edge& edge = g.edge(e);
  return f.reversed.at(e) ? edge.a : edge.b;
}

FlowAssignment reverse_edge(const FlowAssignment& f, EdgeId e) {
  FlowAssignment out = f;
  out.reversed.at(e) = !out.reversed.at(e);
  out.values.at(e) = group_neg(f.group, f.values.at(e));
  return out;
}

namespace {

// Backtracking over edges with Kirchhoff elimination: whenever a vertex has a
// single unassigned edge left, that edge's value is determined by
// conservation, and a determined identity value is a dead end. The decision
// variables are therefore exactly the edges left over once every forced edge
// is peeled off, i.e. a cotree of a spanning forest grown during the search.
class FlowSearch {
 public:
  FlowSearch(const CubicGraph& g, FlowGroup group)
      : g_(g),
        group_(group),
        value_(g.size(), 0),
        remaining_(g.order(), 0),
        sum_(g.order(), 0) {
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) {
        value_[e] = 1;
        continue;
      }
      if (edge.a != kDangling) ++remaining_[edge.a];
      if (edge.b != kDangling) ++remaining_[edge.b];
    }
  }

  bool solve_component(const std::vector<EdgeId>& order) {
    order_ = &order;
    counts_ = {};
    trail_.clear();
    // A component whose vertices have no non-loop edges is already balanced.
    return search(0);
  }

  FlowAssignment result() const {
    FlowAssignment f;
    f.group = group_;
    f.values = value_;
    f.reversed.assign(value_.size(), false);
    return f;
  }

  long nodes() const { return nodes_; }

 private:
  bool search(std::size_t pos) {
    const auto& order = *order_;
    while (pos < order.size() && value_[order[pos]] != 0) ++pos;
    if (pos == order.size()) return true;
    ++nodes_;

    const EdgeId e = order[pos];
    bool tried_fresh = false;
    for (std::uint8_t x = 1; x <= 3; ++x) {
      if (!worth_trying(x, tried_fresh)) continue;
      const std::size_t mark = trail_.size();
      if (assign(e, x) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Skips values that an automorphism fixing everything used so far maps
  // onto a value already tried.
  bool worth_trying(std::uint8_t x, bool& tried_fresh) const {
    if (group_ == FlowGroup::kZ4) {
      // Negation swaps 1 and 3 and fixes 2.
      return !(x == 3 && counts_[1] == 0 && counts_[3] == 0);
    }
    // Every permutation of the non-zero Klein elements is an automorphism.
    if (counts_[x] != 0) return true;
    if (tried_fresh) return false;
    tried_fresh = true;
    return true;
  }

  bool assign(EdgeId e, std::uint8_t x) {
    pending_.clear();
    pending_.push_back({e, x});
    while (!pending_.empty()) {
      const auto [f, y] = pending_.back();
      pending_.pop_back();
      if (y == 0) return false;
      if (value_[f] != 0) {
        if (value_[f] != y) return false;
        continue;
      }
      const Edge& edge = g_.edge(f);
      value_[f] = y;
      ++counts_[y];
      trail_.push_back(f);
      if (edge.a != kDangling) {
        sum_[edge.a] = group_add(group_, sum_[edge.a], group_neg(group_, y));
        --remaining_[edge.a];
      }
      if (edge.b != kDangling) {
        sum_[edge.b] = group_add(group_, sum_[edge.b], y);
        --remaining_[edge.b];
      }
      for (VertexId w : {edge.a, edge.b}) {
        if (w == kDangling) continue;
        if (remaining_[w] == 0) {
          if (sum_[w] != 0) return false;
        } else if (remaining_[w] == 1) {
          const EdgeId last = last_open_edge(w);
          // Inflow is counted positive at the head.
          const bool head = g_.edge(last).b == w;
          const std::uint8_t need = head ? group_neg(group_, sum_[w]) : sum_[w];
          if (need == 0) return false;
          pending_.push_back({last, need});
        }
      }
    }
    return true;
  }

  EdgeId last_open_edge(VertexId w) const {
    for (const Incidence& inc : g_.incidences(w))
      if (value_[inc.edge] == 0) return inc.edge;
    return -1;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId f = trail_.back();
      trail_.pop_back();
      const std::uint8_t y = value_[f];
      const Edge& edge = g_.edge(f);
      if (edge.a != kDangling) {
        sum_[edge.a] = group_add(group_, sum_[edge.a], y);
        ++remaining_[edge.a];
      }
      if (edge.b != kDangling) {
        sum_[edge.b] = group_add(group_, sum_[edge.b], group_neg(group_, y));
        ++remaining_[edge.b];
      }
      --counts_[y];
      value_[f] = 0;
    }
  }

  struct Pending {
    EdgeId edge;
    std::uint8_t value;
  };

  const CubicGraph& g_;
  FlowGroup group_;
  std::vector<std::uint8_t> value_;
  std::vector<int> remaining_;
  std::vector<std::uint8_t> sum_;
  std::vector<EdgeId> trail_;
  std::vector<Pending> pending_;
  std::array<int, 4> counts_{};
  const std::vector<EdgeId>* order_ = nullptr;
  long nodes_ = 0;
};

}  // namespace

std::optional<FlowAssignment> nowhere_zero_flow(const CubicGraph& g, FlowGroup group,
                                                FlowStats* stats) {
  FlowSearch search(g, group);
  bool ok = true;
  for (auto order : detail::component_edge_orders(g)) {
    std::erase_if(order, [&](EdgeId e) { return g.edge(e).is_loop(); });
    if (!search.solve_component(order)) {
      ok = false;
      break;
    }
  }
  if (stats) stats->nodes += search.nodes();
  if (!ok) return std::nullopt;
  return search.result();
}

bool verify_kirchhoff(const CubicGraph& g, const FlowAssignment& f) {
  if (static_cast<int>(f.values.size()) != g.size() ||
      static_cast<int>(f.reversed.size()) != g.size())
    throw GraphError("flow assignment covers " + std::to_string(f.values.size()) +
                     " edges, graph has " + std::to_string(g.size()));
  std::vector<std::uint8_t> net(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    const VertexId head = f.reversed[e] ? edge.a : edge.b;
    const VertexId tail = f.reversed[e] ? edge.b : edge.a;
    const std::uint8_t x = f.values[e];
    if (head != kDangling) net[head] = group_add(f.group, net[head], x);
    if (tail != kDangling) net[tail] = group_add(f.group, net[tail], group_neg(f.group, x));
  }
  for (std::uint8_t s : net)
    if (s != 0) return false;
  return true;
}

bool is_nowhere_zero(const FlowAssignment& f) {
  for (std::uint8_t x : f.values)
    if ((x & 3) == 0) return false;
  return true;
}

std::uint8_t dangling_outflow(const CubicGraph& g, const FlowAssignment& f) {
  std::uint8_t total = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!g.edge(e).is_dangling()) continue;
    const bool outward = flow_head(g, f, e) == kDangling;
    const std::uint8_t x = f.values.at(e);
    total = group_add(f.group, total, outward ? x : group_neg(f.group, x));
  }
  return total;
}

std::optional<FlowAssignment> flow_on_identification(const CubicGraph& g, const VertexPair& p,
                                                     FlowGroup group) {
  return nowhere_zero_flow(identify_vertices(g, p), group);
}

}  // namespace snarkcrit
