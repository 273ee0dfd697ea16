#include "snarkcrit/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "search_order.hpp"
#include "snarkcrit/flows.hpp"

namespace snarkcrit {
namespace {

constexpr std::uint8_t bit(std::uint8_t c) { return static_cast<std::uint8_t>(1u << c); }
constexpr std::uint8_t kAllColors = bit(1) | bit(2) | bit(3);

class ColoringSearch {
 public:
  explicit ColoringSearch(const CubicGraph& g)
      : g_(g), color_(g.size(), 0), used_(g.order(), 0) {}

  bool solve_component(const std::vector<EdgeId>& order) {
    order_ = &order;
    counts_ = {};
    trail_.clear();
    return search(0);
  }

  EdgeColoring result() const {
    EdgeColoring c;
    c.colors.reserve(color_.size());
    for (std::uint8_t x : color_) c.colors.push_back(static_cast<KleinColor>(x));
    return c;
  }

  long nodes() const { return nodes_; }

 private:
  bool search(std::size_t pos) {
    const auto& order = *order_;
    while (pos < order.size() && color_[order[pos]] != 0) ++pos;
    if (pos == order.size()) return true;
    ++nodes_;

    const EdgeId e = order[pos];
    const Edge& edge = g_.edge(e);
    std::uint8_t blocked = 0;
    if (edge.a != kDangling) blocked |= used_[edge.a];
    if (edge.b != kDangling) blocked |= used_[edge.b];

    // Colours not yet used in this component are interchangeable: try one.
    bool tried_fresh = false;
    for (std::uint8_t c = 1; c <= 3; ++c) {
      if (blocked & bit(c)) continue;
      if (counts_[c] == 0) {
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      const std::size_t mark = trail_.size();
      if (assign(e, c) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Colours e with c and propagates forced colours at degree-3 vertices.
  bool assign(EdgeId e, std::uint8_t c) {
    pending_.clear();
    pending_.push_back({e, c});
    while (!pending_.empty()) {
      const auto [f, x] = pending_.back();
      pending_.pop_back();
      if (color_[f] != 0) {
        if (color_[f] != x) return false;
        continue;
      }
      const Edge& edge = g_.edge(f);
      const VertexId ends[2] = {edge.a, edge.b};
      for (VertexId w : ends)
        if (w != kDangling && (used_[w] & bit(x))) return false;
      color_[f] = x;
      for (VertexId w : ends)
        if (w != kDangling) used_[w] |= bit(x);
      ++counts_[x];
      trail_.push_back(f);

      for (VertexId w : ends) {
        if (w == kDangling || g_.degree(w) != 3 || std::popcount(used_[w]) != 2) continue;
        const std::uint8_t missing = kAllColors & static_cast<std::uint8_t>(~used_[w]);
        const std::uint8_t forced = static_cast<std::uint8_t>(std::countr_zero(missing));
        for (const Incidence& inc : g_.incidences(w))
          if (color_[inc.edge] == 0) pending_.push_back({inc.edge, forced});
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId f = trail_.back();
      trail_.pop_back();
      const std::uint8_t x = color_[f];
      const Edge& edge = g_.edge(f);
      if (edge.a != kDangling) used_[edge.a] &= static_cast<std::uint8_t>(~bit(x));
      if (edge.b != kDangling) used_[edge.b] &= static_cast<std::uint8_t>(~bit(x));
      --counts_[x];
      color_[f] = 0;
    }
  }

  struct Pending {
    EdgeId edge;
    std::uint8_t color;
  };

  const CubicGraph& g_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint8_t> used_;
  std::vector<EdgeId> trail_;
  std::vector<Pending> pending_;
  std::array<int, 4> counts_{};
  const std::vector<EdgeId>* order_ = nullptr;
  long nodes_ = 0;
};

}  // namespace

std::optional<EdgeColoring> three_edge_colorable(const CubicGraph& g, ColoringStats* stats) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) > 3)
      throw GraphError("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + " > 3");
  if (g.has_loops()) return std::nullopt;

  ColoringSearch search(g);
  bool ok = true;
  for (const auto& order : detail::component_edge_orders(g)) {
    if (!search.solve_component(order)) {
      ok = false;
      break;
    }
  }
  if (stats) stats->nodes += search.nodes();
  if (!ok) return std::nullopt;
  return search.result();
}

bool chromatic_index_is_4(const CubicGraph& g) { return !three_edge_colorable(g).has_value(); }

bool is_proper_coloring(const CubicGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) return false;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto x = static_cast<std::uint8_t>(c.colors[e]);
    if (x < 1 || x > 3 || g.edge(e).is_loop()) return false;
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    std::uint8_t seen = 0;
    for (const Incidence& inc : g.incidences(v)) {
      const std::uint8_t b = bit(static_cast<std::uint8_t>(c.colors[inc.edge]));
      if (seen & b) return false;
      seen |= b;
    }
  }
  return true;
}

EdgeColoring permute_colors(const EdgeColoring& c, const std::array<KleinColor, 3>& perm) {
  EdgeColoring out;
  out.colors.reserve(c.colors.size());
  for (KleinColor x : c.colors) out.colors.push_back(perm[static_cast<std::uint8_t>(x) - 1]);
  return out;
}

FlowAssignment coloring_as_flow(const EdgeColoring& c) {
  FlowAssignment f;
  f.group = FlowGroup::kKlein;
  f.values.reserve(c.colors.size());
  for (KleinColor x : c.colors) f.values.push_back(static_cast<std::uint8_t>(x));
  f.reversed.assign(c.colors.size(), false);
  return f;
}

}  // namespace snarkcrit
