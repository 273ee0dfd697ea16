#include "snarkcrit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace snarkcrit {
namespace {

struct Profile {
  int n = 0;
  std::vector<std::vector<int>> mult;  // mult[u][v], u != v
  std::vector<int> loops;
  std::vector<int> dangling;
};

Profile profile(const CubicGraph& g) {
  Profile p;
  p.n = g.order();
  p.mult.assign(p.n, std::vector<int>(p.n, 0));
  p.loops.assign(p.n, 0);
  p.dangling.assign(p.n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_free()) continue;
    if (e.is_dangling()) {
      ++p.dangling[e.a];
    } else if (e.is_loop()) {
      ++p.loops[e.a];
    } else {
      ++p.mult[e.a][e.b];
      ++p.mult[e.b][e.a];
    }
  }
  return p;
}

std::size_t distinct(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

// Colour refinement run on both graphs at once so the colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Profile& g, const Profile& h) {
  const int n = g.n;
  const auto at = [&](int side) -> const Profile& { return side == 0 ? g : h; };
  std::vector<int> colour(2 * n);
  {
    std::map<std::tuple<int, int, int>, int> ids;
    for (int side = 0; side < 2; ++side)
      for (int v = 0; v < n; ++v) {
        const Profile& p = at(side);
        int deg = 2 * p.loops[v] + p.dangling[v];
        for (int w = 0; w < n; ++w) deg += p.mult[v][w];
        auto key = std::make_tuple(deg, p.loops[v], p.dangling[v]);
        auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
        colour[side * n + v] = it->second;
      }
  }
  for (int round = 0; round < n + 1; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(2 * n);
    for (int side = 0; side < 2; ++side)
      for (int v = 0; v < n; ++v) {
        const Profile& p = at(side);
        std::vector<int> sig{colour[side * n + v]};
        std::vector<int> nbr;
        for (int w = 0; w < n; ++w)
          if (p.mult[v][w] > 0) nbr.push_back(colour[side * n + w] * 64 + p.mult[v][w]);
        std::sort(nbr.begin(), nbr.end());
        sig.insert(sig.end(), nbr.begin(), nbr.end());
        auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
        next[side * n + v] = it->second;
      }
    const bool stable = ids.size() == distinct(colour);
    colour = std::move(next);
    if (stable) break;
  }
  return {std::vector<int>(colour.begin(), colour.begin() + n),
          std::vector<int>(colour.begin() + n, colour.end())};
}

class Matcher {
 public:
  Matcher(const Profile& g, const Profile& h, std::vector<int> gc, std::vector<int> hc)
      : g_(g), h_(h), gc_(std::move(gc)), hc_(std::move(hc)), map_(g.n, -1), used_(g.n, false) {
    // Visit vertices in BFS order so each new vertex has mapped neighbours.
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::vector<int> queue{s};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (int w = 0; w < g.n; ++w)
          if (g.mult[queue[i]][w] > 0 && !seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int x = 0; x < h_.n; ++x) {
      if (used_[x] || hc_[x] != gc_[v]) continue;
      if (!consistent(v, x)) continue;
      map_[v] = x;
      used_[x] = true;
      if (run(depth + 1)) return true;
      map_[v] = -1;
      used_[x] = false;
    }
    return false;
  }

 private:
  bool consistent(int v, int x) const {
    if (g_.loops[v] != h_.loops[x] || g_.dangling[v] != h_.dangling[x]) return false;
    for (int w = 0; w < g_.n; ++w)
      if (map_[w] >= 0 && g_.mult[v][w] != h_.mult[x][map_[w]]) return false;
    return true;
  }

  const Profile& g_;
  const Profile& h_;
  std::vector<int> gc_, hc_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace

bool isomorphic(const CubicGraph& g, const CubicGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.free_edge_count() != h.free_edge_count()) return false;
  const Profile pg = profile(g);
  const Profile ph = profile(h);
  auto [gc, hc] = refine(pg, ph);
  std::vector<int> sg = gc, sh = hc;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  return Matcher(pg, ph, std::move(gc), std::move(hc)).run();
}

}  // namespace snarkcrit
