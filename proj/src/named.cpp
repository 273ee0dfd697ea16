#include <algorithm>
#include <cctype>
#include <charconv>

#include "snarkcrit/io.hpp"

namespace snarkcrit {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

CubicGraph from_list(int n, const EdgeList& list) { return build_graph(n, list); }

CubicGraph petersen() {
  EdgeList list;
  for (int i = 0; i < 5; ++i) {
    list.emplace_back(i, (i + 1) % 5);
    list.emplace_back(i, i + 5);
    list.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_list(10, list);
}

// Flower snark J_k: k claws a_i-{b_i, c_i, d_i}; the b_i form a k-cycle and
// the c_i, d_i together form one 2k-cycle c_0 ... c_{k-1} d_0 ... d_{k-1}.
CubicGraph flower(int k) {
  if (k < 5 || k % 2 == 0)
    throw GraphError("flower snark needs an odd number of spokes >= 5, got " + std::to_string(k));
  const auto a = [](int i) { return 4 * i; };
  const auto b = [](int i) { return 4 * i + 1; };
  const auto c = [](int i) { return 4 * i + 2; };
  const auto d = [](int i) { return 4 * i + 3; };
  EdgeList list;
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    list.emplace_back(a(i), b(i));
    list.emplace_back(a(i), c(i));
    list.emplace_back(a(i), d(i));
    list.emplace_back(b(i), b(j));
    if (j != 0) {
      list.emplace_back(c(i), c(j));
      list.emplace_back(d(i), d(j));
    }
  }
  list.emplace_back(c(k - 1), d(0));
  list.emplace_back(d(k - 1), c(0));
  return from_list(4 * k, list);
}

// The two Blanusa snarks (order 18), automorphism groups of order 8 and 4.
const EdgeList kBlanusa1 = {
    {0, 4},   {0, 5},   {0, 12},  {1, 2},   {1, 6},   {1, 13},  {2, 3},
    {2, 7},   {3, 4},   {3, 10},  {4, 9},   {5, 7},   {5, 8},   {6, 8},
    {6, 9},   {7, 9},   {8, 14},  {10, 11}, {10, 15}, {11, 12}, {11, 16},
    {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}};
const EdgeList kBlanusa2 = {
    {0, 4},   {0, 5},   {0, 12},  {1, 2},   {1, 6},   {1, 13},  {2, 7},
    {2, 10},  {3, 4},   {3, 8},   {3, 14},  {4, 9},   {5, 7},   {5, 8},
    {6, 8},   {6, 9},   {7, 9},   {10, 11}, {10, 15}, {11, 12}, {11, 16},
    {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}};

CubicGraph checked_snark(const EdgeList& list, const char* name) {
  CubicGraph g = from_list(18, list);
  if (!g.is_cubic() || !is_snark(g))
    throw std::logic_error(std::string("stored adjacency for ") + name + " is not a snark");
  return g;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

CubicGraph make_named(NamedGraph name, int parameter) {
  switch (name) {
    case NamedGraph::kDumbbell:
      return from_list(2, {{0, 1}, {0, 0}, {1, 1}});
    case NamedGraph::kTheta:
      return from_list(2, {{0, 1}, {0, 1}, {0, 1}});
    case NamedGraph::kK4:
      return from_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case NamedGraph::kPetersen:
      return petersen();
    case NamedGraph::kFlower:
      return flower(parameter);
    case NamedGraph::kBlanusa1: {
      static const CubicGraph g = checked_snark(kBlanusa1, "blanusa1");
      return g;
    }
    case NamedGraph::kBlanusa2: {
      static const CubicGraph g = checked_snark(kBlanusa2, "blanusa2");
      return g;
    }
  }
  throw GraphError("unknown named graph");
}

CubicGraph make_named(std::string_view name) {
  const std::string key = lowercase(name);
  if (key == "dumbbell") return make_named(NamedGraph::kDumbbell);
  if (key == "petersen") return make_named(NamedGraph::kPetersen);
  if (key == "theta") return make_named(NamedGraph::kTheta);
  if (key == "k4") return make_named(NamedGraph::kK4);
  if (key == "blanusa1") return make_named(NamedGraph::kBlanusa1);
  if (key == "blanusa2") return make_named(NamedGraph::kBlanusa2);

  std::string_view rest;
  std::string_view view = key;
  if (view.starts_with("flower"))
    rest = view.substr(6);
  else if (view.starts_with("j"))
    rest = view.substr(1);
  else
    throw GraphError("unknown named graph '" + std::string(name) + "'");
  if (rest.starts_with(":")) rest.remove_prefix(1);
  int k = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
    throw GraphError("bad flower snark size in '" + std::string(name) + "'");
  return make_named(NamedGraph::kFlower, k);
}

std::vector<std::string> named_graph_examples() {
  return {"dumbbell", "petersen", "theta", "k4", "flower5", "flower7", "blanusa1", "blanusa2"};
}

}  // namespace snarkcrit
