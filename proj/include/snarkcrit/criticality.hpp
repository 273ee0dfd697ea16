#pragma once

// Criticality of snarks decided along two independent routes:
//
//  * the colouring route asks whether G - {u, v} is 3-edge-colourable
//    (critical over adjacent pairs, bicritical over all pairs);
//  * the flow route asks whether G / {u, v} has a nowhere-zero Z4-flow
//    (4-edge-critical over adjacent pairs, 4-vertex-critical over all pairs).
//
// For a snark the six local statements below agree on every vertex pair, so
// the two routes must return the same verdicts. Any disagreement reported by
// the verify_* functions points at a bug in this library, not at the graph.
//
//   (i)   G - {u, v} is 3-edge-colourable
//   (ii)  G - {u, v} has a nowhere-zero Z4-flow
//   (iii) G / {u, v} has a nowhere-zero Z4-flow
//   (iv)  G - e has a nowhere-zero Z4-flow          (u, v joined by e)
//   (v)   G / e has a nowhere-zero Z4-flow          (u, v joined by e)
//   (vi)  G ~ e is 3-edge-colourable                (u, v joined by e)

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snarkcrit/coloring.hpp"
#include "snarkcrit/flows.hpp"
#include "snarkcrit/graph.hpp"

namespace snarkcrit {

// The graph does not satisfy the hypotheses of the requested check.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always an implementation defect.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SnarkVerdict {
  bool snark = false;
  std::string reason;  // why not, when snark is false
};

// Connected, cubic and not 3-edge-colourable. When the colouring search says
// "not colourable" the absence of a Z4-flow is confirmed as well; a mismatch
// throws ConsistencyError.
SnarkVerdict snark_verdict(const CubicGraph& g);
bool is_snark(const CubicGraph& g);

// Statements (iv)-(vi) for one edge joining the pair.
struct EdgeStatements {
  EdgeId edge = -1;
  bool s4 = false;
  bool s5 = false;
  std::optional<bool> s6;  // nullopt when G ~ e is not suppressible
  std::optional<FlowAssignment> flow_iv;
  std::optional<FlowAssignment> flow_v;
  std::optional<EdgeColoring> coloring_vi;
};

struct PairReport {
  VertexPair pair{0, 1};
  bool adjacent = false;
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  // Conjunctions over the connecting edges; present only for adjacent pairs.
  std::optional<bool> s4;
  std::optional<bool> s5;
  std::optional<bool> s6;
  std::vector<EdgeStatements> per_edge;

  std::optional<EdgeColoring> coloring_i;
  std::optional<FlowAssignment> flow_ii;    // on G - {u, v}
  std::optional<FlowAssignment> flow_iii;   // on G / {u, v}

  // Set when the pair touches the loop-deletion convention of
  // remove_vertex_pair or an edge that cannot be suppressed.
  bool degenerate = false;
  std::string note;

  // All present statements take the same value.
  bool consistent() const;
};

// Throws PreconditionError unless g is a snark.
PairReport pair_status(const CubicGraph& g, const VertexPair& p);

bool is_critical(const CubicGraph& g);
bool is_bicritical(const CubicGraph& g);
bool is_strictly_critical(const CubicGraph& g);
bool is_4_edge_critical(const CubicGraph& g);
bool is_4_vertex_critical(const CubicGraph& g);

// Synonyms: 5- and 6-irreducibility coincide with criticality, 7-irreducibility
// and irreducibility with bicriticality. They are not computed via reductions.
inline bool is_5_irreducible(const CubicGraph& g) { return is_critical(g); }
inline bool is_6_irreducible(const CubicGraph& g) { return is_critical(g); }
inline bool is_7_irreducible(const CubicGraph& g) { return is_bicritical(g); }
inline bool is_irreducible(const CubicGraph& g) { return is_bicritical(g); }

struct StrongReport {
  bool via_suppression = false;  // G ~ e is a snark for every edge e
  bool via_pairs = false;        // G - {u, v} has chromatic index 4 for adjacent u, v
  std::vector<EdgeId> non_suppressible;  // decided by the pair route instead
  bool agree() const { return via_suppression == via_pairs; }
};

StrongReport strong_report(const CubicGraph& g);
// Throws ConsistencyError when the two routes disagree.
bool is_strong(const CubicGraph& g);

struct LocalCertificate {
  std::vector<PairReport> pairs;  // lexicographic pair order
  std::size_t consistent_pairs = 0;
  std::size_t degenerate_pairs = 0;
  std::vector<VertexPair> disagreements;
  bool all_consistent() const { return disagreements.empty(); }
};

// pair_status on every unordered pair, without early exit.
LocalCertificate verify_theorem_local(const CubicGraph& g);

struct CoincidenceCertificate {
  bool critical = false;
  bool four_edge_critical = false;
  bool bicritical = false;
  bool four_vertex_critical = false;
  long coloring_path_micros = 0;
  long flow_path_micros = 0;
  bool holds() const {
    return critical == four_edge_critical && bicritical == four_vertex_critical;
  }
};

CoincidenceCertificate verify_classifier_coincidence(const CubicGraph& g);

struct ClassificationRecord {
  std::size_t graph_index = 0;
  int order = 0;
  bool is_snark = false;
  std::string refusal;  // set for non-snarks; criticality verdicts stay empty
  std::optional<bool> is_critical;
  std::optional<bool> is_bicritical;
  std::optional<bool> is_strictly_critical;
  std::optional<bool> is_4_edge_critical;
  std::optional<bool> is_4_vertex_critical;
  std::optional<bool> is_strong;
  std::optional<int> girth;
  std::optional<int> cyclic_edge_connectivity;
  long coloring_path_micros = 0;
  long flow_path_micros = 0;
};

ClassificationRecord classify(const CubicGraph& g, std::size_t graph_index = 0);

}  // namespace snarkcrit
