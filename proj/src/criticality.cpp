#include "snarkcrit/criticality.hpp"

#include <chrono>

#include "snarkcrit/structure.hpp"

namespace snarkcrit {

namespace {

std::string pair_text(const VertexPair& p) {
  return "(" + std::to_string(p.u()) + ", " + std::to_string(p.v()) + ")";
}

void require_snark(const CubicGraph& g, const char* what) {
  const SnarkVerdict verdict = snark_verdict(g);
  if (!verdict.snark)
    throw PreconditionError(std::string(what) + " needs a snark: " + verdict.reason);
}

bool colorable_after_removal(const CubicGraph& g, const VertexPair& p) {
  return three_edge_colorable(remove_vertex_pair(g, p)).has_value();
}

bool flow_after_identification(const CubicGraph& g, const VertexPair& p) {
  return flow_on_identification(g, p, FlowGroup::kZ4).has_value();
}

// Colouring route.
bool critical_unchecked(const CubicGraph& g) {
  for (const VertexPair& p : adjacent_pairs(g))
    if (!colorable_after_removal(g, p)) return false;
  return true;
}

bool bicritical_unchecked(const CubicGraph& g) {
  for (const VertexPair& p : all_pairs(g))
    if (!colorable_after_removal(g, p)) return false;
  return true;
}

// Flow route; shares nothing with the colouring route beyond the graph model.
bool four_edge_critical_unchecked(const CubicGraph& g) {
  for (const VertexPair& p : adjacent_pairs(g))
    if (!flow_after_identification(g, p)) return false;
  return true;
}

bool four_vertex_critical_unchecked(const CubicGraph& g) {
  for (const VertexPair& p : all_pairs(g))
    if (!flow_after_identification(g, p)) return false;
  return true;
}

StrongReport strong_unchecked(const CubicGraph& g) {
  StrongReport report;

  report.via_pairs = true;
  for (const VertexPair& p : adjacent_pairs(g)) {
    if (!chromatic_index_is_4(remove_vertex_pair(g, p))) {
      report.via_pairs = false;
      break;
    }
  }

  report.via_suppression = true;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& edge = g.edge(e);
    bool snark_after;
    if (edge.is_loop()) {
      // No vertex pair to fall back on; a loop does not constrain strength.
      report.non_suppressible.push_back(e);
      continue;
    }
    if (is_suppressible(g, e)) {
      snark_after = is_snark(suppress_edge(g, e));
    } else {
      report.non_suppressible.push_back(e);
      snark_after = chromatic_index_is_4(remove_vertex_pair(g, VertexPair(edge.a, edge.b)));
    }
    if (!snark_after) {
      report.via_suppression = false;
      break;
    }
  }
  return report;
}

long micros_since(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::microseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count());
}

}  // namespace

SnarkVerdict snark_verdict(const CubicGraph& g) {
  if (g.order() == 0) return {false, "empty graph"};
  if (g.dangling_count() > 0 || g.free_edge_count() > 0) return {false, "has dangling edges"};
  if (!g.is_cubic()) return {false, "not cubic"};
  if (!is_connected(g)) return {false, "not connected"};
  if (three_edge_colorable(g)) return {false, "3-edge-colourable"};
  if (nowhere_zero_flow(g, FlowGroup::kZ4))
    throw ConsistencyError("graph has a nowhere-zero Z4-flow but no 3-edge-colouring");
  return {true, ""};
}

bool is_snark(const CubicGraph& g) { return snark_verdict(g).snark; }

bool PairReport::consistent() const {
  const auto agrees = [&](const std::optional<bool>& s) { return !s || *s == s1; };
  return s2 == s1 && s3 == s1 && agrees(s4) && agrees(s5) && agrees(s6);
}

namespace {

PairReport pair_status_unchecked(const CubicGraph& g, const VertexPair& p) {
  PairReport r;
  r.pair = p;

  const CubicGraph removed = remove_vertex_pair(g, p);
  r.coloring_i = three_edge_colorable(removed);
  r.s1 = r.coloring_i.has_value();
  r.flow_ii = nowhere_zero_flow(removed, FlowGroup::kZ4);
  r.s2 = r.flow_ii.has_value();
  r.flow_iii = flow_on_identification(g, p, FlowGroup::kZ4);
  r.s3 = r.flow_iii.has_value();

  if (removal_drops_loop(g, p)) {
    r.degenerate = true;
    r.note = "loop at " + pair_text(p) + " deleted with the pair";
  }

  const std::vector<EdgeId> joining = connecting_edges(g, p);
  r.adjacent = !joining.empty();
  if (!r.adjacent) return r;

  bool s4 = true, s5 = true, s6 = true, any_s6 = false;
  for (EdgeId e : joining) {
    EdgeStatements st;
    st.edge = e;
    st.flow_iv = nowhere_zero_flow(delete_edge(g, e), FlowGroup::kZ4);
    st.s4 = st.flow_iv.has_value();
    st.flow_v = nowhere_zero_flow(contract_edge(g, e), FlowGroup::kZ4);
    st.s5 = st.flow_v.has_value();
    try {
      st.coloring_vi = three_edge_colorable(suppress_edge(g, e));
      st.s6 = st.coloring_vi.has_value();
    } catch (const NonSuppressibleError&) {
      r.degenerate = true;
      if (!r.note.empty()) r.note += "; ";
      r.note += "edge " + std::to_string(e) + " not suppressible";
    }
    s4 = s4 && st.s4;
    s5 = s5 && st.s5;
    if (st.s6) {
      any_s6 = true;
      s6 = s6 && *st.s6;
    }
    r.per_edge.push_back(std::move(st));
  }
  r.s4 = s4;
  r.s5 = s5;
  if (any_s6) r.s6 = s6;
  return r;
}

}  // namespace

PairReport pair_status(const CubicGraph& g, const VertexPair& p) {
  require_snark(g, "pair_status");
  return pair_status_unchecked(g, p);
}

bool is_critical(const CubicGraph& g) {
  require_snark(g, "is_critical");
  return critical_unchecked(g);
}

bool is_bicritical(const CubicGraph& g) {
  require_snark(g, "is_bicritical");
  return bicritical_unchecked(g);
}

bool is_strictly_critical(const CubicGraph& g) {
  require_snark(g, "is_strictly_critical");
  return critical_unchecked(g) && !bicritical_unchecked(g);
}

bool is_4_edge_critical(const CubicGraph& g) {
  require_snark(g, "is_4_edge_critical");
  return four_edge_critical_unchecked(g);
}

bool is_4_vertex_critical(const CubicGraph& g) {
  require_snark(g, "is_4_vertex_critical");
  return four_vertex_critical_unchecked(g);
}

StrongReport strong_report(const CubicGraph& g) {
  require_snark(g, "is_strong");
  return strong_unchecked(g);
}

bool is_strong(const CubicGraph& g) {
  const StrongReport report = strong_report(g);
  if (!report.agree())
    throw ConsistencyError("strong-snark routes disagree: suppression says " +
                           std::string(report.via_suppression ? "strong" : "not strong") +
                           ", adjacent pairs say " + (report.via_pairs ? "strong" : "not strong"));
  return report.via_pairs;
}

LocalCertificate verify_theorem_local(const CubicGraph& g) {
  require_snark(g, "verify_theorem_local");
  LocalCertificate cert;
  for (const VertexPair& p : all_pairs(g)) {
    PairReport r = pair_status_unchecked(g, p);
    if (r.consistent())
      ++cert.consistent_pairs;
    else
      cert.disagreements.push_back(p);
    if (r.degenerate) ++cert.degenerate_pairs;
    cert.pairs.push_back(std::move(r));
  }
  return cert;
}

CoincidenceCertificate verify_classifier_coincidence(const CubicGraph& g) {
  require_snark(g, "verify_classifier_coincidence");
  CoincidenceCertificate cert;

  auto start = std::chrono::steady_clock::now();
  cert.critical = critical_unchecked(g);
  cert.bicritical = bicritical_unchecked(g);
  cert.coloring_path_micros = micros_since(start);

  start = std::chrono::steady_clock::now();
  cert.four_edge_critical = four_edge_critical_unchecked(g);
  cert.four_vertex_critical = four_vertex_critical_unchecked(g);
  cert.flow_path_micros = micros_since(start);
  return cert;
}

ClassificationRecord classify(const CubicGraph& g, std::size_t graph_index) {
  ClassificationRecord rec;
  rec.graph_index = graph_index;
  rec.order = g.order();
  rec.girth = girth(g);
  if (g.order() > 0 && g.is_cubic() && g.dangling_count() == 0 && is_connected(g))
    rec.cyclic_edge_connectivity = cyclic_edge_connectivity(g);

  const SnarkVerdict verdict = snark_verdict(g);
  rec.is_snark = verdict.snark;
  if (!verdict.snark) {
    rec.refusal = verdict.reason;
    return rec;
  }

  const CoincidenceCertificate cert = verify_classifier_coincidence(g);
  rec.is_critical = cert.critical;
  rec.is_bicritical = cert.bicritical;
  rec.is_strictly_critical = cert.critical && !cert.bicritical;
  rec.is_4_edge_critical = cert.four_edge_critical;
  rec.is_4_vertex_critical = cert.four_vertex_critical;
  rec.coloring_path_micros = cert.coloring_path_micros;
  rec.flow_path_micros = cert.flow_path_micros;
  rec.is_strong = is_strong(g);
  return rec;
}

}  // namespace snarkcrit
