// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "snarkcrit/coloring.hpp"
#include "snarkcrit/criticality.hpp"
#include "snarkcrit/flows.hpp"
#include "snarkcrit/io.hpp"
#include "snarkcrit/structure.hpp"

using namespace snarkcrit;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, bool pass, const std::string& what) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << "  " << what << std::endl;
  if (!pass) ++failures;
}

std::vector<CorpusEntry> load_corpus() {
  std::ifstream in(SNK_CORPUS);
  if (!in) throw std::runtime_error("cannot open " SNK_CORPUS);
  return read_corpus(in, SNK_CORPUS);
}

std::vector<std::pair<std::string, CubicGraph>> smoke_set() {
  std::vector<std::pair<std::string, CubicGraph>> out;
  for (const char* name : {"petersen", "blanusa1", "blanusa2", "flower5", "flower7"})
    out.emplace_back(name, make_named(name));
  return out;
}

// Criterion 1.
void local_statements() {
  const auto start = Clock::now();
  std::size_t pairs = 0, agree = 0;
  std::string bad;
  for (const auto& [name, g] : smoke_set()) {
    const LocalCertificate cert = verify_theorem_local(g);
    pairs += cert.pairs.size();
    agree += cert.consistent_pairs;
    if (!cert.all_consistent()) bad += " " + name;
  }
  const double t = seconds_since(start);
  std::ostringstream msg;
  msg << "local statements agree on " << agree << "/" << pairs << " pairs of the smoke set ("
      << t << " s)" << (bad.empty() ? "" : "; disagreement in" + bad);
  report(1, bad.empty() && agree == pairs && t < 60, msg.str());
}

// Criterion 2.
void coincidence(const std::vector<CorpusEntry>& corpus) {
  const auto start = Clock::now();
  std::size_t checked = 0, disagreements = 0;
  long coloring_us = 0, flow_us = 0;
  auto run = [&](const CubicGraph& g) {
    const CoincidenceCertificate c = verify_classifier_coincidence(g);
    ++checked;
    if (!c.holds()) ++disagreements;
    coloring_us += c.coloring_path_micros;
    flow_us += c.flow_path_micros;
  };
  for (const auto& [name, g] : smoke_set()) run(g);
  for (const CorpusEntry& e : corpus)
    if (e.graph.order() <= 26) run(e.graph);
  const double t = seconds_since(start);
  std::ostringstream msg;
  msg << "critical == 4-edge-critical and bicritical == 4-vertex-critical on " << checked
      << " graphs, " << disagreements << " disagreements (" << t << " s; colouring path "
      << coloring_us / 1000 << " ms, flow path " << flow_us / 1000 << " ms)";
  report(2, disagreements == 0 && t < 1800, msg.str());
}

// Criteria 3 and 4 share one classification pass over the whole corpus.
void corpus_counts(const std::vector<ClassificationRecord>& records) {
  std::size_t snarks = 0, critical = 0, bicritical = 0, strictly = 0, bad_structure = 0;
  int max_order = 0;
  for (const ClassificationRecord& r : records) {
    max_order = std::max(max_order, r.order);
    if (!r.is_snark) continue;
    ++snarks;
    if (r.is_critical == true) {
      ++critical;
      if (r.girth.value_or(0) < 5 || r.cyclic_edge_connectivity.value_or(0) < 4) ++bad_structure;
    }
    if (r.is_bicritical == true) ++bicritical;
    if (r.is_strictly_critical == true) ++strictly;
  }
  std::ostringstream m3;
  m3 << "strictly critical snarks up to order " << max_order << ": " << strictly << " ("
     << snarks << " snarks, " << critical << " critical, " << bicritical << " bicritical)";
  report(3, strictly == 0 && snarks == records.size() && max_order <= 28, m3.str());

  std::ostringstream m4;
  m4 << critical << " critical corpus snarks, " << bad_structure
     << " with girth < 5 or cyclic connectivity < 4";
  report(4, bad_structure == 0, m4.str());
}

// Criterion 5.
void smoke_verdicts() {
  const CubicGraph p = make_named("petersen");
  const bool ok = is_snark(p) && is_bicritical(p) && is_snark(make_named("dumbbell")) &&
                  !is_snark(make_named("k4")) && !is_snark(make_named("theta"));
  report(5, ok, "Petersen snark and bicritical, dumbbell snark, K4 and theta not snarks");
}

// Criterion 6.
void strong(const std::vector<CorpusEntry>& corpus) {
  std::size_t checked = 0, disagreements = 0, strong_count = 0, expansions = 0, bad_expansions = 0;
  for (const CorpusEntry& e : corpus) {
    if (e.graph.order() > 26) continue;
    const StrongReport r = strong_report(e.graph);
    ++checked;
    if (!r.agree()) ++disagreements;
    if (!r.via_suppression || !r.agree()) continue;
    ++strong_count;
    for (VertexId v = 0; v < e.graph.order(); ++v) {
      ++expansions;
      const StrongReport x = strong_report(expand_triangle(e.graph, v));
      if (!x.agree() || !x.via_suppression) ++bad_expansions;
    }
  }
  std::ostringstream msg;
  msg << "strong via suppression == strong via adjacent pairs on " << checked << " graphs, "
      << disagreements << " disagreements; " << strong_count << " strong";
  if (strong_count == 0)
    msg << " (triangle-expansion clause vacuous: no strong snark up to order 26)";
  else
    msg << ", " << bad_expansions << "/" << expansions << " triangle expansions not strong";
  report(6, disagreements == 0 && bad_expansions == 0, msg.str());
}

// Criterion 7.
void random_oracle_agreement() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  int mismatches = 0, colorable = 0, full_enumerations = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    const int order = 4 + 2 * static_cast<int>(rng() % 6);  // 4..14
    const CubicGraph g = oracle::random_bridgeless_cubic(order, rng);
    const bool col = three_edge_colorable(g).has_value();
    const bool klein = nowhere_zero_flow(g, FlowGroup::kKlein).has_value();
    const bool z4 = nowhere_zero_flow(g, FlowGroup::kZ4).has_value();
    // Naive oracles: every colouring when small enough, otherwise plain
    // backtracking; flows by exhaustive cotree enumeration.
    bool naive_col;
    if (g.size() <= 15) {
      naive_col = oracle::enumerate_colorings(g);
      ++full_enumerations;
    } else {
      naive_col = oracle::backtrack_colorable(g);
    }
    const bool naive_klein = oracle::brute_force_flow(g, false);
    const bool naive_z4 = oracle::brute_force_flow(g, true);
    if (!(col == klein && klein == z4 && col == naive_col && klein == naive_klein &&
          z4 == naive_z4))
      ++mismatches;
    colorable += col;
  }
  const double t = seconds_since(start);
  std::ostringstream msg;
  msg << trials << " random bridgeless cubic graphs of order <= 14: " << mismatches
      << " mismatches between colouring, Z2xZ2, Z4 and naive oracles (" << colorable
      << " colourable, " << full_enumerations << " checked by full enumeration, " << t << " s)";
  report(7, mismatches == 0 && t < 600, msg.str());
}

// Criterion 8 cannot be run here; say so rather than pretend.
void census_note() {
  std::cout << "[N/A ] 8  order-36 census needs the full 36-vertex snark list; run "
               "`snarkcrit --input <list> --command stats --jobs N`. Criteria 2-4 cover order <= 28."
            << std::endl;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + SNK_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return status == 0 ? out : std::string();
}

// Criterion 9.
void determinism() {
  const std::string base = std::string("--input \"") + SNK_CORPUS + "\" --command classify --no-timings";
  const std::string one = run_cli(base + " --jobs 1");
  const std::string eight = run_cli(base + " --jobs 8");
  const std::string one_jsonl = run_cli(base + " --jobs 1 --format jsonl");
  const std::string eight_jsonl = run_cli(base + " --jobs 8 --format jsonl");
  const bool ok = !one.empty() && one == eight && !one_jsonl.empty() && one_jsonl == eight_jsonl;
  std::ostringstream msg;
  msg << "classify --jobs 1 and --jobs 8 byte-identical (csv " << one.size() << " bytes, jsonl "
      << one_jsonl.size() << " bytes, timing columns zeroed)";
  report(9, ok, msg.str());
}

}  // namespace

int main() {
  try {
    const std::vector<CorpusEntry> corpus = load_corpus();
    std::vector<ClassificationRecord> records;
    for (std::size_t i = 0; i < corpus.size(); ++i) records.push_back(classify(corpus[i].graph, i));

    local_statements();
    coincidence(corpus);
    corpus_counts(records);
    smoke_verdicts();
    strong(corpus);
    random_oracle_agreement();
    census_note();
    determinism();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures ? "FAILED " : "all criteria passed") << (failures ? std::to_string(failures) : "")
            << std::endl;
  return failures ? 1 : 0;
}
