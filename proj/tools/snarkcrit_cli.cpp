// snarkcrit: batch classification and theorem checks over graph6 corpora.
//
//   snarkcrit --named petersen --command classify
//   snarkcrit --input snarks.g6 --command stats --jobs 8 --max-order 28
//
// Exit codes: 0 ok, 1 usage, 2 unreadable input, 3 parse error,
// 4 equivalence violation (always a defect in this tool).

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "snarkcrit/snarkcrit.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitUnreadable = 2;
constexpr int kExitParse = 3;
constexpr int kExitViolation = 4;

struct GraphDeleter {
  void operator()(snk_graph* g) const { snk_graph_free(g); }
};
using GraphPtr = std::unique_ptr<snk_graph, GraphDeleter>;

struct Input {
  std::size_t index;  // position among the graphs of the input
  std::size_t line;   // 0 for named graphs
  GraphPtr graph;
};

struct RunConfig {
  std::string input;
  std::string named;
  std::string command = "classify";
  int jobs = 1;
  std::string format = "csv";
  int max_order = -1;
  bool fail_fast = false;
  bool timings = true;
};

// Per-graph outcome of one command; exactly one payload is meaningful.
struct Outcome {
  bool done = false;
  bool refused = false;  // not a snark, the theorem checks do not apply
  bool violation = false;
  std::string error;
  snk_record record{};
  snk_local_certificate local{};
  snk_coincidence_certificate coincidence{};
  snk_strong_certificate strong{};
};

const char* yes_no(int v) { return v > 0 ? "true" : "false"; }

Outcome evaluate(const RunConfig& cfg, const Input& in) {
  Outcome out;
  out.done = true;
  const snk_graph* g = in.graph.get();
  snk_status status = SNK_OK;
  if (cfg.command == "classify" || cfg.command == "stats") {
    status = snk_classify(g, in.index, &out.record);
  } else if (cfg.command == "verify-local") {
    status = snk_verify_local(g, &out.local);
    out.violation = status == SNK_OK && out.local.first_bad_u >= 0;
  } else if (cfg.command == "verify-coincidence") {
    status = snk_verify_coincidence(g, &out.coincidence);
    out.violation = status == SNK_OK && !out.coincidence.holds;
  } else if (cfg.command == "verify-strong") {
    status = snk_verify_strong(g, &out.strong);
    out.violation = status == SNK_OK && !out.strong.agree;
  }
  if (status == SNK_ERR_PRECONDITION) {
    out.refused = true;
  } else if (status == SNK_ERR_CONSISTENCY) {
    out.violation = true;
    out.error = snk_last_error();
  } else if (status != SNK_OK) {
    out.error = snk_last_error();
  }
  return out;
}

// Dynamic scheduling over inputs; results land in input order.
std::vector<Outcome> run_all(const RunConfig& cfg, const std::vector<Input>& inputs) {
  std::vector<Outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  const auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      results[i] = evaluate(cfg, inputs[i]);
      if (cfg.fail_fast && (results[i].violation || !results[i].error.empty())) stop = true;
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(inputs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

void emit_row(std::ostream& os, bool csv, const std::vector<std::pair<std::string, std::string>>& row,
              bool quote_strings) {
  if (csv) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].second;
  } else {
    os << '{';
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& v = row[i].second;
      const bool literal = v == "true" || v == "false" || v == "null" ||
                           (!v.empty() && v.find_first_not_of("-0123456789") == std::string::npos);
      os << (i ? "," : "") << '"' << row[i].first << "\":";
      if (literal || !quote_strings)
        os << v;
      else
        os << '"' << v << '"';
    }
    os << '}';
  }
  os << '\n';
}

void emit_header(std::ostream& os, bool csv, const std::vector<std::string>& names) {
  if (!csv) return;
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << '\n';
}

int report(const RunConfig& cfg, const std::vector<Input>& inputs,
           const std::vector<Outcome>& results) {
  const bool csv = cfg.format == "csv";
  int exit_code = 0;
  std::size_t violations = 0, refused = 0, checked = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& r = results[i];
    if (!r.done) continue;
    if (r.violation) ++violations;
    if (r.refused) ++refused;
    if (!r.error.empty()) {
      std::cerr << "graph " << inputs[i].index;
      if (inputs[i].line) std::cerr << " (line " << inputs[i].line << ")";
      std::cerr << ": " << r.error << '\n';
      if (!r.violation) exit_code = std::max(exit_code, 1);
    }
    ++checked;
  }
  if (violations > 0) exit_code = kExitViolation;

  if (cfg.command == "classify") {
    std::vector<snk_record> records;
    for (const Outcome& r : results)
      if (r.done && r.error.empty()) records.push_back(r.record);
    char* text = nullptr;
    size_t length = 0;
    if (snk_write_records(records.data(), records.size(),
                          csv ? SNK_FORMAT_CSV : SNK_FORMAT_JSONL, cfg.timings ? 1 : 0, &text,
                          &length) != SNK_OK) {
      std::cerr << "cannot write records: " << snk_last_error() << '\n';
      return kExitUsage;
    }
    std::fwrite(text, 1, length, stdout);
    std::fflush(stdout);
    snk_string_free(text);
  } else if (cfg.command == "stats") {
    struct Totals {
      long graphs = 0, snarks = 0, critical = 0, bicritical = 0, strictly = 0, edge4 = 0,
           vertex4 = 0, strong = 0;
    };
    std::map<int, Totals> by_order;
    Totals all;
    for (const Outcome& r : results) {
      if (!r.done || !r.error.empty()) continue;
      const snk_record& x = r.record;
      for (Totals* t : {&by_order[x.order], &all}) {
        ++t->graphs;
        t->snarks += x.is_snark == 1;
        t->critical += x.is_critical == 1;
        t->bicritical += x.is_bicritical == 1;
        t->strictly += x.is_strictly_critical == 1;
        t->edge4 += x.is_4_edge_critical == 1;
        t->vertex4 += x.is_4_vertex_critical == 1;
        t->strong += x.is_strong == 1;
      }
    }
    emit_header(std::cout, csv,
                {"order", "graphs", "snarks", "critical", "bicritical", "strictly_critical",
                 "four_edge_critical", "four_vertex_critical", "strong"});
    const auto row = [&](const std::string& order, const Totals& t) {
      emit_row(std::cout, csv,
               {{"order", order},
                {"graphs", std::to_string(t.graphs)},
                {"snarks", std::to_string(t.snarks)},
                {"critical", std::to_string(t.critical)},
                {"bicritical", std::to_string(t.bicritical)},
                {"strictly_critical", std::to_string(t.strictly)},
                {"four_edge_critical", std::to_string(t.edge4)},
                {"four_vertex_critical", std::to_string(t.vertex4)},
                {"strong", std::to_string(t.strong)}},
               true);
    };
    for (const auto& [order, t] : by_order) row(std::to_string(order), t);
    row("all", all);
  } else if (cfg.command == "verify-local") {
    emit_header(std::cout, csv,
                {"graph_index", "order", "pairs", "adjacent_pairs", "consistent_pairs",
                 "degenerate_pairs", "status"});
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Outcome& r = results[i];
      if (!r.done || !r.error.empty()) continue;
      const auto& c = r.local;
      const std::string status = r.refused ? "refused" : r.violation ? "violation" : "consistent";
      emit_row(std::cout, csv,
               {{"graph_index", std::to_string(inputs[i].index)},
                {"order", std::to_string(snk_graph_order(inputs[i].graph.get()))},
                {"pairs", std::to_string(c.pairs)},
                {"adjacent_pairs", std::to_string(c.adjacent_pairs)},
                {"consistent_pairs", std::to_string(c.consistent_pairs)},
                {"degenerate_pairs", std::to_string(c.degenerate_pairs)},
                {"status", status}},
               true);
    }
  } else if (cfg.command == "verify-coincidence") {
    emit_header(std::cout, csv,
                {"graph_index", "order", "critical", "four_edge_critical", "bicritical",
                 "four_vertex_critical", "status", "coloring_path_micros", "flow_path_micros"});
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Outcome& r = results[i];
      if (!r.done || !r.error.empty()) continue;
      const auto& c = r.coincidence;
      const std::string status = r.refused ? "refused" : r.violation ? "violation" : "holds";
      const auto b = [&](int8_t v) { return r.refused ? std::string(csv ? "" : "null") : yes_no(v); };
      emit_row(std::cout, csv,
               {{"graph_index", std::to_string(inputs[i].index)},
                {"order", std::to_string(snk_graph_order(inputs[i].graph.get()))},
                {"critical", b(c.critical)},
                {"four_edge_critical", b(c.four_edge_critical)},
                {"bicritical", b(c.bicritical)},
                {"four_vertex_critical", b(c.four_vertex_critical)},
                {"status", status},
                {"coloring_path_micros", std::to_string(cfg.timings ? c.coloring_path_micros : 0)},
                {"flow_path_micros", std::to_string(cfg.timings ? c.flow_path_micros : 0)}},
               true);
    }
  } else if (cfg.command == "verify-strong") {
    emit_header(std::cout, csv,
                {"graph_index", "order", "strong_via_suppression", "strong_via_pairs",
                 "non_suppressible_edges", "status"});
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Outcome& r = results[i];
      if (!r.done || !r.error.empty()) continue;
      const auto& c = r.strong;
      const std::string status = r.refused ? "refused" : r.violation ? "violation" : "agree";
      const auto b = [&](int8_t v) { return r.refused ? std::string(csv ? "" : "null") : yes_no(v); };
      emit_row(std::cout, csv,
               {{"graph_index", std::to_string(inputs[i].index)},
                {"order", std::to_string(snk_graph_order(inputs[i].graph.get()))},
                {"strong_via_suppression", b(c.via_suppression)},
                {"strong_via_pairs", b(c.via_pairs)},
                {"non_suppressible_edges", std::to_string(c.non_suppressible_edges)},
                {"status", status}},
               true);
    }
  }

  std::cerr << cfg.command << ": " << checked << " graph(s)";
  if (refused) std::cerr << ", " << refused << " refused (not snarks)";
  std::cerr << ", " << violations << " violation(s)\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app("Classify snarks by colouring and flow criticality");
  auto* input = app.add_option("--input", cfg.input, "graph6 file, one graph per line ('-' for stdin)");
  auto* named = app.add_option("--named", cfg.named,
                               "named graph: dumbbell, petersen, theta, k4, flowerK, blanusa1, blanusa2");
  input->excludes(named);
  named->excludes(input);
  app.add_option("--command", cfg.command, "what to run")
      ->check(CLI::IsMember({"classify", "verify-local", "verify-coincidence", "verify-strong",
                             "stats"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--max-order", cfg.max_order, "skip graphs with more vertices")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--fail-fast", cfg.fail_fast, "stop at the first violation");
  bool no_timings = false;
  app.add_flag("--no-timings", no_timings, "write 0 in the timing columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  cfg.timings = !no_timings;
  if (cfg.input.empty() == cfg.named.empty()) {
    std::cerr << "exactly one of --input or --named is required\n";
    return kExitUsage;
  }

  std::vector<Input> inputs;
  if (!cfg.named.empty()) {
    snk_graph* g = nullptr;
    if (snk_graph_named(cfg.named.c_str(), &g) != SNK_OK) {
      std::cerr << snk_last_error() << '\n';
      return kExitUsage;
    }
    inputs.push_back({0, 0, GraphPtr(g)});
  } else {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.input != "-") {
      file.open(cfg.input);
      if (!file) {
        std::cerr << "cannot read " << cfg.input << '\n';
        return kExitUnreadable;
      }
      in = &file;
    }
    std::string line;
    std::size_t number = 0, index = 0;
    while (std::getline(*in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      snk_graph* g = nullptr;
      size_t offset = 0;
      if (snk_graph_from_graph6(line.c_str(), &g, &offset) != SNK_OK) {
        std::cerr << cfg.input << ":" << number << ": " << snk_last_error() << "\n  " << line
                  << '\n';
        return kExitParse;
      }
      GraphPtr owned(g);
      const std::size_t my_index = index++;
      if (cfg.max_order >= 0 && snk_graph_order(g) > cfg.max_order) continue;
      inputs.push_back({my_index, number, std::move(owned)});
    }
    if (in->bad()) {
      std::cerr << "error while reading " << cfg.input << '\n';
      return kExitUnreadable;
    }
  }

  const std::vector<Outcome> results = run_all(cfg, inputs);
  return report(cfg, inputs, results);
}
