#include <array>
#include <sstream>

#include <json.hpp>

#include "snarkcrit/io.hpp"

namespace snarkcrit {

namespace {

constexpr std::array<std::string_view, 13> kColumns = {
    "graph_index",          "order",
    "is_snark",             "girth",
    "cyclic_edge_connectivity", "is_critical",
    "is_bicritical",        "is_strictly_critical",
    "is_4_edge_critical",   "is_4_vertex_critical",
    "is_strong",            "coloring_path_micros",
    "flow_path_micros"};

std::string csv_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

nlohmann::ordered_json json_bool(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

nlohmann::ordered_json json_int(const std::optional<int>& x) {
  if (!x) return nullptr;
  return *x;
}

}  // namespace

std::span<const std::string_view> record_columns() { return kColumns; }

std::string write_records(std::span<const ClassificationRecord> records, RecordFormat format,
                          bool include_timings) {
  std::ostringstream out;
  if (format == RecordFormat::kCsv) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
  }
  for (const ClassificationRecord& r : records) {
    const long coloring = include_timings ? r.coloring_path_micros : 0;
    const long flow = include_timings ? r.flow_path_micros : 0;
    if (format == RecordFormat::kCsv) {
      out << r.graph_index << ',' << r.order << ',' << (r.is_snark ? "true" : "false") << ','
          << (r.girth ? std::to_string(*r.girth) : std::string("inf")) << ','
          << (r.cyclic_edge_connectivity ? std::to_string(*r.cyclic_edge_connectivity) : "")
          << ',' << csv_bool(r.is_critical) << ',' << csv_bool(r.is_bicritical) << ','
          << csv_bool(r.is_strictly_critical) << ',' << csv_bool(r.is_4_edge_critical) << ','
          << csv_bool(r.is_4_vertex_critical) << ',' << csv_bool(r.is_strong) << ',' << coloring
          << ',' << flow << '\n';
    } else {
      nlohmann::ordered_json j;
      j["graph_index"] = r.graph_index;
      j["order"] = r.order;
      j["is_snark"] = r.is_snark;
      j["girth"] = r.girth ? nlohmann::ordered_json(*r.girth) : nlohmann::ordered_json("inf");
      j["cyclic_edge_connectivity"] = json_int(r.cyclic_edge_connectivity);
      j["is_critical"] = json_bool(r.is_critical);
      j["is_bicritical"] = json_bool(r.is_bicritical);
      j["is_strictly_critical"] = json_bool(r.is_strictly_critical);
      j["is_4_edge_critical"] = json_bool(r.is_4_edge_critical);
      j["is_4_vertex_critical"] = json_bool(r.is_4_vertex_critical);
      j["is_strong"] = json_bool(r.is_strong);
      j["coloring_path_micros"] = coloring;
      j["flow_path_micros"] = flow;
      out << j.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace snarkcrit
