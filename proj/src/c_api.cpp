#include "snarkcrit/snarkcrit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "snarkcrit/criticality.hpp"
#include "snarkcrit/graph.hpp"
#include "snarkcrit/io.hpp"

struct snk_graph {
  snarkcrit::CubicGraph graph;
};

namespace {

thread_local std::string last_error;

snk_status fail(snk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body and converts library exceptions into status codes.
template <typename Body>
snk_status guarded(Body&& body) {
  try {
    return body();
  } catch (const snarkcrit::ParseError& e) {
    return fail(SNK_ERR_PARSE, e.what());
  } catch (const snarkcrit::UnsupportedError& e) {
    return fail(SNK_ERR_UNSUPPORTED, e.what());
  } catch (const snarkcrit::GraphError& e) {
    return fail(SNK_ERR_GRAPH, e.what());
  } catch (const snarkcrit::PreconditionError& e) {
    return fail(SNK_ERR_PRECONDITION, e.what());
  } catch (const snarkcrit::ConsistencyError& e) {
    return fail(SNK_ERR_CONSISTENCY, e.what());
  } catch (const std::exception& e) {
    return fail(SNK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SNK_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int8_t tri(const std::optional<bool>& b) {
  if (!b) return SNK_UNDEFINED;
  return *b ? 1 : 0;
}

std::optional<bool> untri(int8_t x) {
  if (x < 0) return std::nullopt;
  return x != 0;
}

std::optional<int> unopt(int32_t x) {
  if (x < 0) return std::nullopt;
  return x;
}

snk_record to_c(const snarkcrit::ClassificationRecord& r) {
  snk_record out{};
  out.graph_index = r.graph_index;
  out.order = r.order;
  out.is_snark = r.is_snark ? 1 : 0;
  out.girth = r.girth ? *r.girth : SNK_UNDEFINED;
  out.cyclic_edge_connectivity = r.cyclic_edge_connectivity ? *r.cyclic_edge_connectivity
                                                            : SNK_UNDEFINED;
  out.is_critical = tri(r.is_critical);
  out.is_bicritical = tri(r.is_bicritical);
  out.is_strictly_critical = tri(r.is_strictly_critical);
  out.is_4_edge_critical = tri(r.is_4_edge_critical);
  out.is_4_vertex_critical = tri(r.is_4_vertex_critical);
  out.is_strong = tri(r.is_strong);
  out.coloring_path_micros = r.coloring_path_micros;
  out.flow_path_micros = r.flow_path_micros;
  return out;
}

snarkcrit::ClassificationRecord from_c(const snk_record& r) {
  snarkcrit::ClassificationRecord out;
  out.graph_index = r.graph_index;
  out.order = r.order;
  out.is_snark = r.is_snark == 1;
  out.girth = unopt(r.girth);
  out.cyclic_edge_connectivity = unopt(r.cyclic_edge_connectivity);
  out.is_critical = untri(r.is_critical);
  out.is_bicritical = untri(r.is_bicritical);
  out.is_strictly_critical = untri(r.is_strictly_critical);
  out.is_4_edge_critical = untri(r.is_4_edge_critical);
  out.is_4_vertex_critical = untri(r.is_4_vertex_critical);
  out.is_strong = untri(r.is_strong);
  out.coloring_path_micros = static_cast<long>(r.coloring_path_micros);
  out.flow_path_micros = static_cast<long>(r.flow_path_micros);
  return out;
}

snk_status wrap(snarkcrit::CubicGraph g, snk_graph** out) {
  *out = new snk_graph{std::move(g)};
  return SNK_OK;
}

}  // namespace

extern "C" {

const char* snk_last_error(void) { return last_error.c_str(); }

const char* snk_version(void) { return "0.1.0"; }

snk_status snk_graph_from_graph6(const char* text, snk_graph** out, size_t* error_offset) {
  if (!text || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  try {
    return wrap(snarkcrit::parse_graph6(text), out);
  } catch (const snarkcrit::ParseError& e) {
    if (error_offset) *error_offset = e.offset();
    return fail(SNK_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(SNK_ERR_INTERNAL, e.what());
  }
}

snk_status snk_graph_named(const char* name, snk_graph** out) {
  if (!name || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap(snarkcrit::make_named(name), out); });
}

snk_status snk_graph_from_edges(int32_t vertex_count, const int32_t* endpoints,
                                size_t edge_count, snk_graph** out) {
  if (!out || (edge_count > 0 && !endpoints))
    return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<snarkcrit::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    return wrap(snarkcrit::CubicGraph(vertex_count, std::move(edges)), out);
  });
}

void snk_graph_free(snk_graph* graph) { delete graph; }

int32_t snk_graph_order(const snk_graph* graph) { return graph ? graph->graph.order() : -1; }

int32_t snk_graph_size(const snk_graph* graph) { return graph ? graph->graph.size() : -1; }

snk_status snk_graph_to_graph6(const snk_graph* graph, char** out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(snarkcrit::encode_graph6(graph->graph));
    return *out ? SNK_OK : fail(SNK_ERR_INTERNAL, "out of memory");
  });
}

snk_status snk_graph_expand_triangle(const snk_graph* graph, int32_t vertex, snk_graph** out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap(snarkcrit::expand_triangle(graph->graph, vertex), out); });
}

void snk_string_free(char* text) { std::free(text); }

int snk_is_snark(const snk_graph* graph) {
  if (!graph) return -fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  int result = 0;
  const snk_status status = guarded([&] {
    result = snarkcrit::is_snark(graph->graph) ? 1 : 0;
    return SNK_OK;
  });
  return status == SNK_OK ? result : -static_cast<int>(status);
}

snk_status snk_classify(const snk_graph* graph, uint64_t graph_index, snk_record* out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = to_c(snarkcrit::classify(graph->graph, graph_index));
    return SNK_OK;
  });
}

snk_status snk_verify_local(const snk_graph* graph, snk_local_certificate* out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const snarkcrit::LocalCertificate cert = snarkcrit::verify_theorem_local(graph->graph);
    snk_local_certificate c{};
    c.pairs = cert.pairs.size();
    c.consistent_pairs = cert.consistent_pairs;
    c.degenerate_pairs = cert.degenerate_pairs;
    for (const auto& p : cert.pairs) c.adjacent_pairs += p.adjacent ? 1 : 0;
    c.first_bad_u = cert.disagreements.empty() ? -1 : cert.disagreements.front().u();
    c.first_bad_v = cert.disagreements.empty() ? -1 : cert.disagreements.front().v();
    *out = c;
    return SNK_OK;
  });
}

snk_status snk_verify_coincidence(const snk_graph* graph, snk_coincidence_certificate* out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cert = snarkcrit::verify_classifier_coincidence(graph->graph);
    snk_coincidence_certificate c{};
    c.critical = cert.critical;
    c.four_edge_critical = cert.four_edge_critical;
    c.bicritical = cert.bicritical;
    c.four_vertex_critical = cert.four_vertex_critical;
    c.holds = cert.holds();
    c.coloring_path_micros = cert.coloring_path_micros;
    c.flow_path_micros = cert.flow_path_micros;
    *out = c;
    return SNK_OK;
  });
}

snk_status snk_verify_strong(const snk_graph* graph, snk_strong_certificate* out) {
  if (!graph || !out) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = snarkcrit::strong_report(graph->graph);
    snk_strong_certificate c{};
    c.via_suppression = report.via_suppression;
    c.via_pairs = report.via_pairs;
    c.agree = report.agree();
    c.non_suppressible_edges = report.non_suppressible.size();
    *out = c;
    return SNK_OK;
  });
}

snk_status snk_write_records(const snk_record* records, size_t count, snk_format format,
                             int include_timings, char** out, size_t* length) {
  if (!out || (count > 0 && !records)) return fail(SNK_ERR_INVALID_ARGUMENT, "null argument");
  if (format != SNK_FORMAT_CSV && format != SNK_FORMAT_JSONL)
    return fail(SNK_ERR_INVALID_ARGUMENT, "unknown record format");
  return guarded([&] {
    std::vector<snarkcrit::ClassificationRecord> recs;
    recs.reserve(count);
    for (size_t i = 0; i < count; ++i) recs.push_back(from_c(records[i]));
    const std::string text = snarkcrit::write_records(
        recs, format == SNK_FORMAT_CSV ? snarkcrit::RecordFormat::kCsv
                                       : snarkcrit::RecordFormat::kJsonl,
        include_timings != 0);
    *out = copy_string(text);
    if (!*out) return fail(SNK_ERR_INTERNAL, "out of memory");
    if (length) *length = text.size();
    return SNK_OK;
  });
}

}  // extern "C"
