#pragma once

// graph6 corpus ingestion, named graph constructors and report serialization.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snarkcrit/criticality.hpp"
#include "snarkcrit/graph.hpp"

namespace snarkcrit {

// Malformed graph6 input. offset() is the byte position of the problem
// within the (header-stripped) line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A corpus line that failed to parse; line() is 1-based.
class CorpusError : public ParseError {
 public:
  CorpusError(const ParseError& cause, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised for graphs the requested encoding cannot express.
class UnsupportedError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Parses one graph6 line (an optional ">>graph6<<" prefix and trailing
// whitespace are accepted). Edges come out in upper-triangle column order.
CubicGraph parse_graph6(std::string_view line);

// Header-less graph6 encoding. Throws UnsupportedError unless g is simple.
std::string encode_graph6(const CubicGraph& g);

struct CorpusEntry {
  std::size_t line_number = 0;
  std::string text;
  CubicGraph graph;
  std::string source;
};

// Reads one graph per non-empty line. Throws CorpusError at the first bad line.
std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source);

enum class NamedGraph { kDumbbell, kPetersen, kTheta, kK4, kFlower, kBlanusa1, kBlanusa2 };

// `parameter` is the number of spokes for kFlower (odd, >= 5) and ignored otherwise.
CubicGraph make_named(NamedGraph name, int parameter = 0);

// Accepts "dumbbell", "petersen", "theta", "k4", "blanusa1", "blanusa2",
// and "flower5", "flower:5" or "j5" style flower snark names.
CubicGraph make_named(std::string_view name);

std::vector<std::string> named_graph_examples();

enum class RecordFormat { kCsv, kJsonl };

// Fixed column order, shared by the CSV header and the JSON field order.
std::span<const std::string_view> record_columns();

// One CSV row or JSON object per record, in the given order. Refused or
// undefined values are empty in CSV and null in JSON; an infinite girth is
// written as "inf". With include_timings false both timing columns are 0.
std::string write_records(std::span<const ClassificationRecord> records, RecordFormat format,
                          bool include_timings = true);

}  // namespace snarkcrit
