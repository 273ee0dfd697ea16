#include <random>
#include <sstream>

#include "doctest.h"
#include <json.hpp>
#include "oracles.hpp"
#include "snarkcrit/criticality.hpp"
#include "snarkcrit/io.hpp"
#include "snarkcrit/isomorphism.hpp"
#include "snarkcrit/structure.hpp"

using namespace snarkcrit;

namespace {

// Straight from the format description, written independently of the library
// encoder: N(n) for n < 63, then the upper triangle column by column, 6 bits
// per byte with bias 63, zero padded.
std::string reference_graph6(const CubicGraph& g) {
  const int n = g.order();
  REQUIRE(n < 63);
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int t = 0; t < 6; ++t) x = (x << 1) | bits[k + t];
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 fixed encodings") {
  CHECK(encode_graph6(make_named("petersen")) == "IheA@GUAo");
  CHECK(encode_graph6(make_named("k4")) == "C~");
  CHECK(encode_graph6(CubicGraph(0, {})) == "?");
  CHECK(encode_graph6(CubicGraph(1, {})).size() == 1);
  CHECK_THROWS_AS(encode_graph6(make_named("theta")), UnsupportedError);
  CHECK_THROWS_AS(encode_graph6(make_named("dumbbell")), UnsupportedError);

  const CubicGraph empty = parse_graph6("?");
  CHECK(empty.order() == 0);
  CHECK(empty.size() == 0);
  CHECK(isomorphic(parse_graph6(">>graph6<<IheA@GUAo\n"), make_named("petersen")));
}

TEST_CASE("graph6 large orders use the long size headers") {
  const CubicGraph big(100, {{0, 99}});
  const std::string s = encode_graph6(big);
  CHECK(s[0] == '~');
  CHECK(isomorphic(parse_graph6(s), big));
}

TEST_CASE("graph6 round trip on random cubic graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 4 + 2 * static_cast<int>(rng() % 7);  // 4..16
    const CubicGraph g = oracle::random_simple_cubic(order, rng);
    const std::string text = encode_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(isomorphic(parse_graph6(text), g));
  }
}

TEST_CASE("graph6 errors carry offsets") {
  std::string corrupt = encode_graph6(make_named("petersen"));
  corrupt.back() = '~';  // sets the padding bits
  try {
    parse_graph6(corrupt);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == corrupt.size() - 1);
  }
  try {
    parse_graph6("IheA@G");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);  // sparse6
  CHECK_THROWS_AS(parse_graph6("&C~"), ParseError);     // digraph6
  CHECK_THROWS_AS(parse_graph6("I he"), ParseError);
  CHECK_THROWS_AS(parse_graph6("IheA@GUAoA"), ParseError);
}

TEST_CASE("corpus reading") {
  std::istringstream ok("IheA@GUAo\n\nC~\n");
  const auto entries = read_corpus(ok, "mem");
  REQUIRE(entries.size() == 2);
  CHECK(entries[1].line_number == 3);
  CHECK(entries[1].source == "mem");

  std::istringstream bad("IheA@GUAo\nIheA@GU\n");
  try {
    read_corpus(bad, "mem");
    FAIL("expected a corpus error");
  } catch (const CorpusError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("named constructors") {
  const auto d = make_named("dumbbell");
  CHECK(d.order() == 2);
  CHECK(d.size() == 3);
  const auto p = make_named(NamedGraph::kPetersen);
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(oracle::girth_by_edge_removal(p) == 5);
  const auto j5 = make_named(NamedGraph::kFlower, 5);
  CHECK(j5.order() == 20);
  CHECK(j5.size() == 30);
  CHECK_FALSE(oracle::backtrack_colorable(j5));
  CHECK(isomorphic(j5, make_named("flower:5")));
  CHECK(isomorphic(j5, make_named("j5")));
  CHECK_THROWS(make_named(NamedGraph::kFlower, 4));
  CHECK_THROWS(make_named(NamedGraph::kFlower, 3));
  CHECK_THROWS(make_named("heawood"));
  for (const std::string& name : named_graph_examples()) CHECK(make_named(name).is_cubic());
  for (const char* name : {"blanusa1", "blanusa2"}) {
    const auto b = make_named(name);
    CHECK(b.order() == 18);
    CHECK(b.is_simple());
    CHECK_FALSE(oracle::matching_colorable(b));
  }
}

TEST_CASE("records") {
  CHECK(write_records({}, RecordFormat::kCsv) ==
        "graph_index,order,is_snark,girth,cyclic_edge_connectivity,is_critical,is_bicritical,"
        "is_strictly_critical,is_4_edge_critical,is_4_vertex_critical,is_strong,"
        "coloring_path_micros,flow_path_micros\n");
  CHECK(write_records({}, RecordFormat::kJsonl).empty());

  std::vector<ClassificationRecord> recs{classify(make_named("petersen"), 0),
                                         classify(make_named("k4"), 1),
                                         classify(make_named("theta"), 2)};
  const std::string csv = write_records(recs, RecordFormat::kCsv, false);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line == "0,10,true,5,5,true,true,false,true,true,false,0,0");
  std::getline(lines, line);
  CHECK(line == "1,4,false,3,,,,,,,,0,0");
  std::getline(lines, line);
  CHECK(line.rfind("2,2,false,2,", 0) == 0);

  const std::string jsonl = write_records(recs, RecordFormat::kJsonl, false);
  std::istringstream js(jsonl);
  std::vector<nlohmann::json> objects;
  while (std::getline(js, line)) objects.push_back(nlohmann::json::parse(line));
  REQUIRE(objects.size() == 3);
  CHECK(objects[0]["is_bicritical"] == true);
  CHECK(objects[1]["is_critical"].is_null());
  CHECK(objects[2]["graph_index"] == 2);

  ClassificationRecord acyclic;
  acyclic.order = 3;
  CHECK(write_records(std::span(&acyclic, 1), RecordFormat::kCsv).find("3,false,inf,") !=
        std::string::npos);
}
