#include <algorithm>
#include <istream>

#include "snarkcrit/io.hpp"

namespace snarkcrit {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int chunk(std::string_view s, std::size_t pos) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte " + std::to_string(c) + " outside the graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

CorpusError::CorpusError(const ParseError& cause, std::size_t line)
    : ParseError(std::string("line ") + std::to_string(line) + ": " + cause.what(),
                 cause.offset()),
      line_(line) {}

CubicGraph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string", 0);
  if (line.front() == ':' || line.front() == '&')
    throw ParseError("sparse6 and digraph6 are not supported", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = chunk(line, 0);
    pos = 1;
  } else {
    const bool wide = line.size() > 1 && line[1] == '~';
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (line.size() < start + digits) throw ParseError("truncated order header", line.size());
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | chunk(line, start + i);
    pos = start + digits;
  }

  if (n > (1 << 20)) throw ParseError("order " + std::to_string(n) + " is too large", 0);
  const long long bits = n * (n - 1) / 2;
  const auto bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < bytes) throw ParseError("truncated adjacency bit-vector", line.size());
  if (line.size() - pos > bytes) throw ParseError("trailing bytes after graph6 data", pos + bytes);

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if (chunk(line, at) & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  if (bytes > 0) {
    const std::size_t last = pos + bytes - 1;
    const int used = static_cast<int>(bits - static_cast<long long>(bytes - 1) * 6);
    if (chunk(line, last) & ((1 << (6 - used)) - 1))
      throw ParseError("non-zero padding bits", last);
  }
  return CubicGraph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const CubicGraph& g) {
  if (!g.is_simple()) throw UnsupportedError("graph6 can only encode simple graphs");
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }

  std::vector<bool> bits(static_cast<std::size_t>(n * (n - 1) / 2), false);
  for (const Edge& e : g.edges()) {
    const long long i = std::min(e.a, e.b);
    const long long j = std::max(e.a, e.b);
    bits[static_cast<std::size_t>(j * (j - 1) / 2 + i)] = true;
  }
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t t = 0; t < 6; ++t)
      value = (value << 1) | (k + t < bits.size() && bits[k + t] ? 1 : 0);
    out.push_back(static_cast<char>(value + kBias));
  }
  return out;
}

std::vector<CorpusEntry> read_corpus(std::istream& in, const std::string& source) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({number, line, parse_graph6(line), source});
    } catch (const ParseError& err) {
      throw CorpusError(err, number);
    }
  }
  return out;
}

}  // namespace snarkcrit
