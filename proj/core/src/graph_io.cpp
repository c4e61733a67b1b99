#include "locdom/graph_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 16384;  // implementation limit for long-form headers

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  fail(Err::kParse, "graph6: " + what + " at byte " + std::to_string(offset));
}

int payload_at(std::string_view text, size_t i) {
  if (i >= text.size()) parse_fail(i, "truncated record");
  unsigned char c = text[i];
  if (c < kBias || c > 126) parse_fail(i, "byte outside the printable range");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) parse_fail(0, "empty record");

  size_t pos = 0;
  long long n;
  if (payload_at(text, 0) < 63) {
    n = payload_at(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    // '~~' + 36-bit order
    n = 0;
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | payload_at(text, i);
    if (n < 258048) parse_fail(0, "order encoded with an oversized header");
    pos = 8;
  } else {
    // '~' + 18-bit order
    n = 0;
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | payload_at(text, i);
    if (n < 63) parse_fail(0, "order encoded with an oversized header");
    pos = 4;
  }
  if (n > kMaxOrder)
    fail(Err::kCapExceeded, "graph6: order " + std::to_string(n) + " exceeds the supported limit " +
                                std::to_string(kMaxOrder));

  long long nbits = n * (n - 1) / 2;
  size_t want = pos + static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != want)
    parse_fail(text.size() < want ? text.size() : want,
               text.size() < want ? "truncated record" : "trailing bytes");

  std::vector<Edge> edges;
  long long bit = 0;
  int word = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit % 6 == 0) word = payload_at(text, pos + bit / 6);
      if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (nbits % 6 != 0) {
    int pad_bits = static_cast<int>(6 - nbits % 6);
    int last = payload_at(text, text.size() - 1);
    if (last & ((1 << pad_bits) - 1)) parse_fail(text.size() - 1, "nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    fail(Err::kCapExceeded, "graph6: order too large to emit");
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long n = -1;
  std::vector<Edge> edges;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    if (n < 0) {
      if (row >> n) {
        if (n < 0 || n > kMaxOrder)
          fail(Err::kParse, "edge list: bad order on line " + std::to_string(lineno));
        long long extra;
        if (row >> extra) fail(Err::kParse, "edge list: extra tokens on the header line");
      } else if (!row.eof() || !line.empty()) {
        std::string tok;
        std::istringstream probe(line);
        if (probe >> tok)
          fail(Err::kParse, "edge list: expected an order header on line " + std::to_string(lineno));
      }
      continue;
    }
    long long u, v;
    if (row >> u) {
      if (!(row >> v)) fail(Err::kParse, "edge list: lone endpoint on line " + std::to_string(lineno));
      long long extra;
      if (row >> extra) fail(Err::kParse, "edge list: extra tokens on line " + std::to_string(lineno));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      std::string tok;
      std::istringstream probe(line);
      if (probe >> tok)
        fail(Err::kParse, "edge list: malformed pair on line " + std::to_string(lineno));
    }
  }
  if (n < 0) fail(Err::kParse, "edge list: missing order header");
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

Graph read_graph_auto(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) fail(Err::kParse, "empty graph input");
  // Edge lists open with a comment or a decimal header; digits are below the
  // graph6 byte range so the two cannot collide.
  if (text[i] == '#' || std::isdigit(static_cast<unsigned char>(text[i])))
    return parse_edge_list(text);
  size_t eol = text.find('\n', i);
  return parse_graph6(std::string_view(text).substr(i, eol == std::string::npos ? eol : eol - i));
}

}  // namespace locdom
