#include "lrw1/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace lrw1 {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError(1, "empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte outside 63..126");
  const int n = line[0] - 63;
  if (n > 62) throw ParseError(1, "graph6 long-form sizes are not supported");
  if (n > kMaxVertices) throw ParseError(1, "graph has " + std::to_string(n) + " vertices, limit is 32");
  const int bits = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected)
    throw ParseError(1, "graph6 length " + std::to_string(line.size()) + " does not match n=" + std::to_string(n));
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int group = line[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  const int pad = static_cast<int>(expected - 1) * 6 - bits;
  if (pad > 0 && ((line.back() - 63) & ((1 << pad) - 1))) throw ParseError(1, "graph6 padding bits are not zero");
  return g;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view field, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  return value;
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++number;
    if (!split_fields(line).empty()) out.push_back({number, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const auto header = split_fields(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
  const int n = to_int(header[0], lines[0].number);
  const int m = to_int(header[1], lines[0].number);
  if (n < 0 || n > kMaxVertices) throw ParseError(lines[0].number, "vertex count must be in 0..32");
  if (m < 0) throw ParseError(lines[0].number, "edge count must be non-negative");
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines, found " +
                                              std::to_string(lines.size() - 1));
  Graph g(n);
  for (int e = 1; e <= m; ++e) {
    const auto fields = split_fields(lines[e].text);
    if (fields.size() != 2) throw ParseError(lines[e].number, "edge line must be 'u v'");
    const int u = to_int(fields[0], lines[e].number);
    const int v = to_int(fields[1], lines[e].number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lines[e].number, "endpoint out of range");
    if (u == v) throw ParseError(lines[e].number, "loop edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_graph_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  if (split_fields(lines[0].text).size() >= 2) return parse_edge_list(text);
  if (lines.size() != 1) throw ParseError(lines[1].number, "expected a single graph6 line");
  try {
    return from_graph6(split_fields(lines[0].text)[0]);
  } catch (const ParseError& e) {
    // Report the line the graph6 string sits on.
    std::string what = e.what();
    if (what.rfind("line 1: ", 0) == 0) what = what.substr(8);
    throw ParseError(lines[0].number, what);
  }
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lrw1
