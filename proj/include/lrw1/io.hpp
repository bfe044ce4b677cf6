#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lrw1/graph.hpp"

namespace lrw1 {

/// Input that cannot be parsed; line() is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// graph6 for n <= 62: byte 63+n, then the upper triangle read column by
/// column, packed big-endian into 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// "n m" header and m lines "u v".
Graph parse_edge_list(std::string_view text);

/// Edge list when the first non-empty line has two fields, else graph6.
Graph parse_graph_text(std::string_view text);

/// Plain node and edge statements.
std::string to_dot(const Graph& g);

}  // namespace lrw1
