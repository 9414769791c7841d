#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minorsieve/graph.hpp"

namespace minorsieve {

/// Malformed input; `position` is the byte offset where parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

  /// Same error with `prefix` prepended to the message.
  ParseError with_context(const std::string& prefix) const;

 private:
  struct Raw {};
  ParseError(Raw, const std::string& message, std::size_t position);
  std::size_t position_;
};

/// Parses "{(a,b),(c,d),...}" with 1-based labels. An optional "n;" prefix
/// sets the order (needed for isolated vertices); otherwise the order is the
/// largest label. Whitespace, LaTeX line breaks ("\\") and escaped braces are ignored.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; adds the "n;" prefix only when needed.
std::string emit_edge_list(const Graph& g);

/// graph6 encoding of one graph (no trailing newline, no ">>graph6<<" header).
std::string emit_graph6(const Graph& g);
/// Decodes one graph6 line; a trailing newline or carriage return is ignored.
Graph parse_graph6(std::string_view line);

/// Reads a file of graphs: one per line, each line in graph6 or edge-list
/// form (detected per line). Blank lines and lines starting with '#' are
/// skipped. Parse errors report the line number.
std::vector<Graph> read_graphs(std::string_view text);

}  // namespace minorsieve
