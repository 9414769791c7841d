#include "minorsieve/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace minorsieve {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}

ParseError::ParseError(Raw, const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

ParseError ParseError::with_context(const std::string& prefix) const {
  return ParseError(Raw{}, prefix + what(), position_);
}

namespace {

class EdgeListParser {
 public:
  explicit EdgeListParser(std::string_view text) : s_(text) {}

  Graph parse() {
    std::size_t order_override = 0;
    bool has_override = false;
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      order_override = number();
      has_override = true;
      expect(';');
    }
    expect('{');
    std::vector<Edge> edges;
    std::size_t max_label = 0;
    skip();
    if (peek() != '}') {
      for (;;) {
        const std::size_t at = pos_;
        expect('(');
        const std::size_t a = label();
        expect(',');
        const std::size_t b = label();
        expect(')');
        if (a == b) throw ParseError("loop (" + std::to_string(a) + "," + std::to_string(a) + ")", at);
        const Edge e(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
          throw ParseError("duplicate pair", at);
        }
        edges.push_back(e);
        max_label = std::max({max_label, a, b});
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    if (has_override && order_override < max_label) {
      throw ParseError("order prefix smaller than the largest label", 0);
    }
    const std::size_t order = has_override ? order_override : max_label;
    if (order > Graph::kMaxOrder) throw ParseError("order above 64", 0);
    return Graph(order, edges);
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "\\\\") == 0) {
        pos_ += 2;
      } else if (s_[pos_] == '\\' && pos_ + 1 < s_.size() &&
                 (s_[pos_ + 1] == '{' || s_[pos_ + 1] == '}')) {
        ++pos_;  // LaTeX-escaped brace
      } else {
        break;
      }
    }
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::size_t number() {
    skip();
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{} || end == s_.data() + pos_) throw ParseError("expected a number", pos_);
    pos_ = static_cast<std::size_t>(end - s_.data());
    return value;
  }
  std::size_t label() {
    const std::size_t at = pos_;
    const std::size_t v = number();
    if (v == 0) throw ParseError("labels start at 1", at);
    if (v > Graph::kMaxOrder) throw ParseError("label above 64", at);
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) { return EdgeListParser(text).parse(); }

std::string emit_edge_list(const Graph& g) {
  std::string out;
  std::size_t max_label = 0;
  const auto edges = g.edges();
  for (const Edge& e : edges) max_label = std::max<std::size_t>(max_label, e.v + 1);
  if (max_label != g.order()) out += std::to_string(g.order()) + ";";
  out += "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(edges[i].u + 1) + "," + std::to_string(edges[i].v + 1) + ")";
  }
  out += "}";
  return out;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("truncated graph6", i);
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside 63..126", i);
    return c - 63;
  };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (byte(pos) == 63) {
    if (byte(pos + 1) == 63) throw ParseError("orders above 258047 unsupported", pos);
    n = (static_cast<std::size_t>(byte(pos + 1)) << 12) |
        (static_cast<std::size_t>(byte(pos + 2)) << 6) | static_cast<std::size_t>(byte(pos + 3));
    pos += 4;
  } else {
    n = static_cast<std::size_t>(byte(pos));
    pos += 1;
  }
  if (n > Graph::kMaxOrder) throw ParseError("order above 64", 0);
  const std::size_t pairs = n * (n ? n - 1 : 0) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (line.size() < expected) throw ParseError("truncated graph6", line.size());
  if (line.size() > expected) throw ParseError("trailing bytes", expected);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = byte(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (pairs % 6 && (byte(expected - 1) & ((1 << (6 - pairs % 6)) - 1))) {
    throw ParseError("nonzero padding bits", expected - 1);
  }
  return Graph(n, edges);
}

std::vector<Graph> read_graphs(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    try {
      // graph6 never contains digits or '(' and its order-60 header is '{'.
      const bool edge_list = std::isdigit(static_cast<unsigned char>(line.front())) ||
                             line.find_first_of("( \t") != std::string_view::npos || line == "{}";
      out.push_back(edge_list ? parse_edge_list(line) : parse_graph6(line));
    } catch (const ParseError& e) {
      throw e.with_context("line " + std::to_string(line_no) + ": ");
    }
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace minorsieve
