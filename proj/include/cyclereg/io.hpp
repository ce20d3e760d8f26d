#pragma once

// Plain-text graph formats.
//
// Edge list: a header line "n m", then m lines "u v" with 0-based vertex ids.
// Blank lines and lines starting with '#' are ignored.  The writer emits
// edges sorted with u < v, so write(read(text)) == text for its own output.
//
// graph6: the standard ASCII encoding (size prefix, then the upper triangle
// column by column in 6-bit groups offset by 63), one graph per line, with an
// optional ">>graph6<<" header.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclereg/graph.hpp"

namespace cyclereg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] Graph read_edge_list(std::istream& in);
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string write_edge_list(const Graph& g);

/// Largest order the graph6 codec accepts.
inline constexpr std::uint64_t kMaxGraph6Order = std::uint64_t{1} << 18;

[[nodiscard]] Graph parse_graph6(std::string_view line);
[[nodiscard]] std::string write_graph6(const Graph& g);
/// Every graph in a graph6 document (one per non-empty line).
[[nodiscard]] std::vector<Graph> read_graph6(std::istream& in);

enum class GraphFormat { kEdgeList, kGraph6 };

/// Picks the format from the content: edge lists start with two integers.
[[nodiscard]] GraphFormat sniff_format(std::string_view text);

/// Reads a single graph in the sniffed format.
[[nodiscard]] Graph parse_graph(std::string_view text);

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') throw ParseError(line_no, "unexpected character '" + std::string(1, c) + "'");
    std::uint64_t value = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(line[i] - '0');
      if (value > 0xffffffffULL) throw ParseError(line_no, "number too large");
      ++i;
    }
    out.push_back(value);
  }
  return out;
}

inline bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) continue;
    auto numbers = detail::parse_numbers(line, line_no);
    if (numbers.size() != 2) throw ParseError(line_no, "expected two integers");
    if (!have_header) {
      n = numbers[0];
      m = numbers[1];
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
      continue;
    }
    if (numbers[0] >= n || numbers[1] >= n) throw ParseError(line_no, "vertex id out of range");
    if (numbers[0] == numbers[1]) throw ParseError(line_no, "self-loop");
    if (edges.size() == m) throw ParseError(line_no, "more edges than announced in the header");
    edges.push_back({static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1])});
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing header line \"n m\"");
  if (edges.size() != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& e) {
    // Locate the first repeated edge to report its line.
    std::vector<std::pair<Edge, std::size_t>> sorted;
    sorted.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) sorted.emplace_back(edges[i].normalized(), edge_lines[i]);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].first == sorted[i - 1].first) {
        throw ParseError(std::max(sorted[i].second, sorted[i - 1].second), "duplicate edge");
      }
    }
    throw ParseError(line_no, e.what());
  }
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.a);
    out += ' ';
    out += std::to_string(e.b);
    out += '\n';
  }
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= line.size()) throw ParseError(1, "graph6 string ends early");
    auto c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError(1, "byte outside the graph6 range 63..126");
    return c - 63u;
  };
  std::uint64_t n = next();
  if (n == 63) {
    std::size_t groups = 3;
    if (pos < line.size() && line[pos] == '~') {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | next();
  }
  if (n > kMaxGraph6Order) throw ParseError(1, "order exceeds the supported maximum");

  std::vector<Edge> edges;
  std::uint64_t chunk = 0;
  int available = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (available == 0) {
        chunk = next();
        available = 6;
      }
      --available;
      if ((chunk >> available) & 1u) edges.push_back({i, j});
    }
  }
  if (pos != line.size()) throw ParseError(1, "trailing bytes after graph6 data");
  if (available > 0 && (chunk & ((1u << available) - 1)) != 0) throw ParseError(1, "non-zero padding bits");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

inline std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      std::string what = e.what();
      throw ParseError(line_no, what.substr(what.find(": ") + 2));
    }
  }
  return graphs;
}

inline GraphFormat sniff_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto end = text.find('\n', i);
    auto line = text.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i);
    if (!detail::skippable(line)) {
      auto first = line.find_first_not_of(" \t");
      char c = line[first];
      return (c >= '0' && c <= '9') ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
    }
    if (end == std::string_view::npos) break;
    i = end + 1;
  }
  return GraphFormat::kEdgeList;
}

inline Graph parse_graph(std::string_view text) {
  if (sniff_format(text) == GraphFormat::kEdgeList) return parse_edge_list(text);
  std::istringstream in{std::string(text)};
  auto graphs = read_graph6(in);
  if (graphs.size() != 1) throw ParseError(1, "expected exactly one graph6 graph");
  return std::move(graphs.front());
}

}  // namespace cyclereg
