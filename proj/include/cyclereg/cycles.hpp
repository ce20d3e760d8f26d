#pragma once

// Exact cycle counting by depth-bounded DFS, the [l,lambda,m] regularity scan
// and the octagon (8-cycle) partition of a cubic graph's edges.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclereg/graph.hpp"

namespace cyclereg {

class CycleError : public std::invalid_argument {
 public:
  enum class Code { kPathTooLong, kInvalidPath, kNotCubic };

  CycleError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Number of distinct m-cycles containing `path` as a subpath.  A path on
/// L >= 2 vertices is extended in its own direction only, so every cycle is
/// found exactly once; a single-vertex seed finds each cycle in both
/// directions and the result is halved.  An empty path counts all m-cycles.
/// Throws CycleError(kPathTooLong) if the path has m or more edges and
/// CycleError(kInvalidPath) if it is not a path of g.
[[nodiscard]] std::uint64_t count_cycles_through_path(const Graph& g, std::span<const Vertex> path,
                                                      std::size_t m);

/// sigma(e): number of 8-cycles through the edge ab.
[[nodiscard]] inline std::uint64_t octagon_value(const Graph& g, Vertex a, Vertex b) {
  const Vertex path[] = {a, b};
  return count_cycles_through_path(g, path, 8);
}

struct RegularityReport {
  std::size_t l = 0;
  std::size_t m = 0;
  bool regular = true;
  /// Constant count when regular (0 when no path of length l exists).
  std::uint64_t lambda = 0;
  /// Witness pair when not regular.
  Path first;
  std::uint64_t first_count = 0;
  Path second;
  std::uint64_t second_count = 0;
};

/// Checks whether every path on l+1 vertices lies on the same number of
/// m-cycles.  Paths are enumerated once each (first vertex < last vertex) in
/// lexicographic order, so the witness is deterministic.
[[nodiscard]] RegularityReport regularity_scan(const Graph& g, std::size_t l, std::size_t m);

/// Edges of a cubic graph grouped by octagon value.  sigma(e) is computed by
/// a DFS of depth 6 from e, which never leaves the radius-4 ball around e.
/// Throws CycleError(kNotCubic).
using OctagonPartition = std::map<std::uint64_t, std::vector<Edge>>;
[[nodiscard]] OctagonPartition octagon_partition(const Graph& g);

// ---------------------------------------------------------------------------

namespace detail {

struct CycleCounter {
  const Graph& g;
  std::vector<Vertex> stack;
  Vertex target = 0;
  std::size_t remaining_target = 0;  // vertices still to add

  [[nodiscard]] bool on_stack(Vertex v) const noexcept {
    for (Vertex s : stack) {
      if (s == v) return true;
    }
    return false;
  }

  std::uint64_t extend(std::size_t remaining) {
    Vertex tail = stack.back();
    if (remaining == 0) return g.has_edge(tail, target) ? 1 : 0;
    std::uint64_t total = 0;
    for (Vertex w : g.neighbors(tail)) {
      if (on_stack(w)) continue;
      stack.push_back(w);
      total += extend(remaining - 1);
      stack.pop_back();
    }
    return total;
  }

  /// Cycles whose smallest vertex is `start`: walks restricted to larger ids.
  std::uint64_t extend_above(Vertex start, std::size_t remaining) {
    Vertex tail = stack.back();
    if (remaining == 0) return g.has_edge(tail, start) ? 1 : 0;
    std::uint64_t total = 0;
    for (Vertex w : g.neighbors(tail)) {
      if (w <= start || on_stack(w)) continue;
      stack.push_back(w);
      total += extend_above(start, remaining - 1);
      stack.pop_back();
    }
    return total;
  }
};

}  // namespace detail

inline std::uint64_t count_cycles_through_path(const Graph& g, std::span<const Vertex> path,
                                               std::size_t m) {
  if (!path.empty() && path.size() - 1 >= m) {
    throw CycleError(CycleError::Code::kPathTooLong,
                     "path with " + std::to_string(path.size() - 1) + " edges cannot lie on a " +
                         std::to_string(m) + "-cycle");
  }
  if (!is_valid_path(g, path)) throw CycleError(CycleError::Code::kInvalidPath, "not a path of the graph");
  if (m < 3) return 0;

  detail::CycleCounter counter{g, {}, 0, 0};
  if (path.empty()) {
    std::uint64_t total = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      counter.stack.assign(1, s);
      total += counter.extend_above(s, m - 1);
    }
    return total / 2;
  }
  if (path.size() == m) {
    return g.has_edge(path.back(), path.front()) ? 1 : 0;
  }
  counter.stack.assign(path.begin(), path.end());
  counter.target = path.front();
  std::uint64_t found = counter.extend(m - path.size());
  return path.size() == 1 ? found / 2 : found;
}

inline RegularityReport regularity_scan(const Graph& g, std::size_t l, std::size_t m) {
  RegularityReport report;
  report.l = l;
  report.m = m;
  bool have_reference = false;
  Path current;

  // Depth-first enumeration of all paths on l+1 vertices, in lexicographic
  // order; returns false once a witness is found.
  auto visit = [&](auto&& self) -> bool {
    if (current.size() == l + 1) {
      if (l > 0 && current.front() > current.back()) return true;
      std::uint64_t count = count_cycles_through_path(g, current, m);
      if (!have_reference) {
        have_reference = true;
        report.first = current;
        report.first_count = count;
        report.lambda = count;
        return true;
      }
      if (count != report.first_count) {
        report.regular = false;
        report.second = current;
        report.second_count = count;
        return false;
      }
      return true;
    }
    for (Vertex w : g.neighbors(current.back())) {
      bool used = false;
      for (Vertex s : current) used = used || s == w;
      if (used) continue;
      current.push_back(w);
      bool keep_going = self(self);
      current.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    current.assign(1, s);
    if (!visit(visit)) break;
  }
  if (report.regular) {
    report.first.clear();
    report.first_count = 0;
  } else {
    report.lambda = 0;
  }
  return report;
}

inline OctagonPartition octagon_partition(const Graph& g) {
  if (!is_regular(g, 3)) throw CycleError(CycleError::Code::kNotCubic, "octagon partition needs a cubic graph");
  OctagonPartition partition;
  for (const Edge& e : g.edges()) partition[octagon_value(g, e.a, e.b)].push_back(e);
  return partition;
}

}  // namespace cyclereg
