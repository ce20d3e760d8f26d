#pragma once

// Undirected simple graph on dense vertex ids with optional per-edge roles and
// per-vertex names. Immutable once built.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclereg {

using Vertex = std::uint32_t;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  /// Endpoints ordered so that a < b.
  [[nodiscard]] constexpr Edge normalized() const noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Role of an edge inside a family graph.  Folded cubes use kDimension with a
/// bit position in 1..n-1, or kDiagonal.
struct EdgeRole {
  enum class Kind : std::uint8_t { kNone, kOuter, kSpoke, kInner, kDimension, kDiagonal };

  Kind kind = Kind::kNone;
  std::uint8_t dimension = 0;

  static constexpr EdgeRole none() noexcept { return {}; }
  static constexpr EdgeRole outer() noexcept { return {Kind::kOuter, 0}; }
  static constexpr EdgeRole spoke() noexcept { return {Kind::kSpoke, 0}; }
  static constexpr EdgeRole inner() noexcept { return {Kind::kInner, 0}; }
  static constexpr EdgeRole diagonal() noexcept { return {Kind::kDiagonal, 0}; }
  static constexpr EdgeRole bit(int position) noexcept {
    return {Kind::kDimension, static_cast<std::uint8_t>(position)};
  }

  friend constexpr bool operator==(const EdgeRole&, const EdgeRole&) = default;
};

std::string to_string(EdgeRole role);

class GraphError : public std::invalid_argument {
 public:
  enum class Code { kDuplicateEdge, kSelfLoop, kVertexOutOfRange };

  GraphError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] Code code() const noexcept { return code_; }

 private:
  Code code_;
};

struct RoledEdge {
  Edge edge;
  EdgeRole role;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Throws GraphError on self-loops, duplicate edges
  /// (in either orientation) and out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
  static Graph from_edges(std::size_t vertex_count, std::initializer_list<Edge> edges) {
    return from_edges(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_roled_edges(std::size_t vertex_count, std::span<const RoledEdge> edges,
                                std::vector<std::string> vertex_names = {});

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }

  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const noexcept {
    const auto& row = adjacency_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// Role of edge (a, b); kNone if the graph carries no roles or no such edge.
  [[nodiscard]] EdgeRole role(Vertex a, Vertex b) const noexcept;
  [[nodiscard]] bool has_roles() const noexcept { return !roles_.empty(); }

  [[nodiscard]] bool has_names() const noexcept { return !names_.empty(); }
  [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }

  /// All edges with a < b in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Full re-scan of the structural invariants (symmetry, sortedness, no
  /// loops, no duplicates).
  [[nodiscard]] bool check_invariants() const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) noexcept {
    return lhs.adjacency_ == rhs.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeRole>> roles_;  // parallel to adjacency_ when present
  std::vector<std::string> names_;
  std::size_t edge_count_ = 0;
};

/// A sequence of distinct vertices, consecutive ones adjacent.
using Path = std::vector<Vertex>;

[[nodiscard]] bool is_valid_path(const Graph& g, std::span<const Vertex> path);

[[nodiscard]] bool is_regular(const Graph& g, std::size_t degree);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
[[nodiscard]] std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Distance from `source`; std::nullopt marks unreachable vertices.
using Distance = std::optional<std::uint32_t>;
[[nodiscard]] std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

[[nodiscard]] bool is_bipartite(const Graph& g);

/// Induced subgraph together with the map from its vertex ids back to the
/// parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

[[nodiscard]] Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Copy of g with vertex v renamed to perm[v]; roles and names follow.
[[nodiscard]] Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Induced subgraph on the vertices within `radius` of either endpoint of
/// `center`.  Vertex 0 and 1 of the result are the endpoints of `center`.
[[nodiscard]] Subgraph ball(const Graph& g, Edge center, std::size_t radius);

// ---------------------------------------------------------------------------

inline std::string to_string(EdgeRole role) {
  switch (role.kind) {
    case EdgeRole::Kind::kNone: return "none";
    case EdgeRole::Kind::kOuter: return "outer";
    case EdgeRole::Kind::kSpoke: return "spoke";
    case EdgeRole::Kind::kInner: return "inner";
    case EdgeRole::Kind::kDimension: return std::to_string(role.dimension);
    case EdgeRole::Kind::kDiagonal: return "d";
  }
  return "?";
}

inline Graph Graph::from_roled_edges(std::size_t vertex_count, std::span<const RoledEdge> edges,
                                     std::vector<std::string> vertex_names) {
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  for (const auto& [e, role] : edges) {
    if (e.a >= vertex_count || e.b >= vertex_count) {
      throw GraphError(GraphError::Code::kVertexOutOfRange,
                       "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                           ") has an endpoint outside 0.." + std::to_string(vertex_count));
    }
    if (e.a == e.b) {
      throw GraphError(GraphError::Code::kSelfLoop, "self-loop at vertex " + std::to_string(e.a));
    }
    g.adjacency_[e.a].push_back(e.b);
    g.adjacency_[e.b].push_back(e.a);
  }

  bool any_role = std::any_of(edges.begin(), edges.end(),
                              [](const RoledEdge& r) { return r.role.kind != EdgeRole::Kind::kNone; });
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& row = g.adjacency_[v];
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw GraphError(GraphError::Code::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  g.edge_count_ = edges.size();

  if (any_role) {
    g.roles_.resize(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) g.roles_[v].assign(g.adjacency_[v].size(), EdgeRole::none());
    for (const auto& [e, role] : edges) {
      for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        const auto& row = g.adjacency_[x];
        auto idx = std::lower_bound(row.begin(), row.end(), y) - row.begin();
        g.roles_[x][static_cast<std::size_t>(idx)] = role;
      }
    }
  }
  if (!vertex_names.empty() && vertex_names.size() != vertex_count) {
    throw std::invalid_argument("vertex name table size does not match vertex count");
  }
  g.names_ = std::move(vertex_names);
  return g;
}

inline Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<RoledEdge> roled;
  roled.reserve(edges.size());
  for (const auto& e : edges) roled.push_back({e, EdgeRole::none()});
  return from_roled_edges(vertex_count, roled);
}

inline EdgeRole Graph::role(Vertex a, Vertex b) const noexcept {
  if (roles_.empty()) return EdgeRole::none();
  const auto& row = adjacency_[a];
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return EdgeRole::none();
  return roles_[a][static_cast<std::size_t>(it - row.begin())];
}

inline std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

inline bool Graph::check_invariants() const {
  std::size_t half_edges = 0;
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    const auto& row = adjacency_[v];
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
    for (Vertex w : row) {
      if (w == v || w >= adjacency_.size() || !has_edge(w, v)) return false;
      if (!roles_.empty() && role(v, w) != role(w, v)) return false;
    }
    half_edges += row.size();
  }
  return half_edges == 2 * edge_count_;
}

inline bool is_valid_path(const Graph& g, std::span<const Vertex> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.vertex_count()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (path[j] == path[i]) return false;
    }
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

inline bool is_regular(const Graph& g, std::size_t degree) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.vertex_count());
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<std::int8_t> color(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::vector<std::pair<Vertex, Vertex>> index;  // parent id -> local id, sorted
  index.reserve(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i) index.emplace_back(vertices[i], i);
  std::sort(index.begin(), index.end());
  auto local = [&](Vertex parent) -> std::optional<Vertex> {
    auto it = std::lower_bound(index.begin(), index.end(), std::pair{parent, Vertex{0}});
    if (it == index.end() || it->first != parent) return std::nullopt;
    return it->second;
  };
  std::vector<RoledEdge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (auto j = local(w); j && i < *j) edges.push_back({{i, *j}, g.role(vertices[i], w)});
    }
  }
  sub.graph = Graph::from_roled_edges(vertices.size(), edges);
  return sub;
}

inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation size does not match graph");
  std::vector<RoledEdge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({{perm[e.a], perm[e.b]}, g.role(e.a, e.b)});
  std::vector<std::string> names;
  if (g.has_names()) {
    names.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) names.at(perm[v]) = g.name(v);
  }
  return Graph::from_roled_edges(g.vertex_count(), edges, std::move(names));
}

inline Subgraph ball(const Graph& g, Edge center, std::size_t radius) {
  std::vector<Vertex> order{center.a, center.b};
  std::vector<std::pair<Vertex, std::size_t>> frontier{{center.a, 0}, {center.b, 0}};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[center.a] = seen[center.b] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    auto [v, d] = frontier[head];
    if (d == radius) continue;
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
        frontier.emplace_back(w, d + 1);
      }
    }
  }
  return induced_subgraph(g, order);
}

}  // namespace cyclereg
