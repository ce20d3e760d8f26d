#pragma once

// Robust recognition of I-graphs, double generalized Petersen graphs and
// folded cubes.  Every acceptance carries a Certificate: a labeling of the
// input onto the generator output for the canonical parameters, which
// verify_certificate re-checks edge by edge before anything is returned.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclereg/cycles.hpp"
#include "cyclereg/families.hpp"
#include "cyclereg/graph.hpp"

namespace cyclereg {

using FamilyParams = std::variant<IParams, DPParams, FQParams>;

std::string to_string(const FamilyParams& p);

/// Generator output for any family member.
[[nodiscard]] Graph generate(const FamilyParams& p);

struct Certificate {
  /// Parameters as read off the input before canonicalization.
  FamilyParams family;
  /// Parameters of the graph the labeling maps onto.
  FamilyParams canonical_params;
  /// labeling[v] is the vertex of generate(canonical_params) that input
  /// vertex v corresponds to.
  std::vector<Vertex> labeling;
};

/// True iff the labeling is a bijection and maps the edge set of g exactly
/// onto the edge set of generate(c.canonical_params).
[[nodiscard]] bool verify_certificate(const Graph& g, const Certificate& c);

enum class RejectReason {
  kEmpty,
  kNotCubic,
  kOddOrder,
  kOrderNotDivisible,
  kDisconnected,
  kComponentsDiffer,
  kPartitionShape,
  kNotMatching,
  kCycleCollectionShape,
  kLabelingInconsistent,
  kNotIsomorphic,
  kWrongOrder,
  kNotRegular,
  kPeelingStuck,
  kNotBipartite,
  kEdgeCount,
  kSplitNotMatching,
  kDiagonalMismatch,
};

std::string to_string(RejectReason reason);

struct Recognition {
  std::optional<Certificate> certificate;
  RejectReason reason = RejectReason::kEmpty;

  [[nodiscard]] bool accepted() const noexcept { return certificate.has_value(); }
  static Recognition accept(Certificate c) { return {std::move(c), RejectReason::kEmpty}; }
  static Recognition reject(RejectReason r) { return {std::nullopt, r}; }
};

/// Perfect matching given as a partner table: mate[v] is v's matched vertex.
using SpokeSet = std::vector<Vertex>;

/// Builds the partner table of `edges`; nothing if they are not a perfect
/// matching of g.
[[nodiscard]] std::optional<SpokeSet> matching_from_edges(const Graph& g, std::span<const Edge> edges);

/// Isomorphism g -> h by breadth-first backtracking, or nothing.  Intended for
/// small connected graphs; gives up (returns nothing) after `budget` steps.
[[nodiscard]] std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                                  std::uint64_t budget = 50'000'000);

// --- I-graphs and DP graphs ---------------------------------------------------

/// Canonical parameters of the I-graphs whose octagon value is constant.
[[nodiscard]] std::span<const IParams> constant_octagon_i_graphs();
/// Parameters of the DP graphs whose octagon value is constant.
[[nodiscard]] std::span<const DPParams> constant_octagon_dp_graphs();

[[nodiscard]] Recognition recognize_i_graph(const Graph& g);
[[nodiscard]] Recognition extend_i(const Graph& g, const SpokeSet& spokes);

[[nodiscard]] Recognition recognize_dp(const Graph& g);
[[nodiscard]] Recognition extend_dp(const Graph& g, const SpokeSet& spokes);

// --- Folded cubes ---------------------------------------------------------------

struct DiagonalState {
  std::vector<Edge> diagonals;
  /// Loop iterations at whose head the bucket invariant was checked / broken
  /// (only populated when checking is requested).
  std::size_t invariant_checks = 0;
  std::size_t invariant_violations = 0;
};

struct DiagonalResult {
  std::optional<DiagonalState> state;
  RejectReason reason = RejectReason::kEmpty;
};

/// Peels the diagonal matching of an n-regular connected graph on 2^(n-1)
/// vertices (n >= 3), seeding the lexicographically least edge.
[[nodiscard]] DiagonalResult determine_diagonals(const Graph& g, bool check_invariants = false);

/// Labels G - D as a hypercube and checks that D joins complementary labels.
[[nodiscard]] Recognition extend_fq(const Graph& g, std::span<const Edge> diagonals);

[[nodiscard]] Recognition recognize_folded_cube(const Graph& g);

/// W_uv and W_vu: vertices strictly closer to u than to v, and vice versa.
struct SplitSets {
  std::vector<Vertex> closer_to_u;
  std::vector<Vertex> closer_to_v;
};
[[nodiscard]] SplitSets split_sets(const Graph& g, Vertex u, Vertex v);

// --- Dispatch -------------------------------------------------------------------

enum class FamilyTag { kAuto, kIGraph, kDoubleGP, kFoldedCube };

/// Folded cube first when the order/degree pattern fits, then I-graph, then DP.
[[nodiscard]] Recognition recognize(const Graph& g, FamilyTag family = FamilyTag::kAuto);

// ---------------------------------------------------------------------------

inline std::string to_string(const FamilyParams& p) {
  return std::visit([](const auto& q) { return to_string(q); }, p);
}

inline Graph generate(const FamilyParams& p) {
  struct Visitor {
    Graph operator()(const IParams& q) const { return generate_i_graph(q); }
    Graph operator()(const DPParams& q) const { return generate_dp(q); }
    Graph operator()(const FQParams& q) const { return generate_folded_cube(q); }
  };
  return std::visit(Visitor{}, p);
}

inline std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::kEmpty: return "Empty";
    case RejectReason::kNotCubic: return "NotCubic";
    case RejectReason::kOddOrder: return "OddOrder";
    case RejectReason::kOrderNotDivisible: return "OrderNotDivisible";
    case RejectReason::kDisconnected: return "Disconnected";
    case RejectReason::kComponentsDiffer: return "ComponentsDiffer";
    case RejectReason::kPartitionShape: return "PartitionShape";
    case RejectReason::kNotMatching: return "NotMatching";
    case RejectReason::kCycleCollectionShape: return "CycleCollectionShape";
    case RejectReason::kLabelingInconsistent: return "LabelingInconsistent";
    case RejectReason::kNotIsomorphic: return "NotIsomorphic";
    case RejectReason::kWrongOrder: return "WrongOrder";
    case RejectReason::kNotRegular: return "NotRegular";
    case RejectReason::kPeelingStuck: return "PeelingStuck";
    case RejectReason::kNotBipartite: return "NotBipartite";
    case RejectReason::kEdgeCount: return "EdgeCount";
    case RejectReason::kSplitNotMatching: return "SplitNotMatching";
    case RejectReason::kDiagonalMismatch: return "DiagonalMismatch";
  }
  return "Unknown";
}

inline bool verify_certificate(const Graph& g, const Certificate& c) {
  Graph h;
  try {
    h = generate(c.canonical_params);
  } catch (const FamilyError&) {
    return false;
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (c.labeling.size() != g.vertex_count()) return false;
  std::vector<bool> hit(h.vertex_count(), false);
  for (Vertex image : c.labeling) {
    if (image >= h.vertex_count() || hit[image]) return false;
    hit[image] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && !h.has_edge(c.labeling[v], c.labeling[w])) return false;
    }
  }
  return true;
}

inline std::optional<SpokeSet> matching_from_edges(const Graph& g, std::span<const Edge> edges) {
  constexpr Vertex kUnset = ~Vertex{0};
  SpokeSet mate(g.vertex_count(), kUnset);
  for (const Edge& e : edges) {
    if (e.a >= g.vertex_count() || e.b >= g.vertex_count() || !g.has_edge(e.a, e.b)) return std::nullopt;
    if (mate[e.a] != kUnset || mate[e.b] != kUnset) return std::nullopt;
    mate[e.a] = e.b;
    mate[e.b] = e.a;
  }
  for (Vertex m : mate) {
    if (m == kUnset) return std::nullopt;
  }
  return mate;
}

inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                           std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  // Breadth-first order of g so that every vertex after the first has an
  // already-placed parent.
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    if (root != 0) return std::nullopt;  // disconnected inputs are not supported
    seen[root] = true;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
  }

  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> map(n, kUnset);
  std::vector<Vertex> inverse(n, kUnset);
  std::uint64_t steps = 0;

  auto consistent = [&](Vertex v, Vertex c) {
    if (g.degree(v) != h.degree(c)) return false;
    std::size_t placed_g = 0;
    for (Vertex x : g.neighbors(v)) {
      if (map[x] == kUnset) continue;
      if (!h.has_edge(map[x], c)) return false;
      ++placed_g;
    }
    std::size_t placed_h = 0;
    for (Vertex y : h.neighbors(c)) placed_h += inverse[y] != kUnset ? 1 : 0;
    return placed_g == placed_h;
  };

  auto place = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == n) return true;
    if (++steps > budget) return false;
    Vertex v = order[idx];
    auto try_candidate = [&](Vertex c) {
      if (inverse[c] != kUnset || !consistent(v, c)) return false;
      map[v] = c;
      inverse[c] = v;
      if (self(self, idx + 1)) return true;
      map[v] = kUnset;
      inverse[c] = kUnset;
      return false;
    };
    if (idx == 0) {
      for (Vertex c = 0; c < n; ++c) {
        if (try_candidate(c)) return true;
        if (steps > budget) return false;
      }
      return false;
    }
    for (Vertex c : h.neighbors(map[parent[v]])) {
      if (try_candidate(c)) return true;
      if (steps > budget) return false;
    }
    return false;
  };

  if (!place(place, 0)) return std::nullopt;
  return map;
}

namespace detail {

inline constexpr Vertex kNoVertex = ~Vertex{0};

/// Decomposition of a 2-regular spanning subgraph into cycles.
struct CycleCollection {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::uint32_t> cycle_of;
  std::vector<std::uint32_t> position;
};

/// Cycles of E(g) minus the matching; nothing unless every vertex has exactly
/// two non-matching neighbours.
inline std::optional<CycleCollection> complement_cycles(const Graph& g, const SpokeSet& mate) {
  const std::size_t n = g.vertex_count();
  CycleCollection cc;
  cc.cycle_of.assign(n, ~std::uint32_t{0});
  cc.position.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) return std::nullopt;
  }
  auto other = [&](Vertex v, Vertex not_this) {
    for (Vertex w : g.neighbors(v)) {
      if (w != mate[v] && w != not_this) return w;
    }
    return kNoVertex;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (cc.cycle_of[s] != ~std::uint32_t{0}) continue;
    auto id = static_cast<std::uint32_t>(cc.cycles.size());
    std::vector<Vertex> cycle;
    Vertex prev = kNoVertex;
    Vertex cur = s;
    do {
      if (cc.cycle_of[cur] != ~std::uint32_t{0}) return std::nullopt;
      cc.cycle_of[cur] = id;
      cc.position[cur] = static_cast<std::uint32_t>(cycle.size());
      cycle.push_back(cur);
      Vertex next = other(cur, prev);
      if (next == kNoVertex) return std::nullopt;
      prev = cur;
      cur = next;
    } while (cur != s);
    cc.cycles.push_back(std::move(cycle));
  }
  return cc;
}

/// The two non-matching neighbours of v.
inline std::array<Vertex, 2> rim_neighbors(const Graph& g, const SpokeSet& mate, Vertex v) {
  std::array<Vertex, 2> out{kNoVertex, kNoVertex};
  std::size_t i = 0;
  for (Vertex w : g.neighbors(v)) {
    if (w != mate[v] && i < 2) out[i++] = w;
  }
  return out;
}

inline bool rim_adjacent(const Graph& g, const SpokeSet& mate, Vertex a, Vertex b) {
  return mate[a] != b && g.has_edge(a, b);
}

/// Candidate spoke sets from one octagon class: the class itself if it is a
/// perfect matching, or the edges leaving a 2-regular class.
inline std::optional<SpokeSet> spokes_from_class(const Graph& g, std::span<const Edge> cls) {
  // Class neighbours of each vertex (at most two survive the shape checks).
  std::vector<std::array<Vertex, 2>> class_neighbors(g.vertex_count(), {kNoVertex, kNoVertex});
  std::vector<std::uint8_t> degree(g.vertex_count(), 0);
  for (const Edge& e : cls) {
    for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      if (degree[x] < 2) class_neighbors[x][degree[x]] = y;
      ++degree[x];
    }
  }
  bool all_one = std::all_of(degree.begin(), degree.end(), [](auto d) { return d == 1; });
  if (all_one) return matching_from_edges(g, cls);
  bool zero_or_two = std::all_of(degree.begin(), degree.end(), [](auto d) { return d == 0 || d == 2; });
  if (!zero_or_two) return std::nullopt;
  std::vector<Edge> leaving;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] != 2) continue;
    std::size_t found = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == class_neighbors[v][0] || w == class_neighbors[v][1]) continue;
      ++found;
      if (v < w || degree[w] != 2) leaving.push_back(Edge{v, w}.normalized());
    }
    if (found != 1) return std::nullopt;
  }
  std::sort(leaving.begin(), leaving.end());
  leaving.erase(std::unique(leaving.begin(), leaving.end()), leaving.end());
  return matching_from_edges(g, leaving);
}

/// Octagon classes ordered by (cardinality, sigma), keeping only those of
/// minimum cardinality.
inline std::vector<const std::vector<Edge>*> minimal_classes(const OctagonPartition& partition) {
  std::size_t smallest = ~std::size_t{0};
  for (const auto& [sigma, edges] : partition) smallest = std::min(smallest, edges.size());
  std::vector<const std::vector<Edge>*> out;
  for (const auto& [sigma, edges] : partition) {
    if (edges.size() == smallest) out.push_back(&edges);  // map order = ascending sigma
  }
  return out;
}

template <typename Params>
Recognition constant_branch(const Graph& g, std::span<const Params> stored, std::uint64_t sigma) {
  for (const Params& p : stored) {
    Graph h = generate(FamilyParams{p});
    if (h.vertex_count() != g.vertex_count()) continue;
    const Edge first = h.edges().front();
    if (octagon_value(h, first.a, first.b) != sigma) continue;
    auto iso = find_isomorphism(g, h);
    if (!iso) continue;
    Certificate c{p, p, std::move(*iso)};
    if (verify_certificate(g, c)) return Recognition::accept(std::move(c));
  }
  return Recognition::reject(RejectReason::kNotIsomorphic);
}

/// Shared driver of the octagon-partition recognizer.
template <typename Extend, typename Params>
Recognition octagon_recognizer(const Graph& g, std::span<const Params> stored, Extend extend) {
  OctagonPartition partition = octagon_partition(g);
  if (partition.size() == 1) return constant_branch(g, stored, partition.begin()->first);
  RejectReason last = RejectReason::kPartitionShape;
  for (const auto* cls : minimal_classes(partition)) {
    auto spokes = spokes_from_class(g, *cls);
    if (!spokes) {
      last = RejectReason::kPartitionShape;
      continue;
    }
    Recognition r = extend(g, *spokes);
    if (r.accepted()) return r;
    last = r.reason;
  }
  return Recognition::reject(last);
}

inline Certificate compose_to_canonical_i(const IParams& found, std::vector<Vertex> labeling) {
  CanonicalI canonical = canonicalize_i(found);
  auto map = canonical_i_map(found, canonical);
  for (Vertex& image : labeling) image = map[image];
  return {found, canonical.params, std::move(labeling)};
}

}  // namespace detail

inline std::span<const IParams> constant_octagon_i_graphs() {
  static constexpr std::array<IParams, 10> kGraphs{{
      {3, 1, 1}, {4, 1, 1}, {5, 1, 2}, {8, 1, 3}, {10, 1, 2},
      {10, 1, 3}, {12, 1, 5}, {13, 1, 5}, {24, 1, 5}, {26, 1, 5},
  }};
  return kGraphs;
}

inline std::span<const DPParams> constant_octagon_dp_graphs() {
  static constexpr std::array<DPParams, 2> kGraphs{{{5, 2}, {10, 2}}};
  return kGraphs;
}

inline Recognition extend_i(const Graph& g, const SpokeSet& mate) {
  using detail::kNoVertex;
  const auto order = static_cast<std::uint32_t>(g.vertex_count());
  if (order < 6 || order % 2 != 0) return Recognition::reject(RejectReason::kOddOrder);
  if (mate.size() != order) return Recognition::reject(RejectReason::kNotMatching);
  for (Vertex v = 0; v < order; ++v) {
    if (mate[v] >= order || mate[mate[v]] != v || !g.has_edge(v, mate[v])) {
      return Recognition::reject(RejectReason::kNotMatching);
    }
  }
  auto cc = detail::complement_cycles(g, mate);
  if (!cc) return Recognition::reject(RejectReason::kCycleCollectionShape);

  const std::uint32_t n = order / 2;
  // Longer cycles form the rim labelled u; their number is the outer step.
  std::size_t l1 = 0;
  std::size_t l2 = ~std::size_t{0};
  for (const auto& c : cc->cycles) {
    l1 = std::max(l1, c.size());
    l2 = std::min(l2, c.size());
  }
  std::uint32_t g1 = 0;
  std::uint32_t g2 = 0;
  for (const auto& c : cc->cycles) {
    if (c.size() == l1) ++g1;
    else if (c.size() == l2) ++g2;
    else return Recognition::reject(RejectReason::kCycleCollectionShape);
  }
  if (l1 == l2) {
    if (g1 != 2 || l1 != n) return Recognition::reject(RejectReason::kCycleCollectionShape);
    g1 = 1;
  } else if (g1 * l1 != n || g2 * l2 != n) {
    return Recognition::reject(RejectReason::kCycleCollectionShape);
  }

  std::uint32_t first_rim = 0;
  while (cc->cycles[first_rim].size() != l1) ++first_rim;
  auto is_outer = [&](Vertex v) {
    return l1 == l2 ? cc->cycle_of[v] == first_rim : cc->cycles[cc->cycle_of[v]].size() == l1;
  };

  for (int trial = 0; trial < 2; ++trial) {
    // (t, beta) coordinates of each outer vertex: index = t*g1 + beta*k.
    std::vector<std::uint32_t> coord_t(order, 0);
    std::vector<std::uint32_t> coord_beta(order, ~std::uint32_t{0});
    std::vector<bool> rim_done(cc->cycles.size(), false);
    std::uint32_t cycle_id = first_rim;
    std::uint32_t start = 0;
    int direction = 1;
    Vertex previous_w = kNoVertex;
    Vertex closing = kNoVertex;
    bool ok = true;

    for (std::uint32_t beta = 0; beta < g1 && ok; ++beta) {
      const auto& cycle = cc->cycles[cycle_id];
      const auto len = static_cast<std::int64_t>(cycle.size());
      rim_done[cycle_id] = true;
      auto at = [&](std::int64_t t) { return cycle[mod(start + direction * t, static_cast<std::uint32_t>(len))]; };
      for (std::int64_t t = 0; t < len; ++t) {
        coord_t[at(t)] = static_cast<std::uint32_t>(t);
        coord_beta[at(t)] = beta;
      }
      Vertex x0 = at(0);
      Vertex w0 = mate[x0];
      if (is_outer(w0)) {
        ok = false;
        break;
      }
      auto inner = detail::rim_neighbors(g, mate, w0);
      Vertex next_w;
      if (beta == 0) {
        next_w = inner[trial];
      } else if (inner[0] == previous_w) {
        next_w = inner[1];
      } else if (inner[1] == previous_w) {
        next_w = inner[0];
      } else {
        ok = false;
        break;
      }
      previous_w = w0;
      Vertex y0 = mate[next_w];
      if (!is_outer(y0)) {
        ok = false;
        break;
      }
      if (beta + 1 == g1) {
        closing = y0;
        break;
      }
      std::uint32_t next_cycle = cc->cycle_of[y0];
      if (rim_done[next_cycle]) {
        ok = false;
        break;
      }
      // Orient the next rim so that its second vertex sits next to the
      // second vertex of this rim across the inner rim.
      Vertex target = mate[at(1)];
      const auto& next = cc->cycles[next_cycle];
      auto next_len = static_cast<std::uint32_t>(next.size());
      std::uint32_t py = cc->position[y0];
      bool forward = detail::rim_adjacent(g, mate, mate[next[(py + 1) % next_len]], target);
      bool backward = detail::rim_adjacent(g, mate, mate[next[(py + next_len - 1) % next_len]], target);
      if (forward == backward) {
        ok = false;
        break;
      }
      cycle_id = next_cycle;
      start = py;
      direction = forward ? 1 : -1;
    }
    if (!ok || closing == kNoVertex || cc->cycle_of[closing] != first_rim) continue;

    // After g1 rounds the walk returns to the first rim p steps further on,
    // so k = p (mod l1).  Any such k coprime to g1 yields the same graph.
    std::uint32_t p = coord_t[closing];
    std::uint32_t k = 0;
    for (std::uint32_t candidate = p; candidate < n; candidate += static_cast<std::uint32_t>(l1)) {
      if (candidate != 0 && std::gcd(candidate, g1) == 1) {
        k = candidate;
        break;
      }
    }
    if (k == 0) continue;
    std::uint32_t folded = fold(k, n);
    if (folded == 0 || 2 * folded >= n || 2 * g1 >= n) continue;

    IParams found{n, g1, folded};
    std::vector<Vertex> labeling(order, kNoVertex);
    for (Vertex v = 0; v < order; ++v) {
      if (!is_outer(v)) continue;
      if (coord_beta[v] == ~std::uint32_t{0}) {
        ok = false;
        break;
      }
      std::int64_t index = std::int64_t{coord_t[v]} * g1 + std::int64_t{coord_beta[v]} * k;
      labeling[v] = i_u(found, index);
      labeling[mate[v]] = i_w(found, index);
    }
    if (!ok || std::find(labeling.begin(), labeling.end(), kNoVertex) != labeling.end()) continue;
    Certificate raw{found, found, labeling};
    if (!verify_certificate(g, raw)) continue;
    Certificate c = detail::compose_to_canonical_i(found, std::move(labeling));
    if (verify_certificate(g, c)) return Recognition::accept(std::move(c));
  }
  return Recognition::reject(RejectReason::kLabelingInconsistent);
}

namespace detail {

inline Recognition recognize_connected_i(const Graph& g) {
  if (g.vertex_count() < 6 || g.vertex_count() % 2 != 0) return Recognition::reject(RejectReason::kOddOrder);
  return octagon_recognizer(g, constant_octagon_i_graphs(), extend_i);
}

}  // namespace detail

inline Recognition recognize_i_graph(const Graph& g) {
  if (g.vertex_count() == 0) return Recognition::reject(RejectReason::kEmpty);
  if (!is_regular(g, 3)) return Recognition::reject(RejectReason::kNotCubic);
  if (g.vertex_count() % 2 != 0) return Recognition::reject(RejectReason::kOddOrder);

  auto components = connected_components(g);
  if (components.size() == 1) return detail::recognize_connected_i(g);

  // Several components: each must be the same I-graph; the whole graph is
  // then I(dn, dj, dk) with copy c on the indices congruent to c mod d.
  std::optional<IParams> common;
  std::vector<Vertex> labeling(g.vertex_count(), detail::kNoVertex);
  const auto d = static_cast<std::uint32_t>(components.size());
  for (std::uint32_t copy = 0; copy < d; ++copy) {
    Subgraph sub = induced_subgraph(g, components[copy]);
    Recognition r = detail::recognize_connected_i(sub.graph);
    if (!r.accepted()) return r;
    const auto& p = std::get<IParams>(r.certificate->canonical_params);
    if (common && *common != p) return Recognition::reject(RejectReason::kComponentsDiffer);
    common = p;
    for (Vertex local = 0; local < sub.to_parent.size(); ++local) {
      Vertex image = r.certificate->labeling[local];
      std::int64_t index = copy + std::int64_t{d} * (image % p.n);
      IParams whole{d * p.n, d * p.j, d * p.k};
      labeling[sub.to_parent[local]] = image < p.n ? i_u(whole, index) : i_w(whole, index);
    }
  }
  IParams whole{d * common->n, d * common->j, d * common->k};
  Certificate c = detail::compose_to_canonical_i(whole, std::move(labeling));
  if (!verify_certificate(g, c)) return Recognition::reject(RejectReason::kLabelingInconsistent);
  return Recognition::accept(std::move(c));
}

inline Recognition extend_dp(const Graph& g, const SpokeSet& mate) {
  using detail::kNoVertex;
  const auto order = static_cast<std::uint32_t>(g.vertex_count());
  if (order < 12 || order % 4 != 0) return Recognition::reject(RejectReason::kOrderNotDivisible);
  if (mate.size() != order) return Recognition::reject(RejectReason::kNotMatching);
  for (Vertex v = 0; v < order; ++v) {
    if (mate[v] >= order || mate[mate[v]] != v || !g.has_edge(v, mate[v])) {
      return Recognition::reject(RejectReason::kNotMatching);
    }
  }
  auto cc = detail::complement_cycles(g, mate);
  if (!cc) return Recognition::reject(RejectReason::kCycleCollectionShape);

  const std::uint32_t n = order / 4;
  std::vector<std::uint32_t> rims;
  std::size_t inner_length = 0;
  std::size_t inner_total = 0;
  for (std::uint32_t id = 0; id < cc->cycles.size(); ++id) {
    std::size_t len = cc->cycles[id].size();
    if (len == n) {
      rims.push_back(id);
    } else {
      if (inner_length != 0 && inner_length != len) return Recognition::reject(RejectReason::kCycleCollectionShape);
      inner_length = len;
      inner_total += len;
    }
  }
  bool shape_ok = (rims.size() == 2 && inner_total == 2 * std::size_t{n}) || (rims.size() == 4 && inner_total == 0);
  if (!shape_ok) return Recognition::reject(RejectReason::kCycleCollectionShape);

  std::optional<Certificate> best;
  for (std::uint32_t u_rim : rims) {
    const auto& rim = cc->cycles[u_rim];
    Vertex w0 = mate[rim[0]];
    auto inner = detail::rim_neighbors(g, mate, w0);
    for (int assignment = 0; assignment < 2; ++assignment) {
      Vertex x_plus = mate[inner[assignment]];
      Vertex x_minus = mate[inner[1 - assignment]];
      std::uint32_t x_rim = cc->cycle_of[x_plus];
      if (x_rim == u_rim || cc->cycle_of[x_minus] != x_rim || cc->cycles[x_rim].size() != n) continue;
      const auto& xr = cc->cycles[x_rim];
      std::uint32_t from = cc->position[x_minus];
      std::uint32_t to = cc->position[x_plus];
      for (int direction : {1, -1}) {
        std::uint32_t length = direction == 1 ? mod(std::int64_t{to} - from, n) : mod(std::int64_t{from} - to, n);
        if (length % 2 != 0 || length == 0 || length >= n) continue;
        std::uint32_t k = length / 2;
        DPParams found{n, k};
        std::vector<Vertex> candidate(order, kNoVertex);
        bool ok = true;
        for (std::uint32_t i = 0; i < n && ok; ++i) {
          Vertex u = rim[i];
          candidate[u] = dp_u(found, i);
          if (candidate[mate[u]] != kNoVertex) ok = false;
          candidate[mate[u]] = dp_w(found, i);
        }
        for (std::uint32_t t = 0; t < n && ok; ++t) {
          Vertex x = xr[mod(std::int64_t{from} + std::int64_t{direction} * t, n)];
          std::int64_t index = std::int64_t{t} - k;
          if (candidate[x] != kNoVertex || candidate[mate[x]] != kNoVertex) ok = false;
          candidate[x] = dp_x(found, index);
          candidate[mate[x]] = dp_y(found, index);
        }
        if (!ok) continue;
        Certificate c{found, found, std::move(candidate)};
        if (!verify_certificate(g, c)) continue;
        DPParams canonical = canonical_dp_params(found);
        if (canonical != found) {
          auto twin = dp_twin_map(found);
          for (Vertex& image : c.labeling) image = twin[image];
          c.canonical_params = canonical;
        }
        auto key = [](const Certificate& x) {
          return std::pair{std::get<DPParams>(x.canonical_params).k, std::get<DPParams>(x.family).k};
        };
        if (!best || key(c) < key(*best)) best = std::move(c);
      }
    }
  }
  if (!best || !verify_certificate(g, *best)) return Recognition::reject(RejectReason::kLabelingInconsistent);
  return Recognition::accept(std::move(*best));
}

inline Recognition recognize_dp(const Graph& g) {
  if (g.vertex_count() == 0) return Recognition::reject(RejectReason::kEmpty);
  if (!is_regular(g, 3)) return Recognition::reject(RejectReason::kNotCubic);
  if (g.vertex_count() % 4 != 0 || g.vertex_count() < 12) {
    return Recognition::reject(RejectReason::kOrderNotDivisible);
  }
  if (connected_components(g).size() != 1) return Recognition::reject(RejectReason::kDisconnected);
  return detail::octagon_recognizer(g, constant_octagon_dp_graphs(), extend_dp);
}

// --- Folded cubes -------------------------------------------------------------

namespace detail {

/// Compressed adjacency with per-slot deletion flags, for the peeling loop.
class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph& g) : offset_(g.vertex_count() + 1, 0), degree_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      offset_[v + 1] = offset_[v] + g.degree(v);
      degree_[v] = static_cast<std::uint32_t>(g.degree(v));
    }
    target_.reserve(offset_.back());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto row = g.neighbors(v);
      target_.insert(target_.end(), row.begin(), row.end());
    }
    alive_.assign(offset_.back(), 1);
  }

  [[nodiscard]] std::uint32_t degree(Vertex v) const noexcept { return degree_[v]; }
  [[nodiscard]] std::size_t begin(Vertex v) const noexcept { return offset_[v]; }
  [[nodiscard]] std::size_t end(Vertex v) const noexcept { return offset_[v + 1]; }
  [[nodiscard]] Vertex target(std::size_t slot) const noexcept { return target_[slot]; }
  [[nodiscard]] bool alive(std::size_t slot) const noexcept { return alive_[slot] != 0; }

  [[nodiscard]] std::optional<std::size_t> slot(Vertex a, Vertex b) const noexcept {
    auto first = target_.begin() + static_cast<std::ptrdiff_t>(offset_[a]);
    auto last = target_.begin() + static_cast<std::ptrdiff_t>(offset_[a + 1]);
    auto it = std::lower_bound(first, last, b);
    if (it == last || *it != b) return std::nullopt;
    return static_cast<std::size_t>(it - target_.begin());
  }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const noexcept {
    auto s = slot(a, b);
    return s && alive_[*s] != 0;
  }
  void remove(Vertex a, Vertex b) noexcept {
    alive_[*slot(a, b)] = 0;
    alive_[*slot(b, a)] = 0;
    --degree_[a];
    --degree_[b];
  }

 private:
  std::vector<std::size_t> offset_;
  std::vector<Vertex> target_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> degree_;
};

inline std::optional<std::uint32_t> folded_cube_dimension(const Graph& g) {
  const std::size_t order = g.vertex_count();
  if (order == 0 || !std::has_single_bit(order)) return std::nullopt;
  auto n = static_cast<std::uint32_t>(std::countr_zero(order)) + 1;
  // FQ_1 = K_1 and FQ_2 = K_2 have degree n - 1; every larger one degree n.
  std::size_t degree = n >= 3 ? n : n - 1;
  if (n > kMaxCubeDimension + 1 || !is_regular(g, degree)) return std::nullopt;
  return n;
}

}  // namespace detail

inline DiagonalResult determine_diagonals(const Graph& g, bool check_invariants) {
  using detail::kNoVertex;
  auto dimension = detail::folded_cube_dimension(g);
  if (!dimension || *dimension < 3) return {std::nullopt, RejectReason::kNotRegular};
  const std::uint32_t n = *dimension;
  const std::size_t order = g.vertex_count();

  detail::WorkingGraph work(g);
  std::vector<Vertex> partner(order, kNoVertex);
  // Bucket index of the diagonal through each vertex; 1 once processed.
  std::vector<std::uint32_t> level(order, 0);
  std::vector<std::vector<Edge>> buckets(n + 1);
  DiagonalState state;

  Vertex seed_u = 0;
  Vertex seed_v = g.neighbors(0).front();
  partner[seed_u] = seed_v;
  partner[seed_v] = seed_u;
  level[seed_u] = level[seed_v] = n;
  buckets[n].push_back({seed_u, seed_v});

  auto is_current = [&](const Edge& e, std::uint32_t bucket) {
    return partner[e.a] == e.b && level[e.a] == bucket;
  };

  while (true) {
    // Smallest non-empty bucket above 1 (bucket 1 holds finished diagonals).
    std::uint32_t i = 0;
    for (std::uint32_t j = 2; j <= n && i == 0; ++j) {
      auto& bucket = buckets[j];
      while (!bucket.empty() && !is_current(bucket.back(), j)) bucket.pop_back();
      if (!bucket.empty()) i = j;
    }
    if (i == 0) break;

    if (check_invariants) {
      ++state.invariant_checks;
      for (std::uint32_t j = 2; j <= n; ++j) {
        for (const Edge& e : buckets[j]) {
          if (is_current(e, j) && (work.degree(e.a) != j || work.degree(e.b) != j)) ++state.invariant_violations;
        }
      }
    }

    Edge uv = buckets[i].back();
    buckets[i].pop_back();
    const Vertex u = uv.a;
    const Vertex v = uv.b;
    level[u] = level[v] = 1;

    for (std::size_t su = work.begin(u); su < work.end(u); ++su) {
      if (!work.alive(su)) continue;
      Vertex a = work.target(su);
      if (a == v) continue;
      for (std::size_t sv = work.begin(v); sv < work.end(v); ++sv) {
        if (!work.alive(sv)) continue;
        Vertex b = work.target(sv);
        if (b == u || b == a || !work.has_edge(a, b)) continue;
        if (partner[a] != kNoVertex && partner[a] != b) continue;
        if (partner[b] != kNoVertex && partner[b] != a) continue;
        if (level[a] == 1 || work.degree(a) != work.degree(b)) continue;
        std::uint32_t next = work.degree(a) - 1;
        partner[a] = b;
        partner[b] = a;
        level[a] = level[b] = next;
        buckets[next].push_back(Edge{a, b}.normalized());
        work.remove(u, a);
        work.remove(v, b);
        break;
      }
    }
    if (work.degree(u) != 1 || work.degree(v) != 1) return {std::nullopt, RejectReason::kPeelingStuck};
  }

  for (Vertex x = 0; x < order; ++x) {
    if (partner[x] == kNoVertex) return {std::nullopt, RejectReason::kPeelingStuck};
    if (x < partner[x]) state.diagonals.push_back({x, partner[x]});
  }
  if (state.diagonals.size() != order / 2) return {std::nullopt, RejectReason::kPeelingStuck};
  return {std::move(state), RejectReason::kEmpty};
}

inline SplitSets split_sets(const Graph& g, Vertex u, Vertex v) {
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  SplitSets s;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!du[x] && !dv[x]) continue;
    if (du[x] && (!dv[x] || *du[x] < *dv[x])) s.closer_to_u.push_back(x);
    else if (dv[x] && (!du[x] || *dv[x] < *du[x])) s.closer_to_v.push_back(x);
  }
  return s;
}

inline Recognition extend_fq(const Graph& g, std::span<const Edge> diagonals) {
  using detail::kNoVertex;
  auto dimension = detail::folded_cube_dimension(g);
  if (!dimension) return Recognition::reject(RejectReason::kNotRegular);
  const std::uint32_t n = *dimension;
  const std::size_t order = g.vertex_count();
  auto mate = matching_from_edges(g, diagonals);
  if (!mate) return Recognition::reject(RejectReason::kNotMatching);

  // H = G - D as an implicit graph: neighbours of v other than mate[v].
  const std::size_t h_edges = g.edge_count() - diagonals.size();
  if (h_edges != std::size_t{n - 1} << (n - 2)) return Recognition::reject(RejectReason::kEdgeCount);

  // Breadth-first layers from vertex 0.  In a hypercube a vertex at distance
  // L has exactly L neighbours at distance L-1, and its label is the union of
  // theirs; the neighbours of the root get one bit each.  Bit t set means the
  // vertex lies in W_{r_t 0} for the t-th root neighbour r_t.
  std::vector<std::uint32_t> dist(order, ~std::uint32_t{0});
  std::vector<Vertex> label(order, 0);
  std::vector<Vertex> queue{0};
  dist[0] = 0;
  std::uint32_t next_bit = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (y == (*mate)[x]) continue;
      if (dist[y] == ~std::uint32_t{0}) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
        if (x == 0) label[y] = Vertex{1} << next_bit++;
      } else if (dist[y] == dist[x]) {
        return Recognition::reject(RejectReason::kNotBipartite);
      }
    }
  }
  if (queue.size() != order) return Recognition::reject(RejectReason::kSplitNotMatching);

  std::vector<bool> used(order, false);
  used[0] = true;
  for (std::size_t idx = 1; idx < order; ++idx) {
    Vertex x = queue[idx];
    std::uint32_t lower = 0;
    Vertex combined = 0;
    for (Vertex y : g.neighbors(x)) {
      if (y == (*mate)[x] || dist[y] + 1 != dist[x]) continue;
      ++lower;
      combined |= label[y];
    }
    if (dist[x] > 1) label[x] = combined;
    if (lower != dist[x] || static_cast<std::uint32_t>(std::popcount(label[x])) != dist[x] ||
        label[x] >= order || used[label[x]]) {
      return Recognition::reject(RejectReason::kSplitNotMatching);
    }
    used[label[x]] = true;
  }
  for (Vertex x = 0; x < order; ++x) {
    for (Vertex y : g.neighbors(x)) {
      if (y == (*mate)[x] || y < x) continue;
      if (!std::has_single_bit(label[x] ^ label[y])) return Recognition::reject(RejectReason::kSplitNotMatching);
    }
  }
  const Vertex all_ones = static_cast<Vertex>(order - 1);
  for (const Edge& d : diagonals) {
    if ((label[d.a] ^ label[d.b]) != all_ones) return Recognition::reject(RejectReason::kDiagonalMismatch);
  }

  Certificate c{FQParams{n}, FQParams{n}, std::move(label)};
  if (!verify_certificate(g, c)) return Recognition::reject(RejectReason::kDiagonalMismatch);
  return Recognition::accept(std::move(c));
}

inline Recognition recognize_folded_cube(const Graph& g) {
  if (g.vertex_count() == 0) return Recognition::reject(RejectReason::kEmpty);
  auto dimension = detail::folded_cube_dimension(g);
  if (!dimension) {
    return Recognition::reject(std::has_single_bit(g.vertex_count()) ? RejectReason::kNotRegular
                                                                     : RejectReason::kWrongOrder);
  }
  if (connected_components(g).size() != 1) return Recognition::reject(RejectReason::kDisconnected);
  const std::uint32_t n = *dimension;
  if (n <= 2) {
    std::vector<Vertex> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), Vertex{0});
    Certificate c{FQParams{n}, FQParams{n}, std::move(identity)};
    if (!verify_certificate(g, c)) return Recognition::reject(RejectReason::kNotIsomorphic);
    return Recognition::accept(std::move(c));
  }
  DiagonalResult peeled = determine_diagonals(g);
  if (!peeled.state) return Recognition::reject(peeled.reason);
  return extend_fq(g, peeled.state->diagonals);
}

inline Recognition recognize(const Graph& g, FamilyTag family) {
  switch (family) {
    case FamilyTag::kIGraph: return recognize_i_graph(g);
    case FamilyTag::kDoubleGP: return recognize_dp(g);
    case FamilyTag::kFoldedCube: return recognize_folded_cube(g);
    case FamilyTag::kAuto: break;
  }
  if (g.vertex_count() == 0) return Recognition::reject(RejectReason::kEmpty);
  std::optional<Recognition> cube;
  if (detail::folded_cube_dimension(g)) {
    cube = recognize_folded_cube(g);
    if (cube->accepted()) return *cube;
  }
  if (!is_regular(g, 3)) return cube ? *cube : Recognition::reject(RejectReason::kNotCubic);
  Recognition last = recognize_i_graph(g);
  if (last.accepted()) return last;
  if (g.vertex_count() % 4 == 0) {
    Recognition dp = recognize_dp(g);
    if (dp.accepted()) return dp;
  }
  return last;
}

}  // namespace cyclereg
