#pragma once

// Generators for I-graphs, generalized Petersen graphs, double generalized
// Petersen graphs, hypercubes and folded cubes, together with the
// parameter-level isomorphisms between family members.
//
// Vertex numbering:
//   I(n,j,k):  u_i = i, w_i = n + i
//   DP(n,k):   u_i = i, w_i = n + i, x_i = 2n + i, y_i = 3n + i
//   Q_n, FQ_n: the integer whose bit b is position b+1 of the binary string

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclereg/graph.hpp"

namespace cyclereg {

class FamilyError : public std::invalid_argument {
 public:
  enum class Code { kParamOutOfRange, kOddN };

  FamilyError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] Code code() const noexcept { return code_; }

 private:
  Code code_;
};

struct IParams {
  std::uint32_t n = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  friend constexpr bool operator==(const IParams&, const IParams&) = default;
  friend constexpr auto operator<=>(const IParams&, const IParams&) = default;
};

struct DPParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  friend constexpr bool operator==(const DPParams&, const DPParams&) = default;
  friend constexpr auto operator<=>(const DPParams&, const DPParams&) = default;
};

struct FQParams {
  std::uint32_t n = 0;
  friend constexpr bool operator==(const FQParams&, const FQParams&) = default;
  friend constexpr auto operator<=>(const FQParams&, const FQParams&) = default;
};

std::string to_string(const IParams& p);
std::string to_string(const DPParams& p);
std::string to_string(const FQParams& p);

/// Non-negative residue of x modulo n.
[[nodiscard]] constexpr std::uint32_t mod(std::int64_t x, std::uint32_t n) noexcept {
  auto r = x % static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

/// Representative of ±x modulo n in [0, n/2].
[[nodiscard]] constexpr std::uint32_t fold(std::int64_t x, std::uint32_t n) noexcept {
  auto r = mod(x, n);
  return std::min(r, n - r);
}

// --- I-graphs --------------------------------------------------------------

[[nodiscard]] constexpr Vertex i_u(const IParams& p, std::int64_t i) noexcept { return mod(i, p.n); }
[[nodiscard]] constexpr Vertex i_w(const IParams& p, std::int64_t i) noexcept { return p.n + mod(i, p.n); }

/// Throws FamilyError(kParamOutOfRange) unless n >= 3 and 1 <= j,k < n/2.
void check_i_params(const IParams& p);

[[nodiscard]] Graph generate_i_graph(const IParams& p);
[[nodiscard]] inline Graph generate_gp(std::uint32_t n, std::uint32_t k) { return generate_i_graph({n, 1, k}); }

/// Canonical parameters of an I-graph together with the isomorphism that
/// realizes them: u_i -> u_{a i} (or w_{a i} when the rims are swapped).
struct CanonicalI {
  IParams params;
  std::uint32_t multiplier = 1;
  bool swapped = false;
};

[[nodiscard]] CanonicalI canonicalize_i(const IParams& p);
[[nodiscard]] inline IParams canonical_i_params(const IParams& p) { return canonicalize_i(p).params; }

/// Vertex map from I(p) onto I(c.params) induced by the canonicalization.
[[nodiscard]] std::vector<Vertex> canonical_i_map(const IParams& p, const CanonicalI& c);

// --- Double generalized Petersen graphs -------------------------------------

[[nodiscard]] constexpr Vertex dp_u(const DPParams& p, std::int64_t i) noexcept { return mod(i, p.n); }
[[nodiscard]] constexpr Vertex dp_w(const DPParams& p, std::int64_t i) noexcept { return p.n + mod(i, p.n); }
[[nodiscard]] constexpr Vertex dp_x(const DPParams& p, std::int64_t i) noexcept { return 2 * p.n + mod(i, p.n); }
[[nodiscard]] constexpr Vertex dp_y(const DPParams& p, std::int64_t i) noexcept { return 3 * p.n + mod(i, p.n); }

/// Throws FamilyError(kParamOutOfRange) unless n >= 3 and 1 <= k < n/2.
void check_dp_params(const DPParams& p);

[[nodiscard]] Graph generate_dp(const DPParams& p);

/// (n, n/2 - k) for even n, nothing for odd n.
[[nodiscard]] std::optional<DPParams> dp_even_twin(const DPParams& p);

/// Explicit isomorphism DP(n,k) -> DP(n, n/2-k) for even n: u, w fixed,
/// x_i -> x_{i+n/2}, y_i -> y_{i+n/2}.  Throws FamilyError(kOddN) for odd n.
[[nodiscard]] std::vector<Vertex> dp_twin_map(const DPParams& p);

/// Canonical representative under the even-n twin rule: min(k, n/2 - k).
[[nodiscard]] DPParams canonical_dp_params(const DPParams& p);

/// For odd n with gcd(n,k) = 1: the generalized Petersen graph G(2n, k')
/// isomorphic to DP(n,k), with k' the even solution of k k' = ±1 (mod n).
[[nodiscard]] std::optional<std::pair<std::uint32_t, std::uint32_t>> dp_gp_equivalent(const DPParams& p);

// --- Hypercubes and folded cubes --------------------------------------------

/// Q_n on 2^n vertices; edge role = differing bit position (1-based).
[[nodiscard]] Graph generate_hypercube(std::uint32_t n);

/// FQ_n: Q_{n-1} plus the complementary "diagonal" matching.  FQ_1 = K_1 and
/// FQ_2 = K_2 (the diagonal coincides with the single cube edge).
[[nodiscard]] Graph generate_folded_cube(const FQParams& p);

/// Longest supported folded-cube dimension (vertex ids must fit in 32 bits
/// and graphs must fit in memory).
inline constexpr std::uint32_t kMaxCubeDimension = 24;

/// Binary-string name of a cube vertex: character b is bit b.
[[nodiscard]] std::string cube_vertex_name(Vertex v, std::uint32_t bits);

// ---------------------------------------------------------------------------

inline std::string to_string(const IParams& p) {
  return "I(" + std::to_string(p.n) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}
inline std::string to_string(const DPParams& p) {
  return "DP(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
}
inline std::string to_string(const FQParams& p) { return "FQ_" + std::to_string(p.n); }

inline void check_i_params(const IParams& p) {
  if (p.n < 3) throw FamilyError(FamilyError::Code::kParamOutOfRange, "n must be at least 3");
  if (p.j < 1 || 2 * p.j >= p.n) {
    throw FamilyError(FamilyError::Code::kParamOutOfRange, "j must satisfy 1 <= j < n/2");
  }
  if (p.k < 1 || 2 * p.k >= p.n) {
    throw FamilyError(FamilyError::Code::kParamOutOfRange, "k must satisfy 1 <= k < n/2");
  }
}

inline Graph generate_i_graph(const IParams& p) {
  check_i_params(p);
  std::vector<RoledEdge> edges;
  edges.reserve(3 * static_cast<std::size_t>(p.n));
  std::vector<std::string> names(2 * static_cast<std::size_t>(p.n));
  for (std::uint32_t i = 0; i < p.n; ++i) {
    edges.push_back({{i_u(p, i), i_u(p, i + p.j)}, EdgeRole::outer()});
    edges.push_back({{i_u(p, i), i_w(p, i)}, EdgeRole::spoke()});
    edges.push_back({{i_w(p, i), i_w(p, i + p.k)}, EdgeRole::inner()});
    names[i_u(p, i)] = "u" + std::to_string(i);
    names[i_w(p, i)] = "w" + std::to_string(i);
  }
  return Graph::from_roled_edges(2 * static_cast<std::size_t>(p.n), edges, std::move(names));
}

inline CanonicalI canonicalize_i(const IParams& p) {
  CanonicalI best{p, 1, false};
  bool found = false;
  for (std::uint32_t a = 1; a < p.n; ++a) {
    if (std::gcd(a, p.n) != 1) continue;
    std::uint32_t j = fold(static_cast<std::int64_t>(a) * p.j, p.n);
    std::uint32_t k = fold(static_cast<std::int64_t>(a) * p.k, p.n);
    bool swapped = j > k;
    IParams candidate = swapped ? IParams{p.n, k, j} : IParams{p.n, j, k};
    if (!found || candidate < best.params) {
      best = {candidate, a, swapped};
      found = true;
    }
  }
  return best;
}

inline std::vector<Vertex> canonical_i_map(const IParams& p, const CanonicalI& c) {
  std::vector<Vertex> map(2 * static_cast<std::size_t>(p.n));
  for (std::uint32_t i = 0; i < p.n; ++i) {
    std::int64_t image = static_cast<std::int64_t>(c.multiplier) * i;
    map[i_u(p, i)] = c.swapped ? i_w(c.params, image) : i_u(c.params, image);
    map[i_w(p, i)] = c.swapped ? i_u(c.params, image) : i_w(c.params, image);
  }
  return map;
}

inline void check_dp_params(const DPParams& p) {
  if (p.n < 3) throw FamilyError(FamilyError::Code::kParamOutOfRange, "n must be at least 3");
  if (p.k < 1 || 2 * p.k >= p.n) {
    throw FamilyError(FamilyError::Code::kParamOutOfRange, "k must satisfy 1 <= k < n/2");
  }
}

inline Graph generate_dp(const DPParams& p) {
  check_dp_params(p);
  std::vector<RoledEdge> edges;
  edges.reserve(6 * static_cast<std::size_t>(p.n));
  std::vector<std::string> names(4 * static_cast<std::size_t>(p.n));
  for (std::uint32_t i = 0; i < p.n; ++i) {
    edges.push_back({{dp_u(p, i), dp_u(p, i + 1)}, EdgeRole::outer()});
    edges.push_back({{dp_x(p, i), dp_x(p, i + 1)}, EdgeRole::outer()});
    edges.push_back({{dp_u(p, i), dp_w(p, i)}, EdgeRole::spoke()});
    edges.push_back({{dp_x(p, i), dp_y(p, i)}, EdgeRole::spoke()});
    edges.push_back({{dp_w(p, i), dp_y(p, i + p.k)}, EdgeRole::inner()});
    edges.push_back({{dp_y(p, i), dp_w(p, i + p.k)}, EdgeRole::inner()});
    auto index = std::to_string(i);
    names[dp_u(p, i)] = "u" + index;
    names[dp_w(p, i)] = "w" + index;
    names[dp_x(p, i)] = "x" + index;
    names[dp_y(p, i)] = "y" + index;
  }
  return Graph::from_roled_edges(4 * static_cast<std::size_t>(p.n), edges, std::move(names));
}

inline std::optional<DPParams> dp_even_twin(const DPParams& p) {
  if (p.n % 2 != 0) return std::nullopt;
  return DPParams{p.n, p.n / 2 - p.k};
}

inline std::vector<Vertex> dp_twin_map(const DPParams& p) {
  if (p.n % 2 != 0) throw FamilyError(FamilyError::Code::kOddN, "the twin map needs an even n");
  DPParams twin{p.n, p.n / 2 - p.k};
  std::vector<Vertex> map(4 * static_cast<std::size_t>(p.n));
  for (std::uint32_t i = 0; i < p.n; ++i) {
    map[dp_u(p, i)] = dp_u(twin, i);
    map[dp_w(p, i)] = dp_w(twin, i);
    map[dp_x(p, i)] = dp_x(twin, i + p.n / 2);
    map[dp_y(p, i)] = dp_y(twin, i + p.n / 2);
  }
  return map;
}

inline DPParams canonical_dp_params(const DPParams& p) {
  if (p.n % 2 != 0) return p;
  return {p.n, std::min(p.k, p.n / 2 - p.k)};
}

inline std::optional<std::pair<std::uint32_t, std::uint32_t>> dp_gp_equivalent(const DPParams& p) {
  if (p.n % 2 == 0 || std::gcd(p.n, p.k) != 1) return std::nullopt;
  for (std::uint32_t kp = 2; kp < p.n; kp += 2) {
    std::uint32_t r = mod(static_cast<std::int64_t>(p.k) * kp, p.n);
    if (r == 1 || r == p.n - 1) return std::pair{2 * p.n, kp};
  }
  return std::nullopt;
}

inline std::string cube_vertex_name(Vertex v, std::uint32_t bits) {
  std::string s(bits, '0');
  for (std::uint32_t b = 0; b < bits; ++b) {
    if ((v >> b) & 1u) s[b] = '1';
  }
  return s;
}

inline Graph generate_hypercube(std::uint32_t n) {
  if (n > kMaxCubeDimension) {
    throw FamilyError(FamilyError::Code::kParamOutOfRange,
                      "dimension must be at most " + std::to_string(kMaxCubeDimension));
  }
  std::size_t count = std::size_t{1} << n;
  std::vector<RoledEdge> edges;
  edges.reserve(count * n / 2);
  std::vector<std::string> names(count);
  for (Vertex v = 0; v < count; ++v) {
    names[v] = cube_vertex_name(v, n);
    for (std::uint32_t b = 0; b < n; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({{v, w}, EdgeRole::bit(static_cast<int>(b) + 1)});
    }
  }
  return Graph::from_roled_edges(count, edges, std::move(names));
}

inline Graph generate_folded_cube(const FQParams& p) {
  if (p.n == 0) throw FamilyError(FamilyError::Code::kParamOutOfRange, "dimension must be at least 1");
  if (p.n > kMaxCubeDimension + 1) {
    throw FamilyError(FamilyError::Code::kParamOutOfRange,
                      "dimension must be at most " + std::to_string(kMaxCubeDimension + 1));
  }
  std::uint32_t bits = p.n - 1;
  std::size_t count = std::size_t{1} << bits;
  Vertex all_ones = static_cast<Vertex>(count - 1);
  std::vector<RoledEdge> edges;
  edges.reserve(count * p.n / 2);
  std::vector<std::string> names(count);
  for (Vertex v = 0; v < count; ++v) {
    names[v] = cube_vertex_name(v, bits);
    for (std::uint32_t b = 0; b < bits; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({{v, w}, EdgeRole::bit(static_cast<int>(b) + 1)});
    }
    Vertex complement = v ^ all_ones;
    // For n = 2 the complement is the cube neighbour; keep the cube edge.
    if (v < complement && bits != 1) edges.push_back({{v, complement}, EdgeRole::diagonal()});
  }
  return Graph::from_roled_edges(count, edges, std::move(names));
}

}  // namespace cyclereg
