#pragma once

// Exhaustive parameter-grid scans and the published lists they are compared
// against.  Each per-cell function is pure, so callers may evaluate a grid in
// any order or in parallel.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclereg/cycle_tables.hpp"
#include "cyclereg/cycles.hpp"
#include "cyclereg/families.hpp"

namespace cyclereg {

/// A [1,lambda,8]-cycle regular I-graph as listed in the literature.
struct PublishedIGraph {
  IParams params;
  std::uint64_t lambda;
  std::string_view name;
};

/// The ten [1,lambda,8]-cycle regular I-graphs with their published lambda.
[[nodiscard]] std::span<const PublishedIGraph> published_regular_i_graphs();

/// The [1,lambda,8]-cycle regular DP parameter pairs (all with lambda 8).
[[nodiscard]] std::span<const DPParams> published_regular_dp_graphs();
inline constexpr std::uint64_t kPublishedDpLambda = 8;

/// Connected I-graph parameters with 3 <= n <= max_n that are canonical.
[[nodiscard]] std::vector<IParams> canonical_i_grid(std::uint32_t max_n);
/// All DP parameters with 3 <= n <= max_n.
[[nodiscard]] std::vector<DPParams> dp_grid(std::uint32_t max_n);

/// lambda if the graph is [1,lambda,8]-cycle regular.
[[nodiscard]] std::optional<std::uint64_t> edge_octagon_lambda(const Graph& g);

/// Measured sigma on one edge of each orbit: outer u0u_j, spoke u0w0, inner w0w_k.
[[nodiscard]] OctagonTriple measure_i_octagon(const IParams& p);
/// Measured sigma on u0u1, u0w0 and w0y_k.
[[nodiscard]] OctagonTriple measure_dp_octagon(const DPParams& p);

template <typename Params>
struct RegularHit {
  Params params;
  std::uint64_t lambda;
};

/// Compares scan hits with the published I-graph list restricted to n <= max_n.
/// Returns one line per discrepancy; empty means an exact match.
[[nodiscard]] std::vector<std::string> compare_with_published(std::span<const RegularHit<IParams>> hits,
                                                             std::uint32_t max_n);
[[nodiscard]] std::vector<std::string> compare_with_published(std::span<const RegularHit<DPParams>> hits,
                                                             std::uint32_t max_n);

struct FqCheck {
  std::uint32_t n = 0;
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  FqLambda expected;
  RegularityReport measured;

  [[nodiscard]] bool matches() const noexcept {
    if (expected.status == FqLambda::Status::kNotRegular) return !measured.regular;
    return measured.regular && measured.lambda == expected.lambda;
  }
};

[[nodiscard]] FqCheck check_folded_cube(std::uint32_t n, std::uint32_t l, std::uint32_t m);

[[nodiscard]] std::string describe(const FqCheck& c);

// ---------------------------------------------------------------------------

inline std::span<const PublishedIGraph> published_regular_i_graphs() {
  static constexpr std::array<PublishedIGraph, 10> kRows{{
      {{3, 1, 1}, 0, "triangular prism"},
      {{4, 1, 1}, 4, "3-cube"},
      {{5, 1, 2}, 8, "Petersen"},
      {{8, 1, 3}, 8, "Moebius-Kantor"},
      {{10, 1, 2}, 8, "dodecahedron"},
      {{10, 1, 3}, 8, "Desargues"},
      {{12, 1, 5}, 8, "Nauru"},
      {{13, 1, 5}, 8, ""},
      {{24, 1, 5}, 8, "F048A"},
      {{26, 1, 5}, 8, ""},
  }};
  return kRows;
}

inline std::span<const DPParams> published_regular_dp_graphs() {
  static constexpr std::array<DPParams, 3> kRows{{{5, 2}, {10, 2}, {10, 3}}};
  return kRows;
}

inline std::vector<IParams> canonical_i_grid(std::uint32_t max_n) {
  std::vector<IParams> grid;
  for (std::uint32_t n = 3; n <= max_n; ++n) {
    for (std::uint32_t j = 1; 2 * j < n; ++j) {
      for (std::uint32_t k = j; 2 * k < n; ++k) {
        IParams p{n, j, k};
        if (std::gcd(std::gcd(n, j), k) != 1 || canonical_i_params(p) != p) continue;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

inline std::vector<DPParams> dp_grid(std::uint32_t max_n) {
  std::vector<DPParams> grid;
  for (std::uint32_t n = 3; n <= max_n; ++n) {
    for (std::uint32_t k = 1; 2 * k < n; ++k) grid.push_back({n, k});
  }
  return grid;
}

inline std::optional<std::uint64_t> edge_octagon_lambda(const Graph& g) {
  RegularityReport r = regularity_scan(g, 1, 8);
  if (!r.regular) return std::nullopt;
  return r.lambda;
}

inline OctagonTriple measure_i_octagon(const IParams& p) {
  Graph g = generate_i_graph(p);
  return {octagon_value(g, i_u(p, 0), i_u(p, p.j)), octagon_value(g, i_u(p, 0), i_w(p, 0)),
          octagon_value(g, i_w(p, 0), i_w(p, p.k))};
}

inline OctagonTriple measure_dp_octagon(const DPParams& p) {
  Graph g = generate_dp(p);
  return {octagon_value(g, dp_u(p, 0), dp_u(p, 1)), octagon_value(g, dp_u(p, 0), dp_w(p, 0)),
          octagon_value(g, dp_w(p, 0), dp_y(p, p.k))};
}

namespace detail {

template <typename Params>
std::vector<std::string> compare_hits(std::span<const RegularHit<Params>> hits,
                                      const std::vector<std::pair<Params, std::uint64_t>>& expected) {
  std::vector<std::string> out;
  for (const auto& [params, lambda] : expected) {
    auto it = std::find_if(hits.begin(), hits.end(), [&](const auto& h) { return h.params == params; });
    if (it == hits.end()) {
      out.push_back(to_string(params) + ": listed as regular with lambda=" + std::to_string(lambda) +
                    ", not regular by scan");
    } else if (it->lambda != lambda) {
      out.push_back(to_string(params) + ": listed lambda=" + std::to_string(lambda) + ", scan finds lambda=" +
                    std::to_string(it->lambda));
    }
  }
  for (const auto& h : hits) {
    bool listed = std::any_of(expected.begin(), expected.end(), [&](const auto& e) { return e.first == h.params; });
    if (!listed) {
      out.push_back(to_string(h.params) + ": regular by scan with lambda=" + std::to_string(h.lambda) +
                    ", not listed");
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> compare_with_published(std::span<const RegularHit<IParams>> hits,
                                                      std::uint32_t max_n) {
  std::vector<std::pair<IParams, std::uint64_t>> expected;
  for (const auto& row : published_regular_i_graphs()) {
    if (row.params.n <= max_n) expected.emplace_back(row.params, row.lambda);
  }
  return detail::compare_hits<IParams>(hits, expected);
}

inline std::vector<std::string> compare_with_published(std::span<const RegularHit<DPParams>> hits,
                                                      std::uint32_t max_n) {
  std::vector<std::pair<DPParams, std::uint64_t>> expected;
  for (const auto& p : published_regular_dp_graphs()) {
    if (p.n <= max_n) expected.emplace_back(p, kPublishedDpLambda);
  }
  return detail::compare_hits<DPParams>(hits, expected);
}

inline FqCheck check_folded_cube(std::uint32_t n, std::uint32_t l, std::uint32_t m) {
  FqCheck c;
  c.n = n;
  c.l = l;
  c.m = m;
  c.expected = fq_lambda(n, l, m);
  c.measured = regularity_scan(generate_folded_cube({n}), l, m);
  return c;
}

inline std::string describe(const FqCheck& c) {
  std::string pattern = "FQ_" + std::to_string(c.n) + " [" + std::to_string(c.l) + ",lambda," + std::to_string(c.m) + "]";
  std::string expected = c.expected.status == FqLambda::Status::kNotRegular
                             ? "not regular"
                             : "lambda=" + std::to_string(c.expected.lambda);
  std::string measured = c.measured.regular ? "lambda=" + std::to_string(c.measured.lambda)
                                            : "not regular (" + std::to_string(c.measured.first_count) + " vs " +
                                                  std::to_string(c.measured.second_count) + ")";
  return pattern + ": expected " + expected + ", measured " + measured;
}

}  // namespace cyclereg
