#pragma once

// Closed-form predictions of 8-cycle structure.
//
// Every class of non-equivalent 8-cycles is stored as data: a contribution
// triple tau, an orbit-size rule gamma, and one or more "forms".  A form is a
// representative 8-cycle written symbolically as (rim, a, b), meaning the
// vertex of that rim with index a*j + b*k (mod n), plus the linear conditions
// a*j + b*k = c*n under which the representative closes up.  A form is
// present when one of its conditions holds and its eight vertices are
// distinct; a class present through two forms contributes twice.
//
// For DP graphs the outer step is 1, so j is fixed to 1.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclereg/families.hpp"

namespace cyclereg {

struct OctagonTriple {
  std::uint64_t sigma_outer = 0;
  std::uint64_t sigma_spoke = 0;
  std::uint64_t sigma_inner = 0;

  [[nodiscard]] constexpr bool constant() const noexcept {
    return sigma_outer == sigma_spoke && sigma_spoke == sigma_inner;
  }
  constexpr OctagonTriple& operator+=(const OctagonTriple& o) noexcept {
    sigma_outer += o.sigma_outer;
    sigma_spoke += o.sigma_spoke;
    sigma_inner += o.sigma_inner;
    return *this;
  }
  friend constexpr bool operator==(const OctagonTriple&, const OctagonTriple&) = default;
};

std::string to_string(const OctagonTriple& t);

enum class Rim : std::uint8_t { kU, kW, kX, kY };

struct SymbolicVertex {
  Rim rim;
  int a;  // coefficient of j
  int b;  // coefficient of k
};

/// a*j + b*k = c*n
struct LinearCondition {
  int a;
  int b;
  int c;
};

struct CycleForm {
  enum class Rule : std::uint8_t { kLinear, kDistinctSteps, kAlways };

  std::array<SymbolicVertex, 8> representative;
  Rule rule = Rule::kLinear;
  std::vector<LinearCondition> conditions;  // any one suffices (kLinear only)
};

/// Orbit size: `constant` if non-zero, else n * numerator / denominator.
struct OrbitSize {
  std::uint32_t numerator = 1;
  std::uint32_t denominator = 1;
  std::uint32_t constant = 0;

  [[nodiscard]] constexpr std::uint64_t at(std::uint32_t n) const noexcept {
    return constant != 0 ? constant : std::uint64_t{n} * numerator / denominator;
  }
};

struct CycleClass {
  std::string label;
  OctagonTriple tau;
  OrbitSize gamma;
  std::vector<CycleForm> forms;
};

struct ClassPresence {
  const CycleClass* cycle_class = nullptr;
  unsigned multiplicity = 0;

  [[nodiscard]] bool present() const noexcept { return multiplicity > 0; }
};

/// The nine classes C*, C0..C7 of I-graph 8-cycles.
[[nodiscard]] const std::vector<CycleClass>& i_graph_cycle_table();
/// The seven classes C*, C0..C5 of DP-graph 8-cycles.
[[nodiscard]] const std::vector<CycleClass>& dp_cycle_table();

[[nodiscard]] std::vector<ClassPresence> i_graph_cycle_classes(const IParams& p);
[[nodiscard]] OctagonTriple predict_i_octagon(const IParams& p);

[[nodiscard]] std::vector<ClassPresence> dp_cycle_classes(const DPParams& p);
[[nodiscard]] OctagonTriple predict_dp_octagon(const DPParams& p);

// --- Folded cubes -----------------------------------------------------------

struct FqLambda {
  enum class Status { kProven, kConjectured, kNotRegular };
  Status status = Status::kProven;
  std::uint64_t lambda = 0;
};

class UnsupportedPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lambda of FQ_n for the patterns (l,m) in {(1,4),(1,6),(2,6),(1,8)}.  The
/// (1,8) values are conjectural.  Throws UnsupportedPattern otherwise.
[[nodiscard]] FqLambda fq_lambda(std::uint32_t n, std::uint32_t l, std::uint32_t m);

// ---------------------------------------------------------------------------

inline std::string to_string(const OctagonTriple& t) {
  return "(" + std::to_string(t.sigma_outer) + "," + std::to_string(t.sigma_spoke) + "," +
         std::to_string(t.sigma_inner) + ")";
}

namespace detail {

constexpr SymbolicVertex U(int a, int b) { return {Rim::kU, a, b}; }
constexpr SymbolicVertex W(int a, int b) { return {Rim::kW, a, b}; }
constexpr SymbolicVertex X(int a, int b) { return {Rim::kX, a, b}; }
constexpr SymbolicVertex Y(int a, int b) { return {Rim::kY, a, b}; }

inline std::vector<CycleClass> make_i_graph_table() {
  using R = CycleForm::Rule;
  return {
      {"C*", {2, 4, 2}, {1, 1, 0},
       {{{W(0, 0), W(0, 1), U(0, 1), U(1, 1), W(1, 1), W(1, 0), U(1, 0), U(0, 0)}, R::kDistinctSteps, {}}}},
      {"C0", {1, 2, 1}, {1, 2, 0},
       {{{W(0, 0), W(0, 1), U(0, 1), U(1, 1), W(1, 1), W(1, 2), U(1, 2), U(2, 2)}, R::kLinear, {{2, 2, 1}}}}},
      {"C1", {1, 0, 0}, {1, 8, 0},
       {{{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), U(5, 0), U(6, 0), U(7, 0)}, R::kLinear,
         {{8, 0, 1}, {8, 0, 3}}}}},
      {"C2", {0, 0, 1}, {1, 8, 0},
       {{{W(0, 0), W(0, 1), W(0, 2), W(0, 3), W(0, 4), W(0, 5), W(0, 6), W(0, 7)}, R::kLinear,
         {{0, 8, 1}, {0, 8, 3}}}}},
      {"C3", {1, 2, 5}, {1, 1, 0},
       {{{W(0, 0), W(0, 1), W(0, 2), W(0, 3), W(0, 4), W(0, 5), U(0, 5), U(1, 5)}, R::kLinear,
         {{1, 5, 1}, {1, 5, 2}}},
        {{W(0, 0), W(0, 1), W(0, 2), W(0, 3), W(0, 4), W(0, 5), U(0, 5), U(-1, 5)}, R::kLinear,
         {{-1, 5, 1}, {-1, 5, 2}}}}},
      {"C4", {5, 2, 1}, {1, 1, 0},
       {{{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), U(5, 0), W(5, 0), W(5, 1)}, R::kLinear,
         {{5, 1, 1}, {5, 1, 2}}},
        {{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), U(5, 0), W(5, 0), W(5, -1)}, R::kLinear,
         {{5, -1, 2}, {5, -1, 1}, {5, -1, 0}}}}},
      {"C5", {2, 2, 4}, {1, 1, 0},
       {{{W(0, 0), W(0, 1), W(0, 2), W(0, 3), W(0, 4), U(0, 4), U(1, 4), U(2, 4)}, R::kLinear,
         {{2, 4, 1}, {1, 2, 1}}},
        {{W(0, 0), W(0, 1), W(0, 2), W(0, 3), W(0, 4), U(0, 4), U(-1, 4), U(-2, 4)}, R::kLinear,
         {{-2, 4, 1}}}}},
      {"C6", {4, 2, 2}, {1, 1, 0},
       {{{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), W(4, 0), W(4, 1), W(4, 2)}, R::kLinear,
         {{4, 2, 1}, {2, 1, 1}}},
        {{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), W(4, 0), W(4, -1), W(4, -2)}, R::kLinear,
         {{4, -2, 1}, {4, -2, 0}}}}},
      {"C7", {3, 2, 3}, {1, 1, 0},
       {{{W(0, 0), W(0, 1), W(0, 2), W(0, 3), U(0, 3), U(1, 3), U(2, 3), U(3, 3)}, R::kLinear,
         {{3, 3, 1}, {3, 3, 2}}},
        {{W(0, 0), W(0, 1), W(0, 2), W(0, 3), U(0, 3), U(-1, 3), U(-2, 3), U(-3, 3)}, R::kLinear,
         {{-3, 3, 1}, {-3, 3, 0}}}}},
  };
}

inline std::vector<CycleClass> make_dp_table() {
  using R = CycleForm::Rule;
  return {
      {"C*", {2, 4, 2}, {2, 1, 0},
       {{{W(0, 0), Y(0, 1), X(0, 1), X(1, 1), Y(1, 1), W(1, 0), U(1, 0), U(0, 0)}, R::kAlways, {}}}},
      {"C0", {1, 2, 1}, {1, 1, 0},
       {{{W(0, 0), Y(0, 1), X(0, 1), X(1, 1), Y(1, 1), W(1, 2), U(1, 2), U(2, 2)}, R::kLinear, {{2, 2, 1}}}}},
      {"C1", {1, 2, 1}, {1, 1, 0},
       {{{W(0, 0), Y(0, 1), X(0, 1), X(-1, 1), Y(-1, 1), W(-1, 2), U(-1, 2), U(-2, 2)}, R::kLinear,
         {{-1, 1, 0}}}}},
      {"C2", {1, 0, 0}, {1, 1, 2},
       {{{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), U(5, 0), U(6, 0), U(7, 0)}, R::kLinear, {{8, 0, 1}}}}},
      {"C3", {0, 0, 1}, {1, 4, 0},
       {{{W(0, 0), Y(0, 1), W(0, 2), Y(0, 3), W(0, 4), Y(0, 5), W(0, 6), Y(0, 7)}, R::kLinear,
         {{0, 8, 1}, {0, 8, 3}}}}},
      {"C4", {2, 2, 4}, {2, 1, 0},
       {{{W(0, 0), Y(0, 1), W(0, 2), Y(0, 3), W(0, 4), U(0, 4), U(1, 4), U(2, 4)}, R::kLinear,
         {{2, 4, 1}, {1, 2, 1}}},
        {{W(0, 0), Y(0, 1), W(0, 2), Y(0, 3), W(0, 4), U(0, 4), U(-1, 4), U(-2, 4)}, R::kLinear,
         {{-2, 4, 1}}}}},
      {"C5", {4, 2, 2}, {2, 1, 0},
       {{{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), W(4, 0), Y(4, 1), W(4, 2)}, R::kLinear, {{4, 2, 1}}},
        {{U(0, 0), U(1, 0), U(2, 0), U(3, 0), U(4, 0), W(4, 0), Y(4, -1), W(4, -2)}, R::kLinear,
         {{-4, 2, 0}}}}},
  };
}

inline bool representative_is_simple(const CycleForm& form, std::uint32_t n, std::int64_t j, std::int64_t k) {
  std::array<std::pair<Rim, std::uint32_t>, 8> seen{};
  for (std::size_t i = 0; i < form.representative.size(); ++i) {
    const auto& v = form.representative[i];
    seen[i] = {v.rim, mod(v.a * j + v.b * k, n)};
    for (std::size_t t = 0; t < i; ++t) {
      if (seen[t] == seen[i]) return false;
    }
  }
  return true;
}

inline bool form_present(const CycleForm& form, std::uint32_t n, std::int64_t j, std::int64_t k) {
  bool holds = false;
  switch (form.rule) {
    case CycleForm::Rule::kAlways: holds = true; break;
    case CycleForm::Rule::kDistinctSteps: holds = j != k && n > 4; break;
    case CycleForm::Rule::kLinear:
      for (const auto& c : form.conditions) holds = holds || c.a * j + c.b * k == std::int64_t{c.c} * n;
      break;
  }
  return holds && representative_is_simple(form, n, j, k);
}

inline std::vector<ClassPresence> evaluate_table(const std::vector<CycleClass>& table, std::uint32_t n,
                                                 std::int64_t j, std::int64_t k) {
  std::vector<ClassPresence> result;
  result.reserve(table.size());
  for (const auto& cls : table) {
    unsigned multiplicity = 0;
    for (const auto& form : cls.forms) multiplicity += form_present(form, n, j, k) ? 1 : 0;
    result.push_back({&cls, multiplicity});
  }
  return result;
}

inline OctagonTriple sum_contributions(std::span<const ClassPresence> classes) {
  OctagonTriple total;
  for (const auto& c : classes) {
    for (unsigned i = 0; i < c.multiplicity; ++i) total += c.cycle_class->tau;
  }
  return total;
}

}  // namespace detail

inline const std::vector<CycleClass>& i_graph_cycle_table() {
  static const std::vector<CycleClass> table = detail::make_i_graph_table();
  return table;
}

inline const std::vector<CycleClass>& dp_cycle_table() {
  static const std::vector<CycleClass> table = detail::make_dp_table();
  return table;
}

inline std::vector<ClassPresence> i_graph_cycle_classes(const IParams& p) {
  check_i_params(p);
  return detail::evaluate_table(i_graph_cycle_table(), p.n, p.j, p.k);
}

inline OctagonTriple predict_i_octagon(const IParams& p) {
  auto classes = i_graph_cycle_classes(p);
  return detail::sum_contributions(classes);
}

inline std::vector<ClassPresence> dp_cycle_classes(const DPParams& p) {
  check_dp_params(p);
  return detail::evaluate_table(dp_cycle_table(), p.n, 1, p.k);
}

inline OctagonTriple predict_dp_octagon(const DPParams& p) {
  auto classes = dp_cycle_classes(p);
  return detail::sum_contributions(classes);
}

inline FqLambda fq_lambda(std::uint32_t n, std::uint32_t l, std::uint32_t m) {
  using S = FqLambda::Status;
  const std::uint64_t N = n;
  if (l == 1 && m == 4) {
    if (n <= 2) return {S::kProven, 0};
    if (n == 4) return {S::kProven, 9};
    return {S::kProven, N - 1};
  }
  if (l == 1 && m == 6) {
    if (n <= 3) return {S::kProven, 0};
    if (n == 4) return {S::kProven, 36};
    if (n == 6) return {S::kProven, 200};
    return {S::kProven, 4 * (N - 2) * (N - 1)};
  }
  if (l == 2 && m == 6) {
    if (n <= 3) return {S::kProven, 0};
    if (n == 4) return {S::kNotRegular, 0};
    if (n == 6) return {S::kProven, 2};
    return {S::kProven, 4 * (N - 2)};
  }
  if (l == 1 && m == 8) {
    if (n <= 3) return {S::kConjectured, 0};
    if (n == 4) return {S::kConjectured, 36};
    if (n == 6) return {S::kConjectured, 3580};
    if (n == 8) return {S::kConjectured, 10794};
    auto x = static_cast<std::int64_t>(n);
    return {S::kConjectured, static_cast<std::uint64_t>(27 * x * x * x - 133 * x * x + 210 * x - 104)};
  }
  throw UnsupportedPattern("no folded-cube formula for [" + std::to_string(l) + ",lambda," +
                           std::to_string(m) + "]");
}

}  // namespace cyclereg
