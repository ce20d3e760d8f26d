// cyclereg: generate family graphs, analyse cycle regularity, recognise
// family members with certificates, reproduce the regularity tables and
// benchmark recognition.
//
// Exit codes: 0 success / accepted / all tables match,
//             1 rejected / discrepancy found,
//             2 usage, parameter or parse error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cyclereg/cyclereg.hpp"

namespace {

using namespace cyclereg;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

/// Evaluates f(i) for i in [0, count) on `threads` workers; results are
/// stored by index so the output does not depend on scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, const std::function<Result(std::size_t)>& f) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = f(i);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Loads a graph or reports "path:line: message" and returns nothing.
std::optional<Graph> load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ": " << std::string(e.what()).substr(std::string(e.what()).find(": ") + 2)
              << "\n";
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

std::string family_name(const FamilyParams& p) {
  if (std::holds_alternative<IParams>(p)) return "I-graph";
  if (std::holds_alternative<DPParams>(p)) return "DP graph";
  return "folded cube";
}

std::string path_string(const Path& path) {
  std::string s = "[";
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? " " : "") + std::to_string(path[i]);
  return s + "]";
}

// --- generate --------------------------------------------------------------------

struct GenerateOptions {
  std::string family;
  std::vector<std::uint32_t> params;
  std::string format = "edgelist";
  std::string out;
};

int run_generate(const GenerateOptions& o) {
  auto need = [&](std::size_t count) {
    if (o.params.size() != count) {
      throw FamilyError(FamilyError::Code::kParamOutOfRange,
                        "family '" + o.family + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Graph g;
  try {
    if (o.family == "i") {
      need(3);
      g = generate_i_graph({o.params[0], o.params[1], o.params[2]});
    } else if (o.family == "gp") {
      need(2);
      g = generate_gp(o.params[0], o.params[1]);
    } else if (o.family == "dp") {
      need(2);
      g = generate_dp({o.params[0], o.params[1]});
    } else if (o.family == "fq") {
      need(1);
      g = generate_folded_cube({o.params[0]});
    } else {
      need(1);
      g = generate_hypercube(o.params[0]);
    }
  } catch (const FamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::string text = o.format == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g);
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text)) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

// --- recognize -------------------------------------------------------------------

struct RecognizeOptions {
  std::string family = "auto";
  std::string input;
  bool certificate = false;
};

int run_recognize(const RecognizeOptions& o) {
  auto g = load_graph(o.input);
  if (!g) return kExitError;
  FamilyTag tag = o.family == "i"    ? FamilyTag::kIGraph
                  : o.family == "dp" ? FamilyTag::kDoubleGP
                  : o.family == "fq" ? FamilyTag::kFoldedCube
                                     : FamilyTag::kAuto;
  Recognition r = recognize(*g, tag);
  if (!r.accepted()) {
    std::cout << "not recognized: " << to_string(r.reason) << "\n";
    return kExitNegative;
  }
  const Certificate& c = *r.certificate;
  std::cout << family_name(c.canonical_params) << " " << to_string(c.canonical_params) << "\n";
  if (c.family != c.canonical_params) std::cout << "read as " << to_string(c.family) << "\n";
  if (o.certificate) {
    Graph h = generate(c.canonical_params);
    std::cout << "certificate " << (verify_certificate(*g, c) ? "verified" : "INVALID") << "\n";
    for (Vertex v = 0; v < c.labeling.size(); ++v) {
      std::cout << v << " " << (h.has_names() ? h.name(c.labeling[v]) : std::to_string(c.labeling[v])) << "\n";
    }
  }
  return kExitOk;
}

// --- analyze ---------------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  std::size_t l = 1;
  std::size_t m = 8;
  bool partition = false;
};

int run_analyze(const AnalyzeOptions& o) {
  auto g = load_graph(o.input);
  if (!g) return kExitError;
  if (o.l >= o.m) {
    std::cerr << "error: need l < m\n";
    return kExitError;
  }
  RegularityReport r = regularity_scan(*g, o.l, o.m);
  if (r.regular) {
    std::cout << "regular, lambda=" << r.lambda << "\n";
  } else {
    std::cout << "not regular: path " << path_string(r.first) << " lies on " << r.first_count << " " << o.m
              << "-cycles, path " << path_string(r.second) << " on " << r.second_count << "\n";
  }
  if (o.partition) {
    if (!is_regular(*g, 3)) {
      std::cerr << "error: the octagon partition needs a cubic graph\n";
      return kExitError;
    }
    for (const auto& [sigma, edges] : octagon_partition(*g)) {
      std::cout << "sigma=" << sigma << ": " << edges.size() << " edges\n";
    }
  }
  return kExitOk;
}

// --- verify-tables ---------------------------------------------------------------

struct VerifyOptions {
  std::string table;
  std::uint32_t max_n = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

int report(const std::vector<std::string>& discrepancies, const std::string& summary) {
  for (const auto& d : discrepancies) std::cout << "discrepancy: " << d << "\n";
  std::cout << summary << (discrepancies.empty() ? ": all match" : ": " + std::to_string(discrepancies.size()) +
                                                                      " discrepancies")
            << "\n";
  return discrepancies.empty() ? kExitOk : kExitNegative;
}

int run_verify_tables(const VerifyOptions& o) {
  if (o.table == "5") {
    std::uint32_t max_n = o.max_n ? o.max_n : 40;
    auto grid = canonical_i_grid(max_n);
    auto lambdas = parallel_map<std::optional<std::uint64_t>>(
        grid.size(), o.threads, [&](std::size_t i) { return edge_octagon_lambda(generate_i_graph(grid[i])); });
    std::vector<RegularHit<IParams>> hits;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (lambdas[i]) {
        hits.push_back({grid[i], *lambdas[i]});
        std::cout << "regular " << to_string(grid[i]) << " lambda=" << *lambdas[i] << "\n";
      }
    }
    return report(compare_with_published(hits, max_n),
                  "scanned " + std::to_string(grid.size()) + " I-graphs, found " + std::to_string(hits.size()));
  }
  if (o.table == "8") {
    std::uint32_t max_n = o.max_n ? o.max_n : 40;
    auto grid = dp_grid(max_n);
    auto lambdas = parallel_map<std::optional<std::uint64_t>>(
        grid.size(), o.threads, [&](std::size_t i) { return edge_octagon_lambda(generate_dp(grid[i])); });
    std::vector<RegularHit<DPParams>> hits;
    std::vector<DPParams> classes;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!lambdas[i]) continue;
      hits.push_back({grid[i], *lambdas[i]});
      DPParams canonical = canonical_dp_params(grid[i]);
      if (std::find(classes.begin(), classes.end(), canonical) == classes.end()) classes.push_back(canonical);
      std::cout << "regular " << to_string(grid[i]) << " lambda=" << *lambdas[i] << " (class "
                << to_string(canonical) << ")\n";
    }
    auto discrepancies = compare_with_published(hits, max_n);
    for (const auto& h : hits) {
      if (auto twin = dp_even_twin(h.params); twin && twin->k != h.params.k) {
        Certificate c{h.params, *twin, dp_twin_map(h.params)};
        bool ok = verify_certificate(generate_dp(h.params), c);
        std::cout << "twin map " << to_string(h.params) << " -> " << to_string(*twin) << ": "
                  << (ok ? "isomorphism" : "NOT an isomorphism") << "\n";
        if (!ok) discrepancies.push_back("twin map fails for " + to_string(h.params));
      }
    }
    return report(discrepancies, "scanned " + std::to_string(grid.size()) + " DP graphs, found " +
                                     std::to_string(hits.size()) + " in " + std::to_string(classes.size()) +
                                     " classes");
  }
  struct Pattern {
    const char* table;
    std::uint32_t l;
    std::uint32_t m;
    std::uint32_t first_n;
    std::uint32_t default_max;
  };
  static constexpr Pattern kPatterns[] = {
      {"fq4", 1, 4, 3, 9}, {"fq6", 1, 6, 3, 9}, {"fq26", 2, 6, 3, 9}, {"fq8conj", 1, 8, 4, 8}};
  for (const auto& pattern : kPatterns) {
    if (o.table != pattern.table) continue;
    std::uint32_t max_n = o.max_n ? o.max_n : pattern.default_max;
    std::vector<std::uint32_t> dims;
    for (std::uint32_t n = pattern.first_n; n <= max_n; ++n) dims.push_back(n);
    auto checks = parallel_map<FqCheck>(dims.size(), o.threads, [&](std::size_t i) {
      return check_folded_cube(dims[i], pattern.l, pattern.m);
    });
    std::vector<std::string> discrepancies;
    bool conjecture = pattern.m == 8;
    for (const auto& c : checks) {
      const char* verdict = c.matches() ? (conjecture ? "confirmed" : "match") : (conjecture ? "refuted" : "MISMATCH");
      std::cout << describe(c) << " -> " << verdict << "\n";
      if (!c.matches()) discrepancies.push_back(describe(c));
    }
    return report(discrepancies, std::string("checked ") + std::to_string(checks.size()) + " folded cubes");
  }
  std::cerr << "error: unknown table '" << o.table << "'\n";
  return kExitError;
}

// --- bench -----------------------------------------------------------------------

struct BenchOptions {
  std::string family = "i";
  std::string range;
  unsigned repeats = 3;
  unsigned inner = 5;
  std::uint64_t seed = 1;
};

std::vector<std::uint32_t> bench_sizes(const std::string& family, std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> sizes;
  if (family == "fq") {
    for (std::uint32_t n = lo; n <= hi; ++n) sizes.push_back(n);
  } else {
    for (std::uint64_t n = lo; n <= hi; n *= 2) sizes.push_back(static_cast<std::uint32_t>(n));
    if (sizes.empty() || sizes.back() != hi) sizes.push_back(hi);
  }
  return sizes;
}

Graph bench_graph(const std::string& family, std::uint32_t n) {
  if (family == "fq") return generate_folded_cube({n});
  if (family == "dp") return generate_dp({n, 3});
  return generate_i_graph({n, 2, 3});
}

int run_bench(const BenchOptions& o) {
  auto dots = o.range.find("..");
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<std::uint32_t>(std::stoul(o.range));
    } else {
      lo = static_cast<std::uint32_t>(std::stoul(o.range.substr(0, dots)));
      hi = static_cast<std::uint32_t>(std::stoul(o.range.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    std::cerr << "error: --n-range must look like A..B\n";
    return kExitError;
  }
  if (lo == 0 || lo > hi) {
    std::cerr << "error: empty --n-range\n";
    return kExitError;
  }
  FamilyTag tag = o.family == "fq" ? FamilyTag::kFoldedCube : o.family == "dp" ? FamilyTag::kDoubleGP : FamilyTag::kIGraph;
  std::mt19937_64 rng(o.seed);
  std::cout << "n,edges,median_ns,ns_per_edge\n";
  for (std::uint32_t n : bench_sizes(o.family, lo, hi)) {
    Graph base;
    try {
      base = bench_graph(o.family, n);
    } catch (const FamilyError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitError;
    }
    for (unsigned rep = 0; rep < o.repeats; ++rep) {
      std::vector<Vertex> perm(base.vertex_count());
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph g = relabel(base, perm);
      std::vector<std::int64_t> times;
      for (unsigned it = 0; it < std::max(1u, o.inner); ++it) {
        auto start = std::chrono::steady_clock::now();
        Recognition r = recognize(g, tag);
        auto stop = std::chrono::steady_clock::now();
        if (!r.accepted()) {
          std::cerr << "error: benchmark graph rejected (" << to_string(r.reason) << ")\n";
          return kExitNegative;
        }
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
      std::int64_t median = times[times.size() / 2];
      std::cout << n << "," << g.edge_count() << "," << median << ","
                << static_cast<double>(median) / static_cast<double>(g.edge_count()) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-regularity analysis and recognition of I-graphs, DP graphs and folded cubes"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a family graph");
  generate_cmd->add_option("family", gen.family, "i | gp | dp | fq | q")
      ->required()
      ->check(CLI::IsMember({"i", "gp", "dp", "fq", "q"}));
  generate_cmd->add_option("params", gen.params, "Family parameters (i: n j k, gp/dp: n k, fq/q: n)")->required();
  generate_cmd->add_option("--format", gen.format, "edgelist | graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  generate_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

  RecognizeOptions rec;
  auto* recognize_cmd = app.add_subcommand("recognize", "Recognise a family member and certify it");
  recognize_cmd->add_option("--family", rec.family, "auto | i | dp | fq")
      ->check(CLI::IsMember({"auto", "i", "dp", "fq"}));
  recognize_cmd->add_flag("--certificate", rec.certificate, "Print the vertex labeling");
  recognize_cmd->add_option("input", rec.input, "Edge list or graph6 file ('-' for stdin)")->required();

  AnalyzeOptions ana;
  auto* analyze_cmd = app.add_subcommand("analyze", "Check [l,lambda,m]-cycle regularity");
  analyze_cmd->add_option("input", ana.input, "Edge list or graph6 file ('-' for stdin)")->required();
  analyze_cmd->add_option("--l", ana.l, "Path length in edges")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--m", ana.m, "Cycle length")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--partition", ana.partition, "Print the octagon partition histogram");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify-tables", "Reproduce a regularity table by exhaustive scan");
  verify_cmd->add_option("--table", ver.table, "5 | 8 | fq4 | fq6 | fq26 | fq8conj")
      ->required()
      ->check(CLI::IsMember({"5", "8", "fq4", "fq6", "fq26", "fq8conj"}));
  verify_cmd->add_option("--max-n", ver.max_n, "Largest n to scan");
  verify_cmd->add_option("--threads", ver.threads, "Worker threads")->check(CLI::PositiveNumber);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time recognition; CSV on stdout");
  bench_cmd->add_option("--family", bench.family, "i | dp | fq")->check(CLI::IsMember({"i", "dp", "fq"}));
  bench_cmd->add_option("--n-range", bench.range, "Sizes A..B (doubling for i/dp, every dimension for fq)")
      ->required();
  bench_cmd->add_option("--repeats", bench.repeats, "Rows per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--inner", bench.inner, "Timed runs per row (median reported)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed for the random relabeling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*recognize_cmd) return run_recognize(rec);
    if (*analyze_cmd) return run_analyze(ana);
    if (*verify_cmd) return run_verify_tables(ver);
    if (*bench_cmd) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
