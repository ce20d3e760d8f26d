#include <gtest/gtest.h>

#include <random>

#include "cyclereg/cycles.hpp"
#include "cyclereg/families.hpp"
#include "oracles.hpp"

namespace {

using namespace cyclereg;

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out = {generate_gp(5, 2),          generate_gp(8, 3),          generate_i_graph({12, 2, 3}),
                            generate_dp({6, 1}),        generate_hypercube(3),      generate_folded_cube({4}),
                            generate_folded_cube({5}),  generate_i_graph({7, 2, 3})};
  std::mt19937_64 rng(5);
  out.push_back(oracle::random_cubic(16, rng));
  out.push_back(oracle::random_cubic(18, rng));
  return out;
}

TEST(CycleCountTest, EdgeCountsMatchEnumeration) {
  for (const Graph& g : sample_graphs()) {
    for (std::size_t m : {4u, 5u, 6u, 8u}) {
      auto cycles = oracle::cycles_of_length(g, m);
      for (const Edge& e : g.edges()) {
        const Vertex path[] = {e.a, e.b};
        ASSERT_EQ(count_cycles_through_path(g, path, m), oracle::cycles_containing(cycles, {e.a, e.b}))
            << "m=" << m << " edge " << e.a << "-" << e.b;
      }
    }
  }
}

TEST(CycleCountTest, LongerPathsVerticesAndCensus) {
  for (const Graph& g : sample_graphs()) {
    auto cycles = oracle::cycles_of_length(g, 6);
    EXPECT_EQ(count_cycles_through_path(g, std::span<const Vertex>{}, 6), cycles.size());
    for (Vertex v = 0; v < std::min<std::size_t>(g.vertex_count(), 6); ++v) {
      const Vertex single[] = {v};
      std::uint64_t through = 0;
      for (const auto& c : cycles) through += std::count(c.begin(), c.end(), v);
      EXPECT_EQ(count_cycles_through_path(g, single, 6), through);
      // Two-edge paths centred at v.
      auto nb = g.neighbors(v);
      if (nb.size() >= 2) {
        const Vertex path[] = {nb[0], v, nb[1]};
        EXPECT_EQ(count_cycles_through_path(g, path, 6), oracle::cycles_containing(cycles, {nb[0], v, nb[1]}));
      }
    }
  }
}

// Summing sigma over all edges counts every 8-cycle eight times.
TEST(CycleCountTest, EdgeSumIsEightTimesCensus) {
  for (const Graph& g : sample_graphs()) {
    std::uint64_t sum = 0;
    for (const Edge& e : g.edges()) sum += octagon_value(g, e.a, e.b);
    EXPECT_EQ(sum, 8 * count_cycles_through_path(g, std::span<const Vertex>{}, 8));
  }
}

TEST(CycleCountTest, Errors) {
  Graph g = generate_gp(5, 2);
  const Vertex bad[] = {0, 2};
  EXPECT_THROW((void)count_cycles_through_path(g, bad, 8), CycleError);
  const Vertex long_path[] = {0, 1, 2, 3, 4};
  try {
    (void)count_cycles_through_path(g, long_path, 4);
    ADD_FAILURE();
  } catch (const CycleError& e) {
    EXPECT_EQ(e.code(), CycleError::Code::kPathTooLong);
  }
  const Vertex edge[] = {0, 1};
  EXPECT_EQ(count_cycles_through_path(g, edge, 2), 0u);
}

TEST(RegularityScanTest, AgreesWithEnumeration) {
  for (const Graph& g : sample_graphs()) {
    for (std::size_t m : {4u, 6u, 8u}) {
      auto cycles = oracle::cycles_of_length(g, m);
      std::set<std::uint64_t> values;
      for (const Edge& e : g.edges()) values.insert(oracle::cycles_containing(cycles, {e.a, e.b}));
      RegularityReport r = regularity_scan(g, 1, m);
      EXPECT_EQ(r.regular, values.size() == 1);
      if (r.regular) {
        EXPECT_EQ(r.lambda, *values.begin());
      } else {
        EXPECT_NE(r.first_count, r.second_count);
        EXPECT_EQ(r.first_count, oracle::cycles_containing(cycles, r.first));
        EXPECT_EQ(r.second_count, oracle::cycles_containing(cycles, r.second));
      }
    }
  }
}

TEST(RegularityScanTest, KnownValues) {
  EXPECT_EQ(regularity_scan(generate_gp(5, 2), 1, 8).lambda, 8u);
  EXPECT_TRUE(regularity_scan(generate_gp(5, 2), 1, 8).regular);
  EXPECT_EQ(regularity_scan(generate_hypercube(3), 1, 4).lambda, 2u);
  EXPECT_FALSE(regularity_scan(generate_gp(7, 2), 1, 8).regular);
  // Vacuous: no 2-edge path in a single edge.
  RegularityReport vacuous = regularity_scan(Graph::from_edges(2, {{0, 1}}), 2, 6);
  EXPECT_TRUE(vacuous.regular);
  EXPECT_EQ(vacuous.lambda, 0u);
}

TEST(OctagonPartitionTest, GroupsEveryEdgeOnce) {
  Graph g = generate_i_graph({12, 2, 3});
  OctagonPartition part = octagon_partition(g);
  std::size_t total = 0;
  for (const auto& [sigma, edges] : part) {
    total += edges.size();
    for (const Edge& e : edges) EXPECT_EQ(octagon_value(g, e.a, e.b), sigma);
  }
  EXPECT_EQ(total, g.edge_count());
  EXPECT_THROW((void)octagon_partition(generate_hypercube(4)), CycleError);
}

}  // namespace
