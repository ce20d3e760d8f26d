#include <gtest/gtest.h>

#include <random>

#include "cyclereg/cycles.hpp"
#include "cyclereg/families.hpp"
#include "cyclereg/recognition.hpp"
#include "oracles.hpp"

namespace {

using namespace cyclereg;

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

void expect_certified(const Graph& g, const Recognition& r, const FamilyParams& expected) {
  ASSERT_TRUE(r.accepted()) << to_string(expected) << " rejected: " << to_string(r.reason);
  EXPECT_EQ(r.certificate->canonical_params, expected) << "got " << to_string(r.certificate->canonical_params);
  EXPECT_TRUE(verify_certificate(g, *r.certificate));
  // Independent check of the labeling against the generator.
  EXPECT_TRUE(oracle::is_isomorphism(g, generate(r.certificate->canonical_params), r.certificate->labeling));
}

TEST(IRecognitionTest, RoundTripUnderRelabeling) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t n = 3; n <= 30; ++n) {
    for (std::uint32_t j = 1; 2 * j < n; ++j) {
      for (std::uint32_t k = j; 2 * k < n; ++k) {
        IParams p{n, j, k};
        if (canonical_i_params(p) != p) continue;
        Graph g = oracle::shuffled(generate_i_graph(p), rng);
        expect_certified(g, recognize_i_graph(g), p);
      }
    }
  }
}

TEST(IRecognitionTest, NonCanonicalInputsReportCanonicalParameters) {
  Graph g = generate_i_graph({7, 3, 2});
  Recognition r = recognize_i_graph(g);
  expect_certified(g, r, canonical_i_params({7, 3, 2}));
}

TEST(IRecognitionTest, SmallAndDegenerateMembers) {
  expect_certified(generate_gp(3, 1), recognize_i_graph(generate_gp(3, 1)), IParams{3, 1, 1});
  expect_certified(generate_gp(5, 2), recognize_i_graph(generate_gp(5, 2)), IParams{5, 1, 2});
  // Equal steps: the rim cycles have the same length.
  expect_certified(generate_i_graph({5, 2, 2}), recognize_i_graph(generate_i_graph({5, 2, 2})),
                   canonical_i_params({5, 2, 2}));
  expect_certified(generate_i_graph({8, 3, 3}), recognize_i_graph(generate_i_graph({8, 3, 3})),
                   canonical_i_params({8, 3, 3}));
}

TEST(IRecognitionTest, ExtendWithTrueSpokes) {
  IParams p{12, 2, 3};
  Graph g = generate_i_graph(p);
  std::vector<Edge> spokes;
  for (std::uint32_t i = 0; i < p.n; ++i) spokes.push_back({i_u(p, i), i_w(p, i)});
  auto mate = matching_from_edges(g, spokes);
  ASSERT_TRUE(mate.has_value());
  expect_certified(g, extend_i(g, *mate), IParams{12, 2, 3});
}

// Every perfect matching of the Moebius-Kantor graph: the three images of the
// spoke set under automorphisms are certified, all others are rejected before
// a labeling is attempted because the remaining 2-factor has the wrong shape.
TEST(IRecognitionTest, EveryWrongMatchingOnMoebiusKantorIsRejected) {
  const Graph g = generate_i_graph({8, 1, 3});
  std::vector<Edge> current;
  std::vector<bool> used(g.vertex_count(), false);
  int accepted = 0;
  int rejected = 0;
  auto enumerate = [&](auto&& self) -> void {
    Vertex v = 0;
    while (v < g.vertex_count() && used[v]) ++v;
    if (v == g.vertex_count()) {
      auto mate = matching_from_edges(g, current);
      ASSERT_TRUE(mate.has_value());
      Recognition r = extend_i(g, *mate);
      if (r.accepted()) {
        ++accepted;
        EXPECT_TRUE(oracle::is_isomorphism(g, generate(r.certificate->canonical_params), r.certificate->labeling));
        // Accepted matchings are mapped onto the spokes of the target.
        Graph h = generate(r.certificate->canonical_params);
        for (const Edge& e : current) {
          EXPECT_EQ(h.role(r.certificate->labeling[e.a], r.certificate->labeling[e.b]), EdgeRole::spoke());
        }
      } else {
        ++rejected;
        EXPECT_EQ(r.reason, RejectReason::kCycleCollectionShape);
      }
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[v] = used[w] = true;
      current.push_back({v, w});
      self(self);
      current.pop_back();
      used[v] = used[w] = false;
    }
  };
  enumerate(enumerate);
  EXPECT_EQ(accepted, 3);
  EXPECT_EQ(rejected, 30);
}

TEST(IRecognitionTest, DisconnectedCopies) {
  Graph twice = disjoint_union(generate_gp(5, 2), generate_gp(5, 2));
  Recognition r = recognize_i_graph(twice);
  ASSERT_TRUE(r.accepted()) << to_string(r.reason);
  EXPECT_TRUE(verify_certificate(twice, *r.certificate));
  const auto& params = std::get<IParams>(r.certificate->canonical_params);
  EXPECT_EQ(params.n, 10u);
  EXPECT_EQ(connected_components(generate_i_graph(params)).size(), 2u);

  Graph mixed = disjoint_union(generate_gp(5, 2), generate_gp(5, 1));
  Recognition rm = recognize_i_graph(mixed);
  EXPECT_FALSE(rm.accepted());
  EXPECT_EQ(rm.reason, RejectReason::kComponentsDiffer);
}

TEST(IRecognitionTest, ConstantOctagonMembersAreExactlyTheStoredOnes) {
  std::vector<IParams> constant;
  for (std::uint32_t n = 3; n <= 26; ++n) {
    for (std::uint32_t j = 1; 2 * j < n; ++j) {
      for (std::uint32_t k = j; 2 * k < n; ++k) {
        IParams p{n, j, k};
        if (std::gcd(n, std::gcd(j, k)) != 1 || canonical_i_params(p) != p) continue;
        if (octagon_partition(generate_i_graph(p)).size() == 1) constant.push_back(p);
      }
    }
  }
  auto stored = constant_octagon_i_graphs();
  EXPECT_EQ(constant, std::vector<IParams>(stored.begin(), stored.end()));
}

TEST(DPRecognitionTest, RoundTripUnderRelabeling) {
  std::mt19937_64 rng(77);
  for (std::uint32_t n = 3; n <= 24; ++n) {
    for (std::uint32_t k = 1; 2 * k < n; ++k) {
      Graph g = oracle::shuffled(generate_dp({n, k}), rng);
      Recognition r = recognize_dp(g);
      ASSERT_TRUE(r.accepted()) << n << "," << k << ": " << to_string(r.reason);
      EXPECT_TRUE(verify_certificate(g, *r.certificate));
      const auto& got = std::get<DPParams>(r.certificate->canonical_params);
      EXPECT_EQ(got.n, n);
      // The answer is never worse than the twin rule.
      EXPECT_LE(got.k, canonical_dp_params({n, k}).k);
      EXPECT_TRUE(oracle::is_isomorphism(g, generate_dp(got), r.certificate->labeling));
    }
  }
}

TEST(DPRecognitionTest, NamedMembers) {
  expect_certified(generate_dp({10, 2}), recognize_dp(generate_dp({10, 2})), DPParams{10, 2});
  expect_certified(generate_dp({10, 3}), recognize_dp(generate_dp({10, 3})), DPParams{10, 2});
  // The dodecahedron is DP(5,2).
  expect_certified(generate_gp(10, 2), recognize_dp(generate_gp(10, 2)), DPParams{5, 2});
  // Extra isomorphism beyond the twin rule: the smaller certified k wins.
  expect_certified(generate_dp({14, 3}), recognize_dp(generate_dp({14, 3})), DPParams{14, 2});
}

TEST(DPRecognitionTest, OrderChecks) {
  EXPECT_EQ(recognize_dp(generate_gp(7, 2)).reason, RejectReason::kOrderNotDivisible);
  EXPECT_FALSE(recognize_dp(generate_gp(8, 3)).accepted());
}

TEST(FoldedCubeRecognitionTest, RoundTripUnderRelabeling) {
  std::mt19937_64 rng(9);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    Graph g = oracle::shuffled(generate_folded_cube({n}), rng);
    expect_certified(g, recognize_folded_cube(g), FQParams{n});
  }
}

TEST(FoldedCubeRecognitionTest, PeelingRecoversAPerfectMatching) {
  Graph g = generate_folded_cube({5});
  DiagonalResult d = determine_diagonals(g, true);
  ASSERT_TRUE(d.state.has_value()) << to_string(d.reason);
  EXPECT_EQ(d.state->diagonals.size(), 8u);  // half of the 16 vertices
  EXPECT_GT(d.state->invariant_checks, 0u);
  EXPECT_EQ(d.state->invariant_violations, 0u);
  auto mate = matching_from_edges(g, d.state->diagonals);
  ASSERT_TRUE(mate.has_value());
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if ((*mate)[e.a] != e.b) rest.push_back(e);
  }
  Graph h = Graph::from_edges(g.vertex_count(), rest);
  EXPECT_TRUE(is_regular(h, 4));
  EXPECT_TRUE(is_bipartite(h));
  EXPECT_TRUE(oracle::isomorphism(h, generate_hypercube(4)).has_value());
}

TEST(FoldedCubeRecognitionTest, BucketInvariantAcrossDimensions) {
  std::mt19937_64 rng(4);
  for (std::uint32_t n = 3; n <= 11; ++n) {
    DiagonalResult d = determine_diagonals(oracle::shuffled(generate_folded_cube({n}), rng), true);
    ASSERT_TRUE(d.state.has_value()) << n;
    EXPECT_EQ(d.state->invariant_violations, 0u) << n;
    EXPECT_EQ(d.state->diagonals.size(), std::size_t{1} << (n - 2));
  }
}

TEST(FoldedCubeRecognitionTest, CompleteGraphOnFourVertices) {
  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  DiagonalResult d = determine_diagonals(k4);
  ASSERT_TRUE(d.state.has_value());
  EXPECT_TRUE(matching_from_edges(k4, d.state->diagonals).has_value());
  expect_certified(k4, recognize_folded_cube(k4), FQParams{3});
}

TEST(FoldedCubeRecognitionTest, CompleteBipartiteIsTheFourFold) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 4; b < 8; ++b) edges.push_back({a, b});
  }
  Graph k44 = Graph::from_edges(8, edges);
  expect_certified(k44, recognize_folded_cube(k44), FQParams{4});
}

TEST(FoldedCubeRecognitionTest, NonComplementMatchingIsADiagonalMismatch) {
  Graph q3 = generate_hypercube(3);
  std::vector<Edge> matching = {{0, 3}, {1, 2}, {4, 7}, {5, 6}};
  std::vector<Edge> edges = q3.edges();
  edges.insert(edges.end(), matching.begin(), matching.end());
  Graph g = Graph::from_edges(8, edges);
  Recognition r = extend_fq(g, matching);
  EXPECT_FALSE(r.accepted());
  EXPECT_EQ(r.reason, RejectReason::kDiagonalMismatch);
}

TEST(FoldedCubeRecognitionTest, CirculantIsRejected) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 8; ++i) {
    edges.push_back({i, (i + 1) % 8});
    edges.push_back({i, (i + 2) % 8});
  }
  Graph c = Graph::from_edges(8, edges);
  EXPECT_FALSE(recognize_folded_cube(c).accepted());
  EXPECT_FALSE(recognize(c).accepted());
}

TEST(FoldedCubeRecognitionTest, SplitSetsHalveTheCube) {
  Graph q = generate_hypercube(5);
  SplitSets s = split_sets(q, 0, 4);
  EXPECT_EQ(s.closer_to_u.size(), 16u);
  EXPECT_EQ(s.closer_to_v.size(), 16u);
  for (Vertex v : s.closer_to_u) EXPECT_EQ(v & 4u, 0u);
  for (Vertex v : s.closer_to_v) EXPECT_EQ(v & 4u, 4u);
}

TEST(CertificateTest, MutatedLabelingFails) {
  Graph g = generate_gp(5, 2);
  Recognition r = recognize(g);
  ASSERT_TRUE(r.accepted());
  Certificate c = *r.certificate;
  EXPECT_TRUE(verify_certificate(g, c));
  std::swap(c.labeling[0], c.labeling[1]);
  EXPECT_FALSE(verify_certificate(g, c));
  c.labeling[1] = c.labeling[0];
  EXPECT_FALSE(verify_certificate(g, c));
  c.labeling.pop_back();
  EXPECT_FALSE(verify_certificate(g, c));
}

TEST(CertificateTest, FindIsomorphismAgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph a = oracle::random_cubic(12, rng);
    Graph b = trial % 2 ? oracle::shuffled(a, rng) : oracle::random_cubic(12, rng);
    if (connected_components(a).size() != 1 || connected_components(b).size() != 1) continue;
    auto fast = find_isomorphism(a, b);
    auto slow = oracle::isomorphism(a, b);
    EXPECT_EQ(fast.has_value(), slow.has_value());
    if (fast) {
      EXPECT_TRUE(oracle::is_isomorphism(a, b, *fast));
    }
  }
}

TEST(DispatchTest, AutoPicksTheRightFamily) {
  expect_certified(generate_folded_cube({6}), recognize(generate_folded_cube({6})), FQParams{6});
  expect_certified(generate_gp(7, 2), recognize(generate_gp(7, 2)), IParams{7, 1, 2});
  expect_certified(generate_dp({12, 5}), recognize(generate_dp({12, 5})), DPParams{12, 1});
  // Odd-order DP graphs are generalized Petersen graphs and dispatch there.
  expect_certified(generate_dp({9, 2}), recognize(generate_dp({9, 2})), IParams{18, 1, 4});
  EXPECT_EQ(recognize(Graph{}).reason, RejectReason::kEmpty);
  EXPECT_EQ(recognize(Graph::from_edges(3, {{0, 1}, {1, 2}})).reason, RejectReason::kNotCubic);
  EXPECT_EQ(recognize(generate_gp(5, 2), FamilyTag::kFoldedCube).accepted(), false);
}

// Random cubic graphs: anything accepted must really be the family member it
// claims to be.
TEST(RobustnessTest, NoFalseAcceptsOnRandomCubicGraphs) {
  std::mt19937_64 rng(123);
  int accepted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 8 + 2 * static_cast<std::size_t>(trial % 12);
    Graph g = oracle::random_cubic(n, rng);
    Recognition r = recognize(g);
    if (!r.accepted()) continue;
    ++accepted;
    Graph expected = generate(r.certificate->canonical_params);
    EXPECT_TRUE(verify_certificate(g, *r.certificate));
    EXPECT_TRUE(oracle::is_isomorphism(g, expected, r.certificate->labeling));
    if (n <= 14) {
      EXPECT_TRUE(oracle::isomorphism(g, expected).has_value());
    }
  }
  RecordProperty("accepted", accepted);
}

}  // namespace
