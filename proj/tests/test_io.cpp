#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cyclereg/families.hpp"
#include "cyclereg/io.hpp"
#include "oracles.hpp"

namespace {

using namespace cyclereg;

std::size_t error_line(std::string_view text) {
  try {
    (void)parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

TEST(EdgeListTest, RoundTrip) {
  Graph g = generate_i_graph({12, 2, 3});
  std::string text = write_edge_list(g);
  Graph h = parse_edge_list(text);
  EXPECT_EQ(g, h);
  EXPECT_EQ(write_edge_list(h), text);
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# triangle\n3 3\n\n0 1\n  # inner\n1 2\n2 0\n");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 7\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n0 1\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n2 2\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(error_line("3 3\n0 1\n1 2\n"), 3u);
}

TEST(Graph6Test, KnownEncodings) {
  // Reference strings from the graph6 format description and common tables.
  EXPECT_EQ(write_graph6(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), "C~");
  EXPECT_EQ(write_graph6(Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
  Graph petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.vertex_count(), 10u);
  EXPECT_EQ(petersen.edge_count(), 15u);
  EXPECT_TRUE(is_regular(petersen, 3));
  EXPECT_TRUE(oracle::isomorphism(petersen, generate_gp(5, 2)).has_value());
}

TEST(Graph6Test, RoundTripAcrossSizeForms) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0u, 1u, 2u, 10u, 62u, 63u, 64u, 200u, 300u}) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng() % 7 == 0) edges.push_back({a, b});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    std::string s = write_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << n;
    EXPECT_EQ(parse_graph(s + "\n"), g) << n;
  }
  EXPECT_EQ(write_graph6(Graph::from_edges(63, std::vector<Edge>{})).substr(0, 4), "~??~");
}

TEST(Graph6Test, HeaderAndMultipleLines) {
  std::istringstream in(">>graph6<<C~\nIheA@GUAo\n\n");
  auto graphs = read_graph6(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0].edge_count(), 6u);
  EXPECT_EQ(graphs[1].edge_count(), 15u);
}

TEST(Graph6Test, MalformedInput) {
  EXPECT_THROW((void)parse_graph6("C"), ParseError);     // ends early
  EXPECT_THROW((void)parse_graph6("C~~"), ParseError);   // trailing bytes
  EXPECT_THROW((void)parse_graph6("C\x7f"), ParseError);  // byte out of range
  EXPECT_THROW((void)parse_graph6("B@"), ParseError);    // padding bit set ("B" has 1 data bit)
  std::istringstream in("C~\nC\n");
  try {
    (void)read_graph6(in);
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(FormatTest, Sniffing) {
  EXPECT_EQ(sniff_format("# c\n3 0\n"), GraphFormat::kEdgeList);
  EXPECT_EQ(sniff_format("C~\n"), GraphFormat::kGraph6);
  EXPECT_EQ(sniff_format(">>graph6<<C~"), GraphFormat::kGraph6);
}

}  // namespace
