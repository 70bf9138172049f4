#include "tokeng/graph6.hpp"

#include <random>

#include "gtest/gtest.h"
#include "tokeng/explorer.hpp"
#include "tokeng/graph.hpp"

namespace tokeng {
namespace {

TEST(Graph6, KnownFixtures) {
  EXPECT_EQ(emit_graph6(make_base_graph(BaseKind::complete, 2)), "A_");
  EXPECT_EQ(emit_graph6(Graph(1, {})), "@");
  EXPECT_EQ(emit_graph6(Graph(2, {})), "A?");
  EXPECT_EQ(emit_graph6(make_base_graph(BaseKind::complete, 3)), "Bw");
  EXPECT_EQ(emit_graph6(make_base_graph(BaseKind::complete, 4)), "C~");

  EXPECT_EQ(parse_graph6("A_"), make_base_graph(BaseKind::complete, 2));
  EXPECT_EQ(parse_graph6("@"), Graph(1, {}));
  EXPECT_EQ(parse_graph6("Bw"), make_base_graph(BaseKind::complete, 3));
  EXPECT_EQ(parse_graph6("C~"), make_base_graph(BaseKind::complete, 4));
}

TEST(Graph6, HeaderAndTrailingNewlineTolerated) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), make_base_graph(BaseKind::complete, 2));
  EXPECT_EQ(parse_graph6("A_\n"), make_base_graph(BaseKind::complete, 2));
  EXPECT_EQ(parse_graph6("A_\r\n"), make_base_graph(BaseKind::complete, 2));
}

TEST(Graph6, RoundTripAllSmallGraphs) {
  for (int order = 1; order <= 5; ++order) {
    for_each_labeled_graph(order, {}, [&](const Graph& g) {
      EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
    });
  }
}

TEST(Graph6, RoundTripRandomLargerGraphs) {
  std::mt19937 rng(60923);
  for (int round = 0; round < 80; ++round) {
    int order = 6 + static_cast<int>(rng() % 20);
    std::vector<Graph::Edge> edges;
    for (int a = 1; a <= order; ++a)
      for (int b = a + 1; b <= order; ++b)
        if (rng() % 100 < 35) edges.emplace_back(a, b);
    Graph g(order, std::move(edges));
    std::string text = emit_graph6(g);
    EXPECT_EQ(parse_graph6(text), g);
    EXPECT_EQ(emit_graph6(parse_graph6(text)), text);
  }
}

TEST(Graph6, ErrorsCarryByteOffsets) {
  try {
    parse_graph6("");
    FAIL() << "empty input accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset, 0u);
  }

  try {
    parse_graph6("~??");
    FAIL() << "long form accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset, 0u);
    EXPECT_NE(std::string(e.what()).find("long-form"), std::string::npos);
  }

  // order 3 needs exactly one data byte
  EXPECT_THROW(parse_graph6("B"), Graph6Error);
  EXPECT_THROW(parse_graph6("Bww"), Graph6Error);

  try {
    parse_graph6("B:");  // ':' is 58, below the printable range floor of 63
    FAIL() << "low data byte accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset, 1u);
    EXPECT_NE(std::string(e.what()).find("byte 1"), std::string::npos);
  }

  try {
    parse_graph6("\x1f");
    FAIL() << "low order byte accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset, 0u);
  }
}

TEST(Graph6, EmitRejectsLargeOrders) {
  EXPECT_NO_THROW(emit_graph6(Graph(62, {})));
  EXPECT_THROW(emit_graph6(Graph(63, {})), std::invalid_argument);
}

}  // namespace
}  // namespace tokeng
