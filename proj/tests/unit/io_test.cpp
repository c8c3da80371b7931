#include <gtest/gtest.h>

#include <sstream>

#include "dfvs/generators.hpp"
#include "dfvs/io.hpp"

namespace dfvs {
namespace {

Digraph parse(const std::string& text, Format f = Format::kAuto) {
  std::istringstream in(text);
  return read_graph(in, f);
}

TEST(Pace, ReadsAdjacencyLines) {
  Digraph d = parse("% triangle\n3 3 0\n2\n3\n1\n");
  EXPECT_EQ(d, Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(Pace, EmptyAdjacencyLinesAndTrailingBlank) {
  Digraph d = parse("3 1 0\n\n3\n\n\n");
  EXPECT_EQ(d, Digraph(3, {{1, 2}}));
}

TEST(Pace, Errors) {
  EXPECT_THROW(parse("3 2 0\n2\n\n\n"), ParseError);
  EXPECT_THROW(parse("2 1 0\n3\n\n", Format::kPace), ParseError);
  EXPECT_THROW(parse("2 1 0\nx\n\n", Format::kPace), ParseError);
  try {
    parse("2 1 0\n0\n\n", Format::kPace);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EdgeList, HeaderAndComments) {
  Digraph d = parse("# demo\ndfvs 4 2\n0 1\n3 2\n");
  EXPECT_EQ(d, Digraph(4, {{0, 1}, {3, 2}}));
  EXPECT_EQ(parse("1 0\n0 1\n"), Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_THROW(parse("dfvs 2 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse("dfvs 2 2\n0 1\n"), ParseError);
}

TEST(RoundTrip, BothFormats) {
  SplitMix64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(30);
    Digraph d = gen_random(n, rng.below(90), rng);
    std::stringstream pace, edges;
    write_pace(pace, d);
    write_edge_list(edges, d);
    EXPECT_EQ(read_graph(pace, Format::kPace), d);
    EXPECT_EQ(read_graph(edges), d);
  }
}

TEST(Solutions, VertexAndArcFiles) {
  std::istringstream v("3\n1 % comment\n");
  EXPECT_EQ(read_vertex_solution(v, 3), (VertexList{2, 0}));
  std::istringstream bad("4\n");
  EXPECT_THROW(read_vertex_solution(bad, 3), ParseError);
  std::istringstream a("1 2\n# x\n2 1\n");
  EXPECT_EQ(read_arc_solution(a, 2), (std::vector<Arc>{{0, 1}, {1, 0}}));
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_format("pace"), Format::kPace);
  EXPECT_EQ(parse_format("edge-list"), Format::kEdgeList);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace dfvs
