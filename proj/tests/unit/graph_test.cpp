#include "admlab/graph.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace admlab {
namespace {

using testing::circle;
using testing::dumbbell;
using testing::single_vertex;
using testing::theta;

TEST(GraphParseTest, SingleVertexNoEdges) {
  const auto g = parse_graph("vertex v genus=2");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(genus(g), 2);
}

TEST(GraphParseTest, CommentsBlankLinesAndIntegerLengths) {
  const auto g = parse_graph("# header\n\nvertex a genus=0  # trailing\nvertex b genus=3\nedge e a b length=5\n");
  EXPECT_EQ(g.edges()[0].length, Rational(5));
  EXPECT_EQ(genus(g), 3);
}

TEST(GraphParseTest, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("vertex a genus=0\nedge e a b length=1\n"), 2u);  // unknown vertex
  EXPECT_EQ(line_of("vertex a genus=0\nvertex b genus=0\n\nedge e a b length=0\n"), 4u);
  EXPECT_EQ(line_of("vertex a genus=0\nedge e a a length=-1/2\n"), 2u);
  EXPECT_EQ(line_of("vertex a genus=x\n"), 1u);
  EXPECT_EQ(line_of("vertx a genus=0\n"), 1u);
  EXPECT_EQ(line_of("vertex a genus=0\nvertex a genus=1\n"), 2u);
  EXPECT_EQ(line_of("vertex a-b genus=0\n"), 1u);
  EXPECT_EQ(line_of("edge e a b length=1\n"), 1u);
}

TEST(GraphParseTest, RejectsDisconnectedAndEmpty) {
  EXPECT_THROW(parse_graph("vertex a genus=1\nvertex b genus=1\n"), ParseError);
  EXPECT_THROW(parse_graph("# nothing\n"), ParseError);
}

TEST(GraphParseTest, RoundTripIsExact) {
  const auto g = parse_graph(
      "vertex x genus=1\nvertex y genus=0\nedge p x y length=7/3\nedge q y y length=1/8\nedge r x y length=16\n");
  const std::string text = serialize_graph(g);
  EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  EXPECT_EQ(parse_graph(text).edges()[0].length, Rational(7, 3));
}

TEST(GraphTest, Genus) {
  EXPECT_EQ(genus(theta()), 2);
  EXPECT_EQ(genus(circle()), 2);
  EXPECT_EQ(genus(dumbbell()), 2);
}

TEST(GraphTest, CanonicalDivisor) {
  EXPECT_EQ(canonical_divisor(theta()).coefficients, (std::vector<long>{1, 1}));
  EXPECT_EQ(canonical_divisor(circle()).coefficients, (std::vector<long>{2}));  // loop counts twice
  EXPECT_EQ(canonical_divisor(dumbbell()).coefficients, (std::vector<long>{1, 1}));
  EXPECT_EQ(canonical_divisor(single_vertex(3)).degree(), 4);
  EXPECT_THROW(canonical_divisor(parse_graph("vertex v genus=0\n")), GraphError);
}

TEST(GraphTest, EdgeTypes) {
  EXPECT_EQ(edge_type(circle(), "c"), 0);
  EXPECT_EQ(edge_type(dumbbell(), "b"), 1);
  for (const char* e : {"a", "b", "c"}) EXPECT_EQ(edge_type(theta(), e), 0);
  // genus 5 split 2 | 3 across a bridge
  const auto g = parse_graph("vertex a genus=2\nvertex b genus=3\nedge e a b length=1\n");
  EXPECT_EQ(edge_type(g, "e"), 2);
  EXPECT_THROW(edge_type(g, "nope"), GraphError);
}

TEST(PointRefTest, ParseAndResolve) {
  const auto g = circle("3");
  EXPECT_EQ(PointRef::parse("vertex:v"), PointRef::at_vertex("v"));
  EXPECT_EQ(PointRef::parse("edge:c@1/2"), PointRef::on_edge("c", Rational(1, 2)));
  EXPECT_EQ(PointRef::parse("edge:c@2").to_string(), "edge:c@2");
  EXPECT_THROW(PointRef::parse("edge:c"), std::invalid_argument);
  EXPECT_THROW(PointRef::parse("node:v"), std::invalid_argument);
  EXPECT_THROW(g.resolve(PointRef::on_edge("c", Rational(3))), GraphError);
  EXPECT_THROW(g.resolve(PointRef::on_edge("c", Rational(0))), GraphError);
  EXPECT_THROW(g.resolve(PointRef::at_vertex("w")), GraphError);
  const Location loc = g.resolve(PointRef::on_edge("c", Rational(1)));
  EXPECT_FALSE(loc.is_vertex());
  EXPECT_EQ(loc.offset, Rational(1));
}

TEST(SubdivisionTest, SplitsEdgesAndPreservesLength) {
  const auto g = theta();
  const Subdivision s(g, {PointRef::on_edge("a", Rational(1, 3)), PointRef::on_edge("a", Rational(2, 3)),
                          PointRef::on_edge("c", Rational(1, 2)), PointRef::at_vertex("u")});
  EXPECT_EQ(s.graph().vertex_count(), 5u);
  EXPECT_EQ(s.graph().edge_count(), 6u);
  EXPECT_EQ(s.graph().total_length(), g.total_length());
  EXPECT_EQ(genus(s.graph()), genus(g));
  EXPECT_EQ(s.pieces(0).size(), 3u);
  EXPECT_EQ(s.mapped_points()[3], PointRef::at_vertex("u"));
  // vertices keep their indices
  EXPECT_EQ(s.graph().vertices()[0].id, "u");
  EXPECT_EQ(s.graph().vertices()[1].id, "w");
  // any point of the original maps consistently
  const PointRef p = s.map(PointRef::on_edge("a", Rational(1, 2)));
  const Location loc = s.graph().resolve(p);
  EXPECT_EQ(loc.offset, Rational(1, 6));
  EXPECT_EQ(s.map(PointRef::on_edge("a", Rational(2, 3))), s.mapped_points()[1]);
}

TEST(SubdivisionTest, MergesDuplicatesAndAvoidsNameClashes) {
  const auto g = parse_graph("vertex c_s0 genus=1\nvertex v genus=0\nedge c c_s0 v length=1\nedge c_p0 v c_s0 length=1\n");
  const Subdivision s(g, {PointRef::on_edge("c", Rational(1, 2)), PointRef::on_edge("c", Rational(1, 2))});
  EXPECT_EQ(s.graph().vertex_count(), 3u);
  EXPECT_EQ(s.mapped_points()[0], s.mapped_points()[1]);
  EXPECT_NE(s.mapped_points()[0].id(), "c_s0");
  EXPECT_EQ(genus(s.graph()), genus(g));
}

TEST(SubdivisionTest, LoopSubdivision) {
  const Subdivision s(circle(), {PointRef::on_edge("c", Rational(1, 4))});
  EXPECT_EQ(s.graph().edge_count(), 2u);
  EXPECT_EQ(canonical_divisor(s.graph()).coefficients, (std::vector<long>{2, 0}));
}

}  // namespace
}  // namespace admlab
