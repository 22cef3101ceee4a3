#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "modcert/error.hpp"
#include "modcert/graph.hpp"
#include "support.hpp"

namespace modcert {
namespace {

using testing::edge_list;

std::vector<std::int64_t> as_vector(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

Graph dimacs(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in, GraphFormat::Dimacs);
}

TEST(GraphLoad, PathFromEdgeList) {
  const Graph g = edge_list("n 3\n0 1\n1 2\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(as_vector(induced_degrees(g, VertexSet::all(3))), (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(GraphLoad, SingleEdge) {
  const Graph g = edge_list("0 1\n");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(GraphLoad, DimacsFiveCycle) {
  const Graph g = dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(as_vector(induced_degrees(g, VertexSet::all(5))), (std::vector<std::int64_t>(5, 2)));
  EXPECT_EQ(g.name(0), "1");
  EXPECT_EQ(*g.find("5"), 4u);
}

TEST(GraphLoad, NamedVerticesInFirstAppearanceOrder) {
  const Graph g = edge_list("# comment\nb a\nc\na c  # trailing\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.name(0), "b");
  EXPECT_EQ(g.name(1), "a");
  EXPECT_EQ(g.name(2), "c");
  EXPECT_TRUE(g.adjacent(*g.find("a"), *g.find("c")));
  EXPECT_EQ(g.degree(*g.find("b")), 1u);
}

TEST(GraphLoad, IntegerIdsKeepTheirValues) {
  const Graph g = edge_list("3 5\n");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.adjacent(3, 5));
  EXPECT_EQ(g.name(4), "4");
}

TEST(GraphLoad, DuplicateEdgesCollapse) {
  const Graph g = edge_list("0 1\n1 0\n0 1\n");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(GraphLoad, SelfLoopReportsLine) {
  try {
    edge_list("0 1\n# c\n2 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GraphLoad, MalformedEdgeLists) {
  EXPECT_THROW(edge_list("n 3\n0 3\n"), ParseError);
  EXPECT_THROW(edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(edge_list("n 3\na b\n"), ParseError);
  EXPECT_THROW(edge_list("n 100000\n"), ParseError);
}

TEST(GraphLoad, MalformedDimacs) {
  EXPECT_THROW(dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  EXPECT_THROW(dimacs("p edge 3 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(dimacs("p edge 3 1\nx 1 2\n"), ParseError);
  EXPECT_THROW(dimacs("c nothing\n"), ParseError);
  EXPECT_THROW(dimacs("p edge 2 1\ne 1 1\n"), ParseError);
}

TEST(GraphLoad, Fixtures) {
  const Graph c4 = load_graph_file(testing::fixture("c4.dimacs"), GraphFormat::Dimacs);
  EXPECT_EQ(c4.edge_count(), 4u);
  const Graph k33 = load_graph_file(testing::fixture("k33.txt"), GraphFormat::EdgeList);
  EXPECT_EQ(k33.order(), 6u);
  EXPECT_EQ(k33.edge_count(), 9u);
  EXPECT_THROW(load_graph_file(testing::fixture("missing.txt"), GraphFormat::EdgeList), ParseError);
}

TEST(GraphLoad, FormatNames) {
  EXPECT_EQ(parse_graph_format("edge-list"), GraphFormat::EdgeList);
  EXPECT_EQ(parse_graph_format("dimacs"), GraphFormat::Dimacs);
  EXPECT_FALSE(parse_graph_format("gml").has_value());
}

TEST(GraphBuild, RejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), InvalidInput);
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), InvalidInput);
}

TEST(VertexSetTest, Construction) {
  const VertexSet s(6, {4, 1, 3});
  EXPECT_EQ(std::vector<Vertex>(s.begin(), s.end()), (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(*s.index_of(3), 1u);
  EXPECT_FALSE(s.index_of(2).has_value());
  EXPECT_THROW(VertexSet(6, {1, 1}), InvalidInput);
  EXPECT_THROW(VertexSet(6, {6}), InvalidInput);
  const VertexSet t(6, {1, 2, 3, 4});
  EXPECT_TRUE(s.is_subset_of(t));
  EXPECT_EQ(t.minus(s), VertexSet(6, {2}));
  EXPECT_TRUE(VertexSet(6, {0, 5}).disjoint_from(s));
}

TEST(InducedDegrees, Examples) {
  EXPECT_EQ(as_vector(induced_degrees(testing::complete(3), VertexSet::all(3))),
            (std::vector<std::int64_t>{2, 2, 2}));
  const Graph p3 = testing::path(3);
  EXPECT_EQ(as_vector(induced_degrees(p3, VertexSet(3, {0, 2}))), (std::vector<std::int64_t>{0, 0}));
  const Graph pet = testing::petersen();
  EXPECT_EQ(as_vector(induced_degrees(pet, VertexSet::all(10))), (std::vector<std::int64_t>(10, 3)));
  EXPECT_THROW(induced_degrees(p3, VertexSet(4, {3})), InvalidInput);
}

TEST(Regularity, Examples) {
  const auto c5 = is_regular(testing::cycle(5), VertexSet::all(5));
  EXPECT_TRUE(c5.regular);
  EXPECT_EQ(c5.degree, 2);
  EXPECT_FALSE(is_regular(testing::path(3), VertexSet::all(3)).regular);
  const auto indep = is_regular(testing::cycle(6), VertexSet(6, {0, 2, 4}));
  EXPECT_TRUE(indep.regular);
  EXPECT_EQ(indep.degree, 0);
  const auto empty = is_regular(testing::cycle(6), VertexSet(6, {}));
  EXPECT_TRUE(empty.regular);
  EXPECT_FALSE(empty.degree.has_value());
}

TEST(GraphProperty, HandshakeAndRegularity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> order(1, 40);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(order(rng), density(rng), rng);
    const IntVector full = induced_degrees(g, VertexSet::all(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(full(v), static_cast<std::int64_t>(g.degree(v)));

    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
      if (coin(rng)) members.push_back(v);
    const VertexSet s(g.order(), members);
    const IntVector deg = induced_degrees(g, s);
    EXPECT_EQ(deg.sum() % 2, 0);
    const std::set<std::int64_t> distinct(deg.data(), deg.data() + deg.size());
    EXPECT_EQ(is_regular(g, s).regular, distinct.size() <= 1);
  }
}

TEST(GraphProperty, RowsMatchNeighborLists) {
  std::mt19937_64 rng(3);
  const Graph g = testing::random_graph(70, 0.3, rng);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> from_row;
    g.row(v).for_each_set([&](std::size_t u) { from_row.push_back(static_cast<Vertex>(u)); });
    EXPECT_EQ(from_row, std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
  }
}

}  // namespace
}  // namespace modcert
