#include <gtest/gtest.h>

#include "sgach/error.hpp"
#include "sgach/graph.hpp"
#include "support/fixtures.hpp"

using namespace sgach;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an sgach::Error";
  return ErrorCode::io;
}

}  // namespace

TEST(Sign, ProductIsParity) {
  EXPECT_EQ(Sign::negative * Sign::negative, Sign::positive);
  EXPECT_EQ(Sign::negative * Sign::positive, Sign::negative);
  EXPECT_EQ(Sign::positive * Sign::positive, Sign::positive);
  EXPECT_EQ(flip(Sign::positive), Sign::negative);
  EXPECT_EQ(sign_token(Sign::negative), '-');
}

TEST(Graph2EC, EdgesAreNormalizedAndSorted) {
  Graph2EC g(4, {{3, 1, Sign::negative}, {0, 2, Sign::positive}, {2, 1, Sign::positive}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], (SignedEdge{0, 2, Sign::positive}));
  EXPECT_EQ(g.edges()[1], (SignedEdge{1, 2, Sign::positive}));
  EXPECT_EQ(g.edges()[2], (SignedEdge{1, 3, Sign::negative}));
  EXPECT_EQ(g.sign(3, 1), Sign::negative);
  EXPECT_FALSE(g.sign(0, 1).has_value());
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.negative_edge_count(), 1u);
  EXPECT_EQ(g.name(3), "v3");
  EXPECT_EQ(g.find("v2"), 2u);
  EXPECT_FALSE(g.find("nope"));
}

TEST(Graph2EC, NeighborsSortedById) {
  Graph2EC g(4, {{0, 3, Sign::negative}, {0, 1, Sign::positive}, {0, 2, Sign::positive}});
  auto nb = g.neighbors(0);
  ASSERT_EQ(nb.size(), 3u);
  EXPECT_EQ(nb[0].vertex, 1u);
  EXPECT_EQ(nb[2].vertex, 3u);
  EXPECT_EQ(nb[2].sign, Sign::negative);
}

TEST(Graph2EC, RejectsLoopsDuplicatesAndDigons) {
  EXPECT_EQ(code_of([] { Graph2EC(2, {{1, 1, Sign::positive}}); }), ErrorCode::invalid_graph);
  EXPECT_EQ(code_of([] { Graph2EC(2, {{0, 1, Sign::positive}, {1, 0, Sign::positive}}); }),
            ErrorCode::invalid_graph);
  try {
    Graph2EC(2, {{0, 1, Sign::positive}, {0, 1, Sign::negative}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("digon"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { Graph2EC(2, {{0, 2, Sign::positive}}); }), ErrorCode::invalid_graph);
}

TEST(Graph2EC, ValidatesNames) {
  EXPECT_EQ(code_of([] { Graph2EC(2, {}, {"a", "a"}); }), ErrorCode::invalid_graph);
  EXPECT_EQ(code_of([] { Graph2EC(2, {}, {"a", "b c"}); }), ErrorCode::invalid_graph);
  EXPECT_EQ(code_of([] { Graph2EC(2, {}, {"a", ""}); }), ErrorCode::invalid_graph);
  EXPECT_EQ(code_of([] { Graph2EC(2, {}, {"a"}); }), ErrorCode::invalid_graph);
}

TEST(Graph2EC, DegenerateGraphsAreLegal) {
  Graph2EC empty;
  EXPECT_EQ(empty.vertex_count(), 0u);
  Graph2EC one(1, {});
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_EQ(one.degree(0), 0u);
}

TEST(Graph2EC, CheckVertexThrows) {
  Graph2EC g(2, {});
  EXPECT_EQ(code_of([&] { g.check_vertex(2); }), ErrorCode::invalid_argument);
  EXPECT_NO_THROW(g.check_vertex(1));
}

TEST(Graph2EC, WithoutVertexShiftsIds) {
  auto g = fixtures::hexagon_2ec();
  auto h = g.without_vertex(*g.find("d"));
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_FALSE(h.find("d"));
  EXPECT_EQ(h.sign(*h.find("e"), *h.find("a")), Sign::positive);
  EXPECT_EQ(h.name(3), "e");
}

TEST(Graph2EC, UniversalVertex) {
  auto g = fixtures::path(3);
  auto h = g.with_universal_vertex("z", Sign::negative);
  EXPECT_EQ(h.vertex_count(), 4u);
  EXPECT_EQ(h.degree(3), 3u);
  EXPECT_EQ(h.sign(3, 0), Sign::negative);
  EXPECT_EQ(h.name(3), "z");
}

TEST(Graph2EC, WithSignsFollowsEdgeOrder) {
  auto g = fixtures::path(3);
  std::vector<Sign> signs{Sign::negative, Sign::positive};
  auto h = g.with_signs(signs);
  EXPECT_EQ(h.sign(0, 1), Sign::negative);
  EXPECT_EQ(h.sign(1, 2), Sign::positive);
  EXPECT_EQ(code_of([&] { g.with_signs(std::vector<Sign>{Sign::positive}); }),
            ErrorCode::invalid_argument);
}

TEST(UnsignedGraph, WrapsAllPositive) {
  UnsignedGraph u(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(u.edge_count(), 2u);
  EXPECT_EQ(u.all_positive().negative_edge_count(), 0u);
  EXPECT_EQ(u.edges()[1], (std::pair<VertexId, VertexId>{1, 2}));
  EXPECT_EQ(fixtures::hexagon_2ec().underlying().edge_count(), 6u);
  EXPECT_EQ(fixtures::hexagon_2ec().underlying().all_positive().negative_edge_count(), 0u);
}

TEST(Components, NumberedByLowestMember) {
  Graph2EC g(5, {{3, 4, Sign::positive}, {0, 2, Sign::negative}});
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(comp, (std::vector<std::size_t>{0, 1, 0, 2, 2}));
}

TEST(Graph2EC, EqualityComparesNamesAndSigns) {
  EXPECT_EQ(fixtures::up3(), fixtures::up3());
  EXPECT_FALSE(fixtures::up3() == fixtures::path(3, '+'));
}
