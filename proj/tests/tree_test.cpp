#include "cayley/tree.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "cayley/enumeration.hpp"
#include "oracles.hpp"

namespace cayley {
namespace {

Errc error_of(std::size_t n, std::vector<Edge> edges) {
  try {
    validate_tree(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validate_tree to throw";
  return Errc::Format;
}

TEST(ValidateTree, UniqueTreeOnTwoVertices) {
  const auto t = validate_tree(2, {Edge{1, 2}});
  EXPECT_EQ(t.vertex_count(), 2u);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(ValidateTree, SingleVertexIsATree) {
  const auto t = validate_tree(1, std::vector<Edge>{});
  EXPECT_EQ(t.vertex_count(), 1u);
  EXPECT_TRUE(t.edges().empty());
  EXPECT_EQ(degree(t, 1), 0u);
}

TEST(ValidateTree, NormalizesAndSorts) {
  const auto t = validate_tree(4, {Edge{4, 2}, Edge{3, 1}, Edge{2, 1}});
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}}));
}

TEST(ValidateTree, EqualityIsEdgeSetEquality) {
  EXPECT_EQ(validate_tree(3, {Edge{2, 3}, Edge{1, 2}}), validate_tree(3, {Edge{2, 1}, Edge{3, 2}}));
  EXPECT_NE(validate_tree(3, {Edge{1, 2}, Edge{1, 3}}), validate_tree(3, {Edge{1, 2}, Edge{2, 3}}));
}

TEST(ValidateTree, Errors) {
  EXPECT_EQ(error_of(4, {{1, 2}, {3, 4}, {1, 2}}), Errc::DuplicateEdge);
  EXPECT_EQ(error_of(4, {{1, 2}, {3, 4}, {2, 1}}), Errc::DuplicateEdge);
  EXPECT_EQ(error_of(3, {{1, 4}, {2, 3}}), Errc::EdgeOutOfRange);
  EXPECT_EQ(error_of(3, {{0, 1}, {2, 3}}), Errc::EdgeOutOfRange);
  EXPECT_EQ(error_of(3, {{1, 1}, {2, 3}}), Errc::SelfLoop);
  EXPECT_EQ(error_of(4, {{1, 2}, {2, 3}}), Errc::WrongEdgeCount);
  EXPECT_EQ(error_of(3, {{1, 2}, {2, 3}, {1, 3}}), Errc::WrongEdgeCount);
  EXPECT_EQ(error_of(4, {{1, 2}, {2, 3}, {1, 3}}), Errc::Disconnected);
}

TEST(ValidateTree, NormalizationIsIdempotent) {
  TreeSampler sampler({30, 7});
  for (int i = 0; i < 50; ++i) {
    const auto t = sampler.sample();
    EXPECT_EQ(validate_tree(t.vertex_count(), t.edges()), t);
  }
}

TEST(PathBetween, Examples) {
  EXPECT_EQ(path_between(validate_tree(3, {Edge{1, 3}, Edge{2, 3}}), 1, 2),
            (std::vector<Vertex>{1, 3, 2}));
  EXPECT_EQ(path_between(validate_tree(2, {Edge{1, 2}}), 1, 2), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(path_between(validate_tree(4, {Edge{1, 2}, Edge{2, 3}, Edge{2, 4}}), 3, 4),
            (std::vector<Vertex>{3, 2, 4}));
}

TEST(PathBetween, SameVertex) {
  const auto t = validate_tree(3, {Edge{1, 2}, Edge{2, 3}});
  EXPECT_EQ(path_between(t, 3, 3), (std::vector<Vertex>{3}));
}

TEST(PathBetween, VertexOutOfRange) {
  const auto t = validate_tree(3, {Edge{1, 2}, Edge{2, 3}});
  try {
    path_between(t, 1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexOutOfRange);
  }
  EXPECT_THROW(path_between(t, 0, 1), Error);
}

// Every path is simple and walks along tree edges; checked over all trees on
// 6 vertices and all ordered vertex pairs.
TEST(PathBetween, AllPairsAreSimpleEdgeWalks) {
  for (const auto& edges : testing::brute_force_trees(6)) {
    const auto t = validate_tree(6, edges);
    for (Vertex u = 1; u <= 6; ++u) {
      for (Vertex v = 1; v <= 6; ++v) {
        const auto p = path_between(t, u, v);
        ASSERT_EQ(p.front(), u);
        ASSERT_EQ(p.back(), v);
        std::set<Vertex> seen(p.begin(), p.end());
        ASSERT_EQ(seen.size(), p.size());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          ASSERT_TRUE(std::binary_search(t.edges().begin(), t.edges().end(), normalized({p[i], p[i + 1]})));
        }
      }
    }
  }
}

TEST(Degree, Star) {
  const auto star = validate_tree(4, {Edge{1, 2}, Edge{1, 3}, Edge{1, 4}});
  EXPECT_EQ(degree(star, 1), 3u);
  EXPECT_EQ(degree(star, 2), 1u);
  EXPECT_THROW(degree(star, 5), Error);
}

TEST(Degree, SumIsTwiceEdgeCount) {
  TreeSampler sampler({40, 3});
  for (int i = 0; i < 20; ++i) {
    const auto t = sampler.sample();
    std::size_t sum = 0;
    for (Vertex v = 1; v <= 40; ++v) sum += degree(t, v);
    EXPECT_EQ(sum, 2u * 39u);
  }
}

TEST(SimpleGraph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(SimpleGraph(3, {Edge{1, 1}}), Error);
  EXPECT_THROW(SimpleGraph(3, {Edge{1, 2}, Edge{2, 1}}), Error);
  EXPECT_NO_THROW(SimpleGraph(4, {Edge{1, 2}, Edge{3, 4}}));
  EXPECT_EQ(SimpleGraph::complete(4).edges().size(), 6u);
}

}  // namespace
}  // namespace cayley
