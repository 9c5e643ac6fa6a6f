#include "cayley/prufer.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "cayley/enumeration.hpp"
#include "oracles.hpp"

namespace cayley {
namespace {

TEST(Prufer, EncodeExamples) {
  EXPECT_EQ(prufer_encode(validate_tree(4, {Edge{1, 2}, Edge{2, 3}, Edge{2, 4}})).values,
            (std::vector<Vertex>{2, 2}));
  EXPECT_EQ(prufer_encode(validate_tree(4, {Edge{1, 2}, Edge{1, 3}, Edge{1, 4}})).values,
            (std::vector<Vertex>{1, 1}));
  EXPECT_EQ(prufer_encode(validate_tree(4, {Edge{1, 2}, Edge{2, 3}, Edge{3, 4}})).values,
            (std::vector<Vertex>{2, 3}));
}

TEST(Prufer, DecodeExamples) {
  EXPECT_EQ(prufer_decode({4, {2, 2}}), validate_tree(4, {Edge{1, 2}, Edge{2, 3}, Edge{2, 4}}));
  EXPECT_EQ(prufer_decode({2, {}}), validate_tree(2, {Edge{1, 2}}));
  EXPECT_EQ(prufer_decode({4, {1, 1}}), validate_tree(4, {Edge{1, 2}, Edge{1, 3}, Edge{1, 4}}));
}

TEST(Prufer, MalformedSequence) {
  auto error_of = [](const PruferSequence& p) {
    try {
      prufer_decode(p);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Format;
  };
  EXPECT_EQ(error_of({4, {1}}), Errc::MalformedSequence);
  EXPECT_EQ(error_of({4, {1, 5}}), Errc::MalformedSequence);
  EXPECT_EQ(error_of({4, {0, 1}}), Errc::MalformedSequence);
  EXPECT_EQ(error_of({1, {}}), Errc::MalformedSequence);
}

TEST(Prufer, RoundTripsAndDegreeLawExhaustive) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto trees = testing::brute_force_trees(n);
    std::set<std::vector<Vertex>> sequences;
    for (const auto& edges : trees) {
      const auto t = validate_tree(n, edges);
      const auto p = prufer_encode(t);
      ASSERT_EQ(p.values.size(), n - 2);
      ASSERT_EQ(prufer_decode(p), t);
      for (Vertex v = 1; v <= n; ++v) {
        const auto mult = std::count(p.values.begin(), p.values.end(), v);
        ASSERT_EQ(static_cast<std::size_t>(mult) + 1, degree(t, v));
      }
      sequences.insert(p.values);
    }
    // Injective into a space of size n^(n-2) with that many trees: every
    // sequence is hit, so encode(decode(p)) = p holds for all p.
    EXPECT_EQ(sequences.size(), testing::ipow(n, n - 2));
  }
}

TEST(Prufer, SameTreeSetAsPathCodec) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::vector<Edge>> from_path, from_prufer;
    for_each_tree(n, [&](const EnumeratedTree& item) { from_path.insert(item.tree.edges()); });
    for (const auto& edges : testing::brute_force_trees(n)) {
      from_prufer.insert(prufer_decode(prufer_encode(validate_tree(n, edges))).edges());
    }
    EXPECT_EQ(from_path, from_prufer);
    EXPECT_EQ(from_path.size(), testing::ipow(n, n - 2));
  }
}

}  // namespace
}  // namespace cayley
