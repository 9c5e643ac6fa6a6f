#include "cayley/path_codec.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/prufer.hpp"
#include "oracles.hpp"

namespace cayley {
namespace {

LabeledTree tree(std::size_t n, std::initializer_list<Edge> edges) { return validate_tree(n, edges); }

TEST(Decode, Examples) {
  EXPECT_EQ(decode({3, {0}}), tree(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(decode({3, {2}}), tree(3, {{1, 3}, {2, 3}}));
  EXPECT_EQ(decode({2, {}}), tree(2, {{1, 2}}));
  EXPECT_EQ(decode({4, {2, 2}}), tree(4, {{1, 3}, {2, 3}, {2, 4}}));
  EXPECT_EQ(decode({1, {}}).vertex_count(), 1u);
}

TEST(Decode, MalformedCode) {
  auto code_of_error = [](const Code& c) {
    try {
      decode(c);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Format;
  };
  EXPECT_EQ(code_of_error({4, {1}}), Errc::MalformedCode);
  EXPECT_EQ(code_of_error({4, {1, 2, 3}}), Errc::MalformedCode);
  EXPECT_EQ(code_of_error({4, {1, 4}}), Errc::MalformedCode);
  EXPECT_EQ(code_of_error({2, {0}}), Errc::MalformedCode);
}

TEST(Encode, Examples) {
  EXPECT_EQ(encode(tree(3, {{1, 2}, {2, 3}})).values, (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(encode(tree(4, {{1, 2}, {1, 3}, {1, 4}})).values, (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(encode(tree(4, {{1, 2}, {2, 3}, {3, 4}})).values, (std::vector<std::uint32_t>{1, 2}));
  EXPECT_TRUE(encode(tree(2, {{1, 2}})).values.empty());
}

// The library decoder agrees with a literal set-based transcription of the
// decoding rule, exhaustively for small n and on random codes for large n.
TEST(Decode, MatchesReferenceDecoder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_tree(n, [&](const EnumeratedTree& item) {
      ASSERT_EQ(item.tree.edges(), testing::reference_decode(n, item.code.values));
    });
  }
  for (std::size_t n : {20u, 100u, 300u}) {
    TreeSampler sampler({n, n});
    for (int i = 0; i < 100; ++i) {
      const Code c = sampler.sample_code();
      ASSERT_EQ(decode(c).edges(), testing::reference_decode(n, c.values));
    }
  }
}

TEST(Codec, ExhaustiveBijectionSmallN) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::vector<Edge>> decoded;
    std::size_t codes = 0;
    for_each_tree(n, [&](const EnumeratedTree& item) {
      ++codes;
      decoded.insert(item.tree.edges());
      ASSERT_EQ(encode(item.tree), item.code);
    });
    // Independent oracle: the set of all trees found by subset search.
    const auto all = testing::brute_force_trees(n);
    EXPECT_EQ(codes, all.size()) << "n=" << n;
    EXPECT_EQ(decoded, all) << "n=" << n;
    for (const auto& edges : all) {
      const auto t = validate_tree(n, edges);
      ASSERT_EQ(decode(encode(t)), t);
    }
  }
}

TEST(Codec, RandomTreeRoundTrips) {
  for (std::size_t n : {20u, 100u, 1000u}) {
    SplitMix64 rng(11 * n);
    for (int i = 0; i < 1000; ++i) {
      // Trees drawn through the Pruefer codec, so the tree side does not
      // depend on the path decoder.
      PruferSequence p{n, std::vector<Vertex>(n - 2)};
      for (auto& v : p.values) v = static_cast<Vertex>(rng.below(n) + 1);
      const LabeledTree t = prufer_decode(p);
      ASSERT_EQ(decode(encode(t)), t);

      Code c{n, std::vector<std::uint32_t>(n - 2)};
      for (auto& v : c.values) v = static_cast<std::uint32_t>(rng.below(n));
      ASSERT_EQ(encode(decode(c)), c);
    }
  }
}

TEST(Codec, BranchPositionsAndLabelsRespectConstruction) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_tree(n, [&](const EnumeratedTree& item) {
      const auto tr = trace_of_code(item.code);
      std::size_t last_k = 1;
      Vertex reserved = 2;
      std::set<Vertex> drawn{1};
      for (std::size_t s = 1; s <= tr.steps.size(); ++s) {
        if (const auto* b = std::get_if<BranchStep>(&tr.steps[s - 1])) {
          const std::size_t k = s + 1;
          ASSERT_GT(k, last_k);
          ASSERT_LT(k, n);
          ASSERT_LE(b->attach_index, s + 1);
          last_k = k;
          drawn.insert(reserved);
          reserved = 1;
          while (drawn.count(reserved)) ++reserved;
        } else {
          const Vertex label = std::get<LabelStep>(tr.steps[s - 1]).label;
          ASSERT_GT(label, reserved);
          drawn.insert(label);
        }
      }
    });
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace_of_code({3, {1}}).steps, (std::vector<TraceStep>{BranchStep{2}}));
  EXPECT_EQ(trace_of_code({3, {2}}).steps, (std::vector<TraceStep>{LabelStep{3}}));
  const Code c{4, {2, 2}};
  EXPECT_EQ(trace_of_code(c).steps, (std::vector<TraceStep>{LabelStep{3}, BranchStep{3}}));
  EXPECT_EQ(code_of_trace(trace_of_code(c)), c);
}

TEST(Trace, InverseOfCodeExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_tree(n, [&](const EnumeratedTree& item) {
      ASSERT_EQ(code_of_trace(trace_of_code(item.code)), item.code);
    });
  }
}

TEST(Trace, MalformedTrace) {
  auto error_of = [](const ConstructionTrace& tr) {
    try {
      code_of_trace(tr);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Format;
  };
  EXPECT_EQ(error_of({4, {BranchStep{1}}}), Errc::MalformedTrace);
  EXPECT_EQ(error_of({4, {BranchStep{3}, BranchStep{1}}}), Errc::MalformedTrace);  // index > s+1
  EXPECT_EQ(error_of({4, {LabelStep{2}, BranchStep{1}}}), Errc::MalformedTrace);   // reserved
  EXPECT_EQ(error_of({4, {LabelStep{1}, BranchStep{1}}}), Errc::MalformedTrace);   // drawn
  EXPECT_EQ(error_of({4, {LabelStep{3}, LabelStep{3}}}), Errc::MalformedTrace);    // drawn twice
  EXPECT_EQ(error_of({4, {LabelStep{5}, BranchStep{1}}}), Errc::MalformedTrace);   // range
  EXPECT_EQ(error_of({4, {BranchStep{0}, BranchStep{1}}}), Errc::MalformedTrace);
}

TEST(Rank, Examples) {
  EXPECT_EQ(unrank(3, 0), tree(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(unrank(2, 0), tree(2, {{1, 2}}));
  EXPECT_EQ(rank(unrank(4, 11)), 11);
  EXPECT_EQ(code_unrank(4, 11).values, (std::vector<std::uint32_t>{2, 3}));
}

TEST(Rank, OutOfRange) {
  EXPECT_THROW(unrank(4, 16), Error);
  EXPECT_THROW(unrank(4, -1), Error);
  EXPECT_THROW(unrank(2, 1), Error);
  try {
    unrank(3, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankOutOfRange);
  }
}

TEST(Rank, BijectionAndMonotoneExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_tree(n, [&](const EnumeratedTree& item) {
      ASSERT_EQ(rank(item.tree), item.rank);
      ASSERT_EQ(unrank(n, rank(item.tree)), item.tree);
    });
    // Lexicographic order of codes is rank order.
    const auto items = enumerate_trees(n);
    for (std::size_t i = 1; i < items.size(); ++i) {
      ASSERT_LT(items[i - 1].code.values, items[i].code.values);
      ASSERT_LT(code_rank(items[i - 1].code), code_rank(items[i].code));
    }
  }
}

TEST(Rank, LargeN) {
  TreeSampler sampler({500, 5});
  for (int i = 0; i < 20; ++i) {
    const auto t = sampler.sample();
    const BigInt r = rank(t);
    EXPECT_LT(r, code_space_size(500));
    EXPECT_EQ(unrank(500, r), t);
  }
}

}  // namespace
}  // namespace cayley
