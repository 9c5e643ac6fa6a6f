#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/tree.hpp"

namespace cayley {

// ---------------------------------------------------------------------------
// Exhaustive enumeration

inline constexpr std::size_t kMaxFullEnumerationN = 9;
/// 9^7 = 4,782,969: the largest stream enumerate_trees will produce.
inline constexpr std::uint64_t kMaxEnumerationItems = 4'782'969;

struct EnumeratedTree {
  BigInt rank;
  Code code;
  LabeledTree tree;
};

namespace detail {

// Lexicographic successor in the code space; false when the code wraps.
inline bool next_code(Code& code) {
  for (std::size_t i = code.values.size(); i-- > 0;) {
    if (++code.values[i] < code.n) return true;
    code.values[i] = 0;
  }
  return false;
}

}  // namespace detail

/// Visits the trees with ranks in [lo, hi) in ascending rank order.
inline void for_each_tree(std::size_t n, const BigInt& lo, const BigInt& hi,
                          const std::function<void(const EnumeratedTree&)>& visit) {
  if (n < 1) throw Error(Errc::SizeLimitExceeded, "n must be at least 1");
  const BigInt total = code_space_size(n);
  if (lo < 0 || hi < lo || hi > total) {
    throw Error(Errc::RankOutOfRange, "range [" + lo.str() + ", " + hi.str() +
                                          ") not inside [0, " + total.str() + ")");
  }
  if (hi - lo > kMaxEnumerationItems) {
    throw Error(Errc::SizeLimitExceeded, "range of " + BigInt(hi - lo).str() +
                                             " trees exceeds the enumeration limit of " +
                                             std::to_string(kMaxEnumerationItems));
  }
  if (lo == hi) return;
  EnumeratedTree item{lo, code_unrank(n, lo), trivial_tree(1)};
  for (;;) {
    item.tree = decode(item.code);
    visit(item);
    ++item.rank;
    if (item.rank == hi) break;
    detail::next_code(item.code);
  }
}

/// Full enumeration of all n^(n-2) trees; n <= 9.
inline void for_each_tree(std::size_t n, const std::function<void(const EnumeratedTree&)>& visit) {
  if (n < 1 || n > kMaxFullEnumerationN) {
    throw Error(Errc::SizeLimitExceeded, "full enumeration supports 1 <= n <= " +
                                             std::to_string(kMaxFullEnumerationN));
  }
  for_each_tree(n, BigInt(0), code_space_size(n), visit);
}

inline std::vector<EnumeratedTree> enumerate_trees(std::size_t n, const BigInt& lo, const BigInt& hi) {
  std::vector<EnumeratedTree> out;
  for_each_tree(n, lo, hi, [&](const EnumeratedTree& item) { out.push_back(item); });
  return out;
}

inline std::vector<EnumeratedTree> enumerate_trees(std::size_t n) {
  std::vector<EnumeratedTree> out;
  for_each_tree(n, [&](const EnumeratedTree& item) { out.push_back(item); });
  return out;
}

// ---------------------------------------------------------------------------
// Seeded sampling

/// splitmix64: state advances by the golden-ratio increment
/// 0x9E3779B97F4A7C15 and is finalized with the multipliers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). Blocks at or above the largest multiple of
  /// bound below 2^64 are rejected.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t excess = (0 - bound) % bound;  // 2^64 mod bound
    const std::uint64_t limit = 0 - excess;            // 2^64 - excess, or 0 meaning 2^64
    for (;;) {
      const std::uint64_t x = next();
      if (excess == 0 || x < limit) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

struct SamplerConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
};

/// Uniform labeled trees: a uniform code decodes to a uniform tree. Not safe
/// for concurrent use of one instance.
class TreeSampler {
 public:
  explicit TreeSampler(SamplerConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg.n < 1) throw Error(Errc::SizeLimitExceeded, "n must be at least 1");
  }

  const SamplerConfig& config() const noexcept { return cfg_; }

  Code sample_code() {
    Code code{cfg_.n, std::vector<std::uint32_t>(code_length(cfg_.n))};
    for (auto& v : code.values) v = static_cast<std::uint32_t>(rng_.below(cfg_.n));
    return code;
  }

  LabeledTree sample() { return decode(sample_code()); }

 private:
  SamplerConfig cfg_;
  SplitMix64 rng_;
};

inline LabeledTree sample_uniform(TreeSampler& sampler) { return sampler.sample(); }

// ---------------------------------------------------------------------------
// Verification statistics

using DegreeHistogram = std::map<std::size_t, std::uint64_t>;

inline DegreeHistogram exhaustive_degree_histogram(std::size_t n, Vertex v) {
  if (n < 2) throw Error(Errc::SizeLimitExceeded, "degree histogram needs n >= 2");
  detail::check_vertex(n, v);
  DegreeHistogram hist;
  for_each_tree(n, [&](const EnumeratedTree& item) { ++hist[degree(item.tree, v)]; });
  return hist;
}

inline DegreeHistogram sampled_degree_histogram(std::size_t n, Vertex v, std::uint64_t samples,
                                                std::uint64_t seed) {
  if (n < 2) throw Error(Errc::SizeLimitExceeded, "degree histogram needs n >= 2");
  detail::check_vertex(n, v);
  DegreeHistogram hist;
  TreeSampler sampler({n, seed});
  for (std::uint64_t i = 0; i < samples; ++i) ++hist[degree(sampler.sample(), v)];
  return hist;
}

/// Critical value for 124 degrees of freedom (n = 5, 125 cells). Provenance:
/// the chi-square(124) CDF at 186.0 is 0.99973 (scipy.stats.chi2.cdf), so a
/// correct sampler fails with probability about 2.7e-4.
inline constexpr double kChiSquareCritical124 = 186.0;

inline constexpr std::size_t kMaxChiSquareN = 6;

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  bool pass = false;
};

/// Pearson statistic of `observed` against equal expectation in every cell.
inline double chi_square_statistic(std::span<const std::uint64_t> observed) {
  if (observed.empty()) return 0.0;
  std::uint64_t total = 0;
  for (auto c : observed) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(observed.size());
  if (expected == 0.0) return 0.0;
  double stat = 0.0;
  for (auto c : observed) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

inline ChiSquareResult chi_square_verdict(std::span<const std::uint64_t> observed, double critical) {
  ChiSquareResult r;
  r.statistic = chi_square_statistic(observed);
  r.degrees_of_freedom = observed.empty() ? 0 : observed.size() - 1;
  r.pass = r.statistic < critical;
  return r;
}

/// Samples trees, bins them by rank (one cell per tree) and tests uniformity.
inline ChiSquareResult chi_square_uniformity(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                             double critical) {
  if (n < 1 || n > kMaxChiSquareN) {
    throw Error(Errc::SizeLimitExceeded,
                "chi-square uniformity supports 1 <= n <= " + std::to_string(kMaxChiSquareN));
  }
  const auto cells = static_cast<std::uint64_t>(code_space_size(n));
  if (samples < 100 * cells) {
    throw Error(Errc::SizeLimitExceeded, "need at least " + std::to_string(100 * cells) +
                                             " samples for " + std::to_string(cells) + " cells");
  }
  std::vector<std::uint64_t> observed(cells, 0);
  TreeSampler sampler({n, seed});
  for (std::uint64_t i = 0; i < samples; ++i) {
    ++observed[static_cast<std::size_t>(rank(sampler.sample()))];
  }
  return chi_square_verdict(observed, critical);
}

}  // namespace cayley
