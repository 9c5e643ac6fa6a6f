#pragma once

// Exact tree counts by four independent routes:
//   closed_form         n^(n-2)
//   sum_over_traces     explicit sum of per-branch-set weights over all
//                       2^(n-2) branch sets
//   telescoped_product  prod_s ((s+1) + (n-s-1))
//   matrix_tree_count   Laplacian minor determinant (any simple graph)
// plus brute_force_spanning_trees as an oracle for the determinant.
//
// Everything is exact; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/tree.hpp"

namespace cayley {

/// The branch values k < n at which a new path begins. A branch event at
/// code position s corresponds to k = s + 1, so members lie in {2..n-1}.
class BranchSet {
 public:
  BranchSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    if (n < 2) throw Error(Errc::MalformedBranchSet, "n must be at least 2");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const std::size_t k = members_[i];
      if (k < 2 || k > n - 1) {
        throw Error(Errc::MalformedBranchSet,
                    "member " + std::to_string(k) + " outside 2.." + std::to_string(n - 1));
      }
      if (i > 0 && members_[i - 1] >= k) {
        throw Error(Errc::MalformedBranchSet, "members must be strictly increasing");
      }
    }
  }

  /// Bit s-1 set iff k = s+1 is a member.
  static BranchSet from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::size_t> members;
    for (std::size_t s = 1; s + 2 <= n; ++s) {
      if (mask >> (s - 1) & 1U) members.push_back(s + 1);
    }
    return BranchSet(n, std::move(members));
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  bool contains(std::size_t k) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), k);
  }

  std::uint64_t mask() const noexcept {
    std::uint64_t m = 0;
    for (std::size_t k : members_) m |= std::uint64_t{1} << (k - 2);
    return m;
  }

  friend bool operator==(const BranchSet&, const BranchSet&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

/// The branch set realized by a code: k = s+1 for every branch position s.
inline BranchSet branch_set_of(const Code& code) {
  detail::check_code(code);
  const std::size_t n = code.n < 2 ? 2 : code.n;
  std::vector<std::size_t> members;
  for (std::size_t s = 1; s <= code.values.size(); ++s) {
    if (code.values[s - 1] <= s) members.push_back(s + 1);
  }
  return BranchSet(n, std::move(members));
}

/// Factor contributed by position s: s+1 when a path starts there, else the
/// number of labels still free for an intermediate vertex.
inline std::size_t position_factor(std::size_t n, std::size_t s, bool branch) noexcept {
  return branch ? s + 1 : n - s - 1;
}

/// 1 for n in {1, 2}; n = 1 is included by convention.
inline BigInt closed_form(std::size_t n) {
  if (n <= 2) return 1;
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
}

inline BigInt branch_set_weight(const BranchSet& b) {
  BigInt w = 1;
  for (std::size_t s = 1; s + 2 <= b.n(); ++s) w *= position_factor(b.n(), s, b.contains(s + 1));
  return w;
}

inline constexpr std::size_t kMaxTraceSumN = 26;

namespace detail {

// Depth-first walk over membership decisions for s = 1..last; each leaf adds
// the weight of one branch set. Prefix products are shared along the walk.
inline void accumulate_traces(std::size_t n, std::size_t s, const BigInt& prefix, BigInt& total) {
  if (s + 2 > n) {
    total += prefix;
    return;
  }
  accumulate_traces(n, s + 1, prefix * position_factor(n, s, true), total);
  accumulate_traces(n, s + 1, prefix * position_factor(n, s, false), total);
}

}  // namespace detail

inline BigInt sum_over_traces(std::size_t n) {
  if (n < 2 || n > kMaxTraceSumN) {
    throw Error(Errc::SizeLimitExceeded,
                "sum_over_traces supports 2 <= n <= " + std::to_string(kMaxTraceSumN));
  }
  BigInt total = 0;
  detail::accumulate_traces(n, 1, BigInt(1), total);
  return total;
}

inline BigInt telescoped_product(std::size_t n) {
  if (n < 2) throw Error(Errc::SizeLimitExceeded, "telescoped_product needs n >= 2");
  BigInt p = 1;
  for (std::size_t s = 1; s + 2 <= n; ++s) p *= BigInt((s + 1) + (n - s - 1));
  return p;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Destroys `m`.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < size && m[pivot][k] == 0) ++pivot;
      if (pivot == size) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

/// Spanning trees of g via the Laplacian with vertex n's row and column removed.
inline BigInt matrix_tree_count(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t m = n - 1;
  std::vector<std::vector<BigInt>> lap(m, std::vector<BigInt>(m, 0));
  for (Edge e : g.edges()) {
    const std::size_t a = e.u - 1, b = e.v - 1;
    if (a < m) lap[a][a] += 1;
    if (b < m) lap[b][b] += 1;
    if (a < m && b < m) {
      lap[a][b] -= 1;
      lap[b][a] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

inline constexpr std::size_t kMaxBruteForceEdges = 20;

inline BigInt brute_force_spanning_trees(const SimpleGraph& g) {
  const auto& edges = g.edges();
  if (edges.size() > kMaxBruteForceEdges) {
    throw Error(Errc::SizeLimitExceeded, "brute force limited to " +
                                             std::to_string(kMaxBruteForceEdges) + " edges");
  }
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t need = n - 1;
  std::uint64_t count = 0;
  std::vector<std::size_t> parent(n + 1);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::uint32_t limit = std::uint32_t{1} << edges.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!(mask >> i & 1U)) continue;
      const std::size_t a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    // n-1 edges without a cycle span all n vertices.
    if (acyclic) ++count;
  }
  return count;
}

}  // namespace cayley
