#pragma once

// Self-contained consistency report behind `cayley verify`.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/prufer.hpp"
#include "cayley/tree.hpp"

namespace cayley {

struct VerifyOptions {
  std::size_t n = 7;
  std::size_t exhaustive_max_n = 7;  // exhaustive checks run for m <= min(n, this)
  std::size_t random_cases = 200;    // seeded round trips at n when n exceeds the exhaustive bound
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxMatrixTreeCheckN = 12;

namespace detail {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name, std::size_t n, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name << " n=" << n;
    if (!detail.empty()) out_ << ' ' << detail;
    out_ << '\n';
    ++total_;
    if (!ok) ++failed_;
  }

  bool ok() const noexcept { return failed_ == 0; }
  std::size_t total() const noexcept { return total_; }
  std::size_t failed() const noexcept { return failed_; }

 private:
  std::ostream& out_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

inline void verify_exhaustive(Report& report, std::size_t m) {
  std::unordered_set<LabeledTree> trees;
  std::size_t code_round_trip_failures = 0;
  std::size_t tree_round_trip_failures = 0;
  std::vector<BigInt> histogram(m >= 2 ? std::size_t{1} << (m - 2) : 1, 0);
  for_each_tree(m, [&](const EnumeratedTree& item) {
    trees.insert(item.tree);
    if (encode(item.tree) != item.code) ++code_round_trip_failures;
    if (decode(encode(item.tree)) != item.tree) ++tree_round_trip_failures;
    if (m >= 2) ++histogram[branch_set_of(item.code).mask()];
  });
  const BigInt expected = closed_form(m);
  report.check(BigInt(trees.size()) == expected, "distinct-trees", m,
               std::to_string(trees.size()) + "/" + expected.str());
  report.check(code_round_trip_failures == 0, "encode-decode-codes", m,
               "failures=" + std::to_string(code_round_trip_failures));
  report.check(tree_round_trip_failures == 0, "decode-encode-trees", m,
               "failures=" + std::to_string(tree_round_trip_failures));
  if (m < 2) return;

  std::size_t histogram_mismatches = 0;
  for (std::uint64_t mask = 0; mask < histogram.size(); ++mask) {
    if (histogram[mask] != branch_set_weight(BranchSet::from_mask(m, mask))) ++histogram_mismatches;
  }
  report.check(histogram_mismatches == 0, "branch-set-histogram", m,
               "mismatches=" + std::to_string(histogram_mismatches));

  std::size_t prufer_failures = 0;
  std::unordered_set<LabeledTree> prufer_trees;
  PruferSequence p{m, std::vector<Vertex>(m - 2, 1)};
  for (;;) {
    LabeledTree t = prufer_decode(p);
    if (prufer_encode(t) != p) ++prufer_failures;
    prufer_trees.insert(std::move(t));
    std::size_t i = p.values.size();
    while (i > 0 && p.values[i - 1] == m) p.values[--i] = 1;
    if (i == 0) break;
    ++p.values[i - 1];
  }
  report.check(prufer_failures == 0, "prufer-round-trip", m,
               "failures=" + std::to_string(prufer_failures));
  report.check(prufer_trees == trees, "prufer-set-equality", m,
               std::to_string(prufer_trees.size()) + " trees");
}

}  // namespace detail

/// Prints one PASS/FAIL line per check; returns true when all pass.
inline bool run_verification(const VerifyOptions& opts, std::ostream& out) {
  detail::Report report(out);
  const std::size_t n = opts.n;
  const std::size_t exhaustive_top = std::min({n, opts.exhaustive_max_n, kMaxFullEnumerationN});

  for (std::size_t m = 2; m <= std::min(n, kMaxTraceSumN); ++m) {
    const BigInt traces = sum_over_traces(m);
    const BigInt telescoped = telescoped_product(m);
    const BigInt closed = closed_form(m);
    report.check(traces == telescoped && telescoped == closed, "identity-triangle", m,
                 traces.str() + "=" + telescoped.str() + "=" + closed.str());
  }
  for (std::size_t m = 1; m <= exhaustive_top; ++m) detail::verify_exhaustive(report, m);
  for (std::size_t m = 1; m <= std::min(n, kMaxMatrixTreeCheckN); ++m) {
    const BigInt det = matrix_tree_count(SimpleGraph::complete(m));
    report.check(det == closed_form(m), "matrix-tree-complete", m, det.str());
  }
  if (n > exhaustive_top && n >= 1) {
    TreeSampler sampler({n, opts.seed});
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opts.random_cases; ++i) {
      const Code c = sampler.sample_code();
      const LabeledTree t = decode(c);
      if (encode(t) != c || decode(encode(t)) != t) ++failures;
    }
    report.check(failures == 0, "random-round-trips", n,
                 std::to_string(opts.random_cases) + " cases, failures=" + std::to_string(failures));
  }
  out << (report.ok() ? "OK " : "FAILED ") << report.total() - report.failed() << "/" << report.total()
      << " checks passed\n";
  return report.ok();
}

}  // namespace cayley
