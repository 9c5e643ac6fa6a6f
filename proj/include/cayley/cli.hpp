#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or format error.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cayley/counting.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/error.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/prufer.hpp"
#include "cayley/text_format.hpp"
#include "cayley/tree.hpp"
#include "cayley/verify.hpp"

namespace cayley::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

class Inputs {
 public:
  explicit Inputs(std::istream& stdin_stream) : stdin_(stdin_stream) {}

  template <typename Fn>
  auto with_file(const std::string& path, Fn&& fn) {
    if (path == "-") return fn(stdin_);
    std::ifstream file(path);
    if (!file) throw Error(Errc::Format, "cannot open '" + path + "'");
    return fn(file);
  }

 private:
  std::istream& stdin_;
};

inline void require_n(std::size_t n) {
  if (n < 1) throw Error(Errc::Format, "n must be at least 1");
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Labeled tree codec, counting and sampling toolkit", "cayley"};
  app.require_subcommand(1);
  detail::Inputs inputs(in);

  std::size_t n = 0;
  std::string file;
  std::string code_text;
  std::string prufer_text;
  std::string rank_text;
  std::string from_text;
  std::string to_text;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::uint64_t samples = 0;
  std::size_t max_n = 7;
  Vertex vertex = 1;
  double critical = 0.0;
  bool use_prufer = false;

  auto* count_cmd = app.add_subcommand("count", "Print n^(n-2), the number of labeled trees on n vertices");
  count_cmd->add_option("n", n, "vertex count")->required();

  auto* count_graph_cmd = app.add_subcommand("count-graph", "Count spanning trees of a graph file (matrix-tree theorem)");
  count_graph_cmd->add_option("file", file, "graph file, '-' for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the counting identities and codec checks up to n");
  verify_cmd->add_option("n", n, "largest vertex count")->required();
  verify_cmd->add_option("--max-n", max_n, "largest n for exhaustive checks")->capture_default_str();

  auto* encode_cmd = app.add_subcommand("encode", "Encode a tree file as a path code (or Pruefer sequence)");
  encode_cmd->add_option("file", file, "tree file, '-' for stdin")->required();
  encode_cmd->add_flag("--prufer", use_prufer, "emit the Pruefer sequence (1-based labels)");

  auto* decode_cmd = app.add_subcommand("decode", "Decode a path code or Pruefer sequence to a tree file");
  decode_cmd->add_option("n", n, "vertex count")->required();
  auto* code_opt = decode_cmd->add_option("--code", code_text, "path code, comma-separated values in [0,n)");
  auto* prufer_opt = decode_cmd->add_option("--prufer", prufer_text, "Pruefer sequence, comma-separated labels in 1..n");
  code_opt->excludes(prufer_opt);
  prufer_opt->excludes(code_opt);

  auto* rank_cmd = app.add_subcommand("rank", "Print the rank of a tree file");
  rank_cmd->add_option("file", file, "tree file, '-' for stdin")->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "Print the tree of rank r on n vertices");
  unrank_cmd->add_option("n", n, "vertex count")->required();
  unrank_cmd->add_option("r", rank_text, "rank in [0, n^(n-2))")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List trees as rank<TAB>code<TAB>edges");
  enumerate_cmd->add_option("n", n, "vertex count")->required();
  enumerate_cmd->add_option("--from", from_text, "first rank (inclusive)");
  enumerate_cmd->add_option("--to", to_text, "last rank (exclusive)");

  auto* sample_cmd = app.add_subcommand("sample", "Draw uniform random trees");
  sample_cmd->add_option("n", n, "vertex count")->required();
  sample_cmd->add_option("--seed", seed, "generator seed")->required();
  sample_cmd->add_option("--count", count, "number of trees")->capture_default_str();

  auto* stats_cmd = app.add_subcommand("stats", "Degree histogram of one vertex");
  stats_cmd->add_option("n", n, "vertex count")->required();
  stats_cmd->add_option("--vertex", vertex, "vertex label")->required();
  auto* samples_opt = stats_cmd->add_option("--samples", samples, "sample this many trees instead of enumerating");
  auto* stats_seed_opt = stats_cmd->add_option("--seed", seed, "generator seed (required with --samples)");
  samples_opt->needs(stats_seed_opt);
  stats_seed_opt->needs(samples_opt);

  auto* chi2_cmd = app.add_subcommand("chi2", "Chi-square uniformity test of the sampler over all trees");
  chi2_cmd->add_option("n", n, "vertex count (at most 6)")->required();
  chi2_cmd->add_option("--samples", samples, "number of samples")->required();
  chi2_cmd->add_option("--seed", seed, "generator seed")->required();
  chi2_cmd->add_option("--critical", critical, "critical value")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*count_cmd) {
      detail::require_n(n);
      out << closed_form(n) << '\n';
    } else if (*count_graph_cmd) {
      const auto g = inputs.with_file(file, [](std::istream& s) { return text::read_graph(s); });
      out << matrix_tree_count(g) << '\n';
    } else if (*verify_cmd) {
      detail::require_n(n);
      VerifyOptions opts;
      opts.n = n;
      opts.exhaustive_max_n = max_n;
      return run_verification(opts, out) ? kSuccess : kVerificationFailed;
    } else if (*encode_cmd) {
      const auto t = inputs.with_file(file, [](std::istream& s) { return text::read_tree(s); });
      out << (use_prufer ? text::format_prufer(prufer_encode(t)) : text::format_code(encode(t))) << '\n';
    } else if (*decode_cmd) {
      detail::require_n(n);
      if (*prufer_opt) {
        out << text::format_tree(prufer_decode(text::parse_prufer(n, prufer_text)));
      } else if (*code_opt) {
        out << text::format_tree(decode(text::parse_code(n, code_text)));
      } else {
        throw Error(Errc::Format, "decode needs --code or --prufer");
      }
    } else if (*rank_cmd) {
      const auto t = inputs.with_file(file, [](std::istream& s) { return text::read_tree(s); });
      out << rank(t) << '\n';
    } else if (*unrank_cmd) {
      detail::require_n(n);
      out << text::format_tree(unrank(n, text::parse_bigint(rank_text)));
    } else if (*enumerate_cmd) {
      detail::require_n(n);
      auto emit = [&](const EnumeratedTree& item) {
        out << text::format_enumeration_line(item.rank, item.code, item.tree);
      };
      if (from_text.empty() && to_text.empty()) {
        for_each_tree(n, emit);
      } else {
        const BigInt lo = from_text.empty() ? BigInt(0) : text::parse_bigint(from_text);
        const BigInt hi = to_text.empty() ? code_space_size(n) : text::parse_bigint(to_text);
        for_each_tree(n, lo, hi, emit);
      }
    } else if (*sample_cmd) {
      detail::require_n(n);
      TreeSampler sampler({n, seed});
      for (std::uint64_t i = 0; i < count; ++i) {
        out << "# sample " << i << '\n' << text::format_tree(sampler.sample());
      }
    } else if (*stats_cmd) {
      const DegreeHistogram hist = *samples_opt ? sampled_degree_histogram(n, vertex, samples, seed)
                                                : exhaustive_degree_histogram(n, vertex);
      for (const auto& [d, c] : hist) out << d << '\t' << c << '\n';
    } else if (*chi2_cmd) {
      const ChiSquareResult r = chi_square_uniformity(n, samples, seed, critical);
      out << "statistic " << detail::format_double(r.statistic) << '\n'
          << "dof " << r.degrees_of_freedom << '\n'
          << "critical " << detail::format_double(critical) << '\n'
          << (r.pass ? "PASS" : "FAIL") << '\n';
      return r.pass ? kSuccess : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out.flush();
  return kSuccess;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace cayley::cli
