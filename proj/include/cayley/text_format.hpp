#pragma once

// Text formats shared by the CLI:
//
//   tree / graph file   first line n, then one "u v" edge per line (1-based);
//                       '#' comment lines and blank lines are ignored
//   code / sequence     comma-separated decimals on one line, "" when empty
//   enumeration line    rank<TAB>code<TAB>u-v u-v ...
//
// Output is ASCII, newline-terminated and independent of the locale.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/path_codec.hpp"
#include "cayley/prufer.hpp"
#include "cayley/tree.hpp"

namespace cayley::text {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline std::uint64_t parse_uint(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::Format, "expected a non-negative integer for " + std::string(what) +
                                  ", got '" + std::string(token) + "'");
  }
  return value;
}

inline BigInt parse_bigint(std::string_view token) {
  token = detail::trim(token);
  if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(Errc::Format, "expected a decimal rank, got '" + std::string(token) + "'");
  }
  return BigInt(std::string(token));
}

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

inline EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  bool have_n = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_n) {
      out.n = static_cast<std::size_t>(parse_uint(body, "vertex count on line " + std::to_string(line_no)));
      have_n = true;
      continue;
    }
    const auto sep = body.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw Error(Errc::Format, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    const std::string_view a = body.substr(0, sep);
    const std::string_view b = detail::trim(body.substr(sep + 1));
    const std::string where = "edge endpoint on line " + std::to_string(line_no);
    const auto u = parse_uint(a, where);
    const auto v = parse_uint(b, where);
    if (u > UINT32_MAX || v > UINT32_MAX) {
      throw Error(Errc::EdgeOutOfRange, "line " + std::to_string(line_no) + ": label too large");
    }
    out.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_n) throw Error(Errc::Format, "missing vertex count line");
  return out;
}

inline LabeledTree read_tree(std::istream& in) {
  auto list = parse_edge_list(in);
  return validate_tree(list.n, list.edges);
}

inline SimpleGraph read_graph(std::istream& in) {
  auto list = parse_edge_list(in);
  return SimpleGraph(list.n, list.edges);
}

inline LabeledTree parse_tree(const std::string& s) {
  std::istringstream in(s);
  return read_tree(in);
}

template <typename EdgeRange>
std::string format_edge_list(std::size_t n, const EdgeRange& edges) {
  std::string out = std::to_string(n) + "\n";
  for (Edge e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline std::string format_tree(const LabeledTree& t) { return format_edge_list(t.vertex_count(), t.edges()); }

inline std::string format_graph(const SimpleGraph& g) { return format_edge_list(g.vertex_count(), g.edges()); }

inline std::vector<std::uint64_t> parse_values(std::string_view s) {
  std::vector<std::uint64_t> out;
  s = detail::trim(s);
  if (s.empty()) return out;
  for (;;) {
    const auto comma = s.find(',');
    out.push_back(parse_uint(detail::trim(s.substr(0, comma)), "sequence value"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename Values>
std::string format_values(const Values& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

inline Code parse_code(std::size_t n, std::string_view s) {
  Code code{n, {}};
  for (auto v : parse_values(s)) {
    if (v >= n) {
      throw Error(Errc::MalformedCode,
                  "value " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
    }
    code.values.push_back(static_cast<std::uint32_t>(v));
  }
  cayley::detail::check_code(code);
  return code;
}

inline PruferSequence parse_prufer(std::size_t n, std::string_view s) {
  PruferSequence p{n, {}};
  for (auto v : parse_values(s)) {
    if (v < 1 || v > n) {
      throw Error(Errc::MalformedSequence,
                  "label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    p.values.push_back(static_cast<Vertex>(v));
  }
  return p;
}

inline std::string format_code(const Code& c) { return format_values(c.values); }

inline std::string format_prufer(const PruferSequence& p) { return format_values(p.values); }

/// rank<TAB>code<TAB>u-v u-v ...
inline std::string format_enumeration_line(const BigInt& rank, const Code& code, const LabeledTree& t) {
  std::string out = rank.str();
  out += '\t';
  out += format_code(code);
  out += '\t';
  bool first = true;
  for (Edge e : t.edges()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  out += '\n';
  return out;
}

}  // namespace cayley::text
