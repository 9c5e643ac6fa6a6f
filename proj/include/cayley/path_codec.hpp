#pragma once

// Bijection between labeled trees on n vertices and codes of length n - 2
// over {0, ..., n-1}, obtained by recording the path-drawing construction:
//
//   * the first path runs from vertex 1 to vertex 2;
//   * every later path runs from an already drawn vertex to the lowest label
//     not yet drawn (the reserved terminal of that path);
//   * each step draws exactly one new vertex, either an intermediate label of
//     the open path or, at a branch, the terminal that closes it.
//
// At step s (1-based) the code value v splits into two disjoint ranges:
//   v in {0..s}     branch: attach the next path at the (v+1)-th drawn vertex
//   v in {s+1..n-1} label: the next intermediate is the (v-s)-th smallest
//                   label that is neither drawn nor reserved.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/tree.hpp"

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

struct Code {
  std::size_t n = 1;
  std::vector<std::uint32_t> values;

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;
};

inline std::size_t code_length(std::size_t n) noexcept { return n >= 2 ? n - 2 : 0; }

/// Attach the next path at the attach_index-th drawn vertex (1-based).
struct BranchStep {
  std::size_t attach_index = 1;
  friend bool operator==(const BranchStep&, const BranchStep&) = default;
};

/// Draw `label` as the next intermediate vertex of the open path.
struct LabelStep {
  Vertex label = 0;
  friend bool operator==(const LabelStep&, const LabelStep&) = default;
};

using TraceStep = std::variant<BranchStep, LabelStep>;

struct ConstructionTrace {
  std::size_t n = 1;
  std::vector<TraceStep> steps;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

namespace detail {

// Fenwick tree over labels 1..n holding 0/1 availability.
class LabelPool {
 public:
  explicit LabelPool(std::size_t n) : tree_(n + 1, 0) {
    std::size_t top = 1;
    while (top * 2 <= n) top *= 2;
    log_top_ = top;
  }

  void insert(Vertex v) { add(v, +1); }
  void erase(Vertex v) { add(v, -1); }

  // Number of available labels <= v.
  std::size_t rank(Vertex v) const {
    std::int64_t sum = 0;
    for (std::size_t i = v; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return static_cast<std::size_t>(sum);
  }

  // The k-th smallest available label (k >= 1); caller guarantees existence.
  Vertex select(std::size_t k) const {
    std::size_t pos = 0;
    auto remaining = static_cast<std::int64_t>(k);
    for (std::size_t step = log_top_; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] < remaining) {
        pos += step;
        remaining -= tree_[pos];
      }
    }
    return static_cast<Vertex>(pos + 1);
  }

 private:
  void add(std::size_t v, std::int64_t delta) {
    for (std::size_t i = v; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  std::vector<std::int64_t> tree_;
  std::size_t log_top_ = 1;
};

// Decoder state: drawn vertices in draw order, the reserved terminal of the
// open path, and the tip the next vertex hangs from. Requires n >= 2.
class Builder {
 public:
  explicit Builder(std::size_t n) : n_(n), drawn_flag_(n + 2, false), pool_(n) {
    drawn_order_.reserve(n);
    edges_.reserve(n - 1);
    draw(1);
    for (Vertex v = 3; v <= n; ++v) pool_.insert(v);
    reserved_ = 2;
    tip_ = 1;
  }

  std::size_t drawn_count() const noexcept { return drawn_order_.size(); }
  Vertex reserved() const noexcept { return reserved_; }
  bool is_drawn(Vertex v) const noexcept { return drawn_flag_[v]; }

  void branch(std::size_t attach_index) {
    close_path();
    tip_ = drawn_order_[attach_index - 1];
    while (drawn_flag_[lowest_undrawn_]) ++lowest_undrawn_;
    reserved_ = lowest_undrawn_;
    pool_.erase(reserved_);
  }

  Vertex label_of_rank(std::size_t r) const { return pool_.select(r); }
  std::size_t rank_of_label(Vertex v) const { return pool_.rank(v); }

  void label(Vertex v) {
    edges_.push_back({tip_, v});
    pool_.erase(v);
    draw(v);
    tip_ = v;
  }

  LabeledTree finish() && {
    close_path();
    return TreeAccess::trusted(n_, std::move(edges_));
  }

 private:
  void draw(Vertex v) {
    drawn_flag_[v] = true;
    drawn_order_.push_back(v);
  }

  void close_path() {
    edges_.push_back({tip_, reserved_});
    draw(reserved_);
  }

  std::size_t n_;
  std::vector<bool> drawn_flag_;
  std::vector<Vertex> drawn_order_;
  LabelPool pool_;
  std::vector<Edge> edges_;
  Vertex reserved_ = 2;
  Vertex tip_ = 1;
  Vertex lowest_undrawn_ = 1;
};

inline void check_code(const Code& code) {
  if (code.n < 1) throw Error(Errc::MalformedCode, "n must be at least 1");
  if (code.values.size() != code_length(code.n)) {
    throw Error(Errc::MalformedCode, "expected " + std::to_string(code_length(code.n)) +
                                         " values for n=" + std::to_string(code.n) + ", got " +
                                         std::to_string(code.values.size()));
  }
  for (std::size_t i = 0; i < code.values.size(); ++i) {
    if (code.values[i] >= code.n) {
      throw Error(Errc::MalformedCode, "value " + std::to_string(code.values[i]) +
                                           " at position " + std::to_string(i + 1) +
                                           " outside [0," + std::to_string(code.n) + ")");
    }
  }
}

}  // namespace detail

inline LabeledTree decode(const Code& code) {
  detail::check_code(code);
  if (code.n <= 2) return trivial_tree(code.n);
  detail::Builder b(code.n);
  for (std::size_t s = 1; s <= code.values.size(); ++s) {
    const std::size_t v = code.values[s - 1];
    if (v <= s) {
      b.branch(v + 1);
    } else {
      b.label(b.label_of_rank(v - s));
    }
  }
  return std::move(b).finish();
}

inline Code encode(const LabeledTree& t) {
  const std::size_t n = t.vertex_count();
  Code code{n, {}};
  if (n <= 2) return code;
  code.values.reserve(n - 2);

  Adjacency adj(n, t.edges());
  const auto parent = detail::parents_from(adj, 1);

  std::vector<std::size_t> draw_index(n + 1, 0);  // 1-based; 0 = undrawn
  std::size_t drawn = 0;
  auto draw = [&](Vertex v) { draw_index[v] = ++drawn; };

  detail::LabelPool pool(n);
  for (Vertex v = 3; v <= n; ++v) pool.insert(v);
  draw(1);
  Vertex reserved = 2;
  Vertex lowest_undrawn = 1;

  // Interior of the open path, ordered from its start toward the terminal.
  std::vector<Vertex> pending;
  std::size_t next_pending = 0;
  auto load_path_to = [&](Vertex terminal) {
    pending.clear();
    next_pending = 0;
    Vertex x = parent[terminal];
    while (draw_index[x] == 0) {
      pending.push_back(x);
      x = parent[x];
    }
    std::reverse(pending.begin(), pending.end());
    return x;  // the drawn vertex the path starts from
  };
  load_path_to(2);

  for (std::size_t s = 1; s <= n - 2; ++s) {
    if (next_pending < pending.size()) {
      const Vertex v = pending[next_pending++];
      code.values.push_back(static_cast<std::uint32_t>(s + pool.rank(v)));
      pool.erase(v);
      draw(v);
    } else {
      draw(reserved);
      while (draw_index[lowest_undrawn] != 0) ++lowest_undrawn;
      reserved = lowest_undrawn;
      pool.erase(reserved);
      const Vertex attach = load_path_to(reserved);
      code.values.push_back(static_cast<std::uint32_t>(draw_index[attach] - 1));
    }
  }
  return code;
}

inline ConstructionTrace trace_of_code(const Code& code) {
  detail::check_code(code);
  ConstructionTrace tr{code.n, {}};
  if (code.n <= 2) return tr;
  tr.steps.reserve(code.values.size());
  detail::Builder b(code.n);
  for (std::size_t s = 1; s <= code.values.size(); ++s) {
    const std::size_t v = code.values[s - 1];
    if (v <= s) {
      b.branch(v + 1);
      tr.steps.emplace_back(BranchStep{v + 1});
    } else {
      const Vertex label = b.label_of_rank(v - s);
      b.label(label);
      tr.steps.emplace_back(LabelStep{label});
    }
  }
  return tr;
}

inline Code code_of_trace(const ConstructionTrace& tr) {
  if (tr.n < 1) throw Error(Errc::MalformedTrace, "n must be at least 1");
  if (tr.steps.size() != code_length(tr.n)) {
    throw Error(Errc::MalformedTrace, "expected " + std::to_string(code_length(tr.n)) +
                                          " steps, got " + std::to_string(tr.steps.size()));
  }
  Code code{tr.n, {}};
  if (tr.n <= 2) return code;
  code.values.reserve(tr.steps.size());
  detail::Builder b(tr.n);
  for (std::size_t s = 1; s <= tr.steps.size(); ++s) {
    const TraceStep& step = tr.steps[s - 1];
    if (const auto* br = std::get_if<BranchStep>(&step)) {
      if (br->attach_index < 1 || br->attach_index > s + 1) {
        throw Error(Errc::MalformedTrace, "branch at step " + std::to_string(s) +
                                              " attaches at index " +
                                              std::to_string(br->attach_index) + ", allowed 1.." +
                                              std::to_string(s + 1));
      }
      b.branch(br->attach_index);
      code.values.push_back(static_cast<std::uint32_t>(br->attach_index - 1));
    } else {
      const Vertex label = std::get<LabelStep>(step).label;
      if (label < 1 || label > tr.n || b.is_drawn(label) || label == b.reserved()) {
        throw Error(Errc::MalformedTrace, "label " + std::to_string(label) + " at step " +
                                              std::to_string(s) +
                                              " is out of range, drawn, or reserved");
      }
      code.values.push_back(static_cast<std::uint32_t>(s + b.rank_of_label(label)));
      b.label(label);
    }
  }
  return code;
}

/// Number of codes (and trees) on n vertices; 1 for n <= 2.
inline BigInt code_space_size(std::size_t n) {
  if (n <= 2) return 1;
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
}

/// Big-endian base-n reading of the code.
inline BigInt code_rank(const Code& code) {
  detail::check_code(code);
  BigInt r = 0;
  for (std::uint32_t v : code.values) r = r * code.n + v;
  return r;
}

inline Code code_unrank(std::size_t n, const BigInt& r) {
  if (n < 1) throw Error(Errc::RankOutOfRange, "n must be at least 1");
  if (r < 0 || r >= code_space_size(n)) {
    throw Error(Errc::RankOutOfRange,
                "rank " + r.str() + " outside [0, " + code_space_size(n).str() + ")");
  }
  Code code{n, std::vector<std::uint32_t>(code_length(n), 0)};
  BigInt rest = r;
  for (std::size_t i = code.values.size(); i-- > 0;) {
    code.values[i] = static_cast<std::uint32_t>(rest % n);
    rest /= n;
  }
  return code;
}

inline BigInt rank(const LabeledTree& t) { return code_rank(encode(t)); }

inline LabeledTree unrank(std::size_t n, const BigInt& r) { return decode(code_unrank(n, r)); }

}  // namespace cayley
