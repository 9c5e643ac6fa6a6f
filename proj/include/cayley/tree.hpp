#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

/// Vertex labels are 1-based everywhere in the public interface.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge normalized(Edge e) noexcept {
  return e.u <= e.v ? e : Edge{e.v, e.u};
}

namespace detail {

// Returns the edges normalized (min, max) and sorted; throws on range, loop
// and duplicate violations, which SimpleGraph and LabeledTree share.
inline std::vector<Edge> normalize_simple_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
      throw Error(Errc::EdgeOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") outside 1.." +
                                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    out.push_back(normalized(e));
  }
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end()) {
    throw Error(Errc::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
  }
  return out;
}

struct TreeAccess;

}  // namespace detail

/// Compressed adjacency lists, built once per query batch.
class Adjacency {
 public:
  Adjacency(std::size_t n, std::span<const Edge> edges) : offsets_(n + 2, 0), targets_(2 * edges.size()) {
    for (Edge e : edges) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (Edge e : edges) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t vertex_count() const noexcept { return offsets_.size() - 2; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Undirected simple graph on 1..n; connectivity not required.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t n, std::span<const Edge> edges)
      : n_(n), edges_(detail::normalize_simple_edges(n, edges)) {}
  SimpleGraph(std::size_t n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static SimpleGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
    }
    return SimpleGraph(n, edges);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A tree on vertices 1..n. Only obtainable through validate_tree or the
/// codecs, so every instance satisfies the tree invariants; edges are kept
/// normalized and sorted, which makes equality the edge-set comparison.
class LabeledTree {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  friend auto operator<=>(const LabeledTree& a, const LabeledTree& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  friend struct detail::TreeAccess;
  LabeledTree(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t n_ = 1;
  std::vector<Edge> edges_;
};

namespace detail {

struct TreeAccess {
  // For producers that construct trees by design (codec decoders): the edges
  // are normalized and sorted but not re-checked for connectivity.
  static LabeledTree trusted(std::size_t n, std::vector<Edge> edges) {
    for (Edge& e : edges) e = normalized(e);
    std::sort(edges.begin(), edges.end());
    return LabeledTree(n, std::move(edges));
  }
};

}  // namespace detail

inline LabeledTree validate_tree(std::size_t n, std::span<const Edge> edges) {
  if (n < 1) throw Error(Errc::VertexOutOfRange, "a tree needs at least one vertex");
  auto norm = detail::normalize_simple_edges(n, edges);
  if (norm.size() != n - 1) {
    throw Error(Errc::WrongEdgeCount, "expected " + std::to_string(n - 1) + " edges, got " +
                                          std::to_string(norm.size()));
  }
  // n - 1 distinct edges: connected iff acyclic. Union-find sees both.
  std::vector<Vertex> parent(n + 1);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Edge e : norm) {
    Vertex a = find(e.u), b = find(e.v);
    if (a == b) throw Error(Errc::Disconnected, "edge list contains a cycle, so it cannot span 1.." + std::to_string(n));
    parent[a] = b;
  }
  return detail::TreeAccess::trusted(n, std::move(norm));
}

inline LabeledTree validate_tree(std::size_t n, std::initializer_list<Edge> edges) {
  return validate_tree(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// The unique tree on one or two vertices.
inline LabeledTree trivial_tree(std::size_t n) {
  if (n == 2) return validate_tree(2, {Edge{1, 2}});
  return validate_tree(n, std::span<const Edge>{});
}

namespace detail {

inline void check_vertex(std::size_t n, Vertex v) {
  if (v < 1 || v > n) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

// parent[v] on the tree rooted at `root`; parent[root] = 0.
inline std::vector<Vertex> parents_from(const Adjacency& adj, Vertex root) {
  std::vector<Vertex> parent(adj.vertex_count() + 1, 0);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj.neighbors(x)) {
      if (parent[y] == 0) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  parent[root] = 0;
  return parent;
}

}  // namespace detail

/// The unique simple path from u to v, both ends included.
inline std::vector<Vertex> path_between(const LabeledTree& t, Vertex u, Vertex v) {
  detail::check_vertex(t.vertex_count(), u);
  detail::check_vertex(t.vertex_count(), v);
  if (u == v) return {u};
  Adjacency adj(t.vertex_count(), t.edges());
  auto parent = detail::parents_from(adj, v);
  std::vector<Vertex> path{u};
  for (Vertex x = u; x != v;) {
    x = parent[x];
    path.push_back(x);
  }
  return path;
}

inline std::size_t degree(const LabeledTree& t, Vertex v) {
  detail::check_vertex(t.vertex_count(), v);
  return static_cast<std::size_t>(std::count_if(t.edges().begin(), t.edges().end(),
                                                [v](Edge e) { return e.u == v || e.v == v; }));
}

/// All degrees at once, indexed by label (slot 0 unused).
inline std::vector<std::size_t> degrees(const LabeledTree& t) {
  std::vector<std::size_t> d(t.vertex_count() + 1, 0);
  for (Edge e : t.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

}  // namespace cayley

template <>
struct std::hash<cayley::LabeledTree> {
  std::size_t operator()(const cayley::LabeledTree& t) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ t.vertex_count();
    for (cayley::Edge e : t.edges()) {
      h = (h ^ e.u) * 0x100000001b3ULL;
      h = (h ^ e.v) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
