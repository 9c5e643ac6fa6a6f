#pragma once

// Classical Pruefer codec, used as an independent oracle for the path codec.
// Ties among leaves are broken by smallest label.

#include <cstddef>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/tree.hpp"

namespace cayley {

struct PruferSequence {
  std::size_t n = 2;
  std::vector<Vertex> values;  // 1-based labels

  friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

inline PruferSequence prufer_encode(const LabeledTree& t) {
  const std::size_t n = t.vertex_count();
  if (n < 2) throw Error(Errc::MalformedSequence, "Pruefer sequences need n >= 2");
  PruferSequence seq{n, {}};
  seq.values.reserve(n - 2);

  Adjacency adj(n, t.edges());
  auto deg = degrees(t);
  std::vector<bool> removed(n + 1, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  for (std::size_t step = 0; step + 2 < n; ++step) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex nb : adj.neighbors(leaf)) {
      if (removed[nb]) continue;
      seq.values.push_back(nb);
      if (--deg[nb] == 1) leaves.push(nb);
    }
  }
  return seq;
}

inline LabeledTree prufer_decode(const PruferSequence& p) {
  const std::size_t n = p.n;
  if (n < 2) throw Error(Errc::MalformedSequence, "Pruefer sequences need n >= 2");
  if (p.values.size() != n - 2) {
    throw Error(Errc::MalformedSequence, "expected " + std::to_string(n - 2) + " values, got " +
                                             std::to_string(p.values.size()));
  }
  std::vector<std::size_t> deg(n + 1, 1);
  for (Vertex v : p.values) {
    if (v < 1 || v > n) {
      throw Error(Errc::MalformedSequence,
                  "label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    ++deg[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : p.values) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--deg[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return detail::TreeAccess::trusted(n, std::move(edges));
}

}  // namespace cayley
