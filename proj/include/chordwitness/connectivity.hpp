#pragma once

#include <cstddef>
#include <vector>

#include "chordwitness/graph.hpp"

namespace chordwitness {

namespace detail {

// Connectivity of g after deleting vertices a and b (either may be -1).
inline bool connected_without(const Graph& g, Vertex a, Vertex b) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (a >= 0) seen[static_cast<std::size_t>(a)] = 1;
  if (b >= 0) seen[static_cast<std::size_t>(b)] = 1;
  Vertex root = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (root < 0) root = v;
    }
  }
  if (remaining <= 1) return true;
  std::vector<Vertex> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

}  // namespace detail

/// At least 4 vertices, connected, and no separating set of one or two
/// vertices. Exhaustive over all pairs: O(n^2 (n + m)).
inline bool is_three_connected(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < 3) return false;
  if (!detail::connected_without(g, -1, -1)) return false;
  for (Vertex a = 0; a < n; ++a) {
    if (!detail::connected_without(g, a, -1)) return false;
    for (Vertex b = a + 1; b < n; ++b)
      if (!detail::connected_without(g, a, b)) return false;
  }
  return true;
}

}  // namespace chordwitness
