#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "chordwitness/cycle.hpp"
#include "chordwitness/generators.hpp"
#include "chordwitness/graph.hpp"

namespace chordwitness::oracle {

// Every simple cycle as a normalized vertex list (min first, then the
// smaller of the two neighbours second). Plain DFS without pruning.
inline std::set<std::vector<Vertex>> naive_all_cycles(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  auto normalize = [](std::vector<Vertex> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    std::vector<Vertex> rev(c.rbegin(), c.rend());
    std::rotate(rev.begin(), rev.end() - 1, rev.end());
    return std::min(c, rev);
  };
  auto dfs = [&](auto&& self, Vertex u) -> void {
    for (Vertex w : g.neighbors(u)) {
      if (w == path.front() && path.size() >= 3) out.insert(normalize(path));
      if (on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[static_cast<std::size_t>(w)] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on.assign(static_cast<std::size_t>(n), false);
    on[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s);
  }
  return out;
}

// Local vertex connectivity via unit-capacity max flow on the split graph
// (v_in -> v_out capacity 1), minimized over non-adjacent pairs. Complete
// graphs get n - 1.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  const int nodes = 2 * n;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
      auto in = [](Vertex v) { return 2 * v; };
      auto out = [](Vertex v) { return 2 * v + 1; };
      for (Vertex v = 0; v < n; ++v) cap[in(v)][out(v)] = (v == s || v == t) ? n : 1;
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) cap[out(v)][in(w)] = n;
      int flow = 0;
      while (true) {
        std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
        std::queue<int> q;
        q.push(out(s));
        parent[out(s)] = out(s);
        while (!q.empty() && parent[in(t)] < 0) {
          int u = q.front();
          q.pop();
          for (int w = 0; w < nodes; ++w)
            if (parent[w] < 0 && cap[u][w] > 0) {
              parent[w] = u;
              q.push(w);
            }
        }
        if (parent[in(t)] < 0) break;
        for (int v = in(t); v != out(s); v = parent[v]) {
          --cap[parent[v]][v];
          ++cap[v][parent[v]];
        }
        ++flow;
      }
      best = std::min(best, flow);
    }
  return best;
}

// All chordless (induced) cycles of length >= 3, normalized as above.
// Grows induced paths rooted at their minimum vertex.
inline std::vector<std::vector<Vertex>> chordless_cycles(const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max()) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self) -> void {
    if (out.size() >= cap) return;
    const Vertex root = path.front();
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w <= root || std::find(path.begin(), path.end(), w) != path.end()) continue;
      // w may touch only the tail and possibly the root.
      bool induced = true;
      for (std::size_t t = 1; t + 1 < path.size() && induced; ++t) induced = !g.has_edge(w, path[t]);
      if (!induced) continue;
      const bool closes = path.size() >= 2 && g.has_edge(w, root);
      path.push_back(w);
      if (closes) {
        if (path[1] < path.back()) out.push_back(path);
      } else {
        self(self);
      }
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    dfs(dfs);
  }
  return out;
}

inline Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  const auto threshold = static_cast<std::uint64_t>(p * 1000000.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform_below(1000000) < threshold) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

// One representative per isomorphism class of connected graphs on n
// vertices (n <= 6): canonical form = lexicographically smallest adjacency
// bit string over all vertex permutations.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) e.push_back(slots[b]);
    Graph g = Graph::from_edge_list(n, e);
    if (!is_connected(g)) continue;
    std::uint32_t canon = std::numeric_limits<std::uint32_t>::max();
    for (const auto& pm : perms) {
      std::uint32_t code = 0;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (g.has_edge(pm[static_cast<std::size_t>(slots[b].first)], pm[static_cast<std::size_t>(slots[b].second)])) code |= std::uint32_t{1} << b;
      canon = std::min(canon, code);
    }
    if (seen.insert(canon).second) out.push_back(g);
  }
  return out;
}

}  // namespace chordwitness::oracle
