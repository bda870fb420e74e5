#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordwitness/error.hpp"

namespace chordwitness {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so `neighbors()` is deterministic and
/// `has_edge()` is a binary search. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate pairs (in either orientation)
  /// collapse into one edge. Throws on self-loops and out-of-range endpoints.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    if (n < 0) throw Error(ErrorKind::invalid_input, "negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorKind::invalid_input, "edge endpoint out of range: " + std::to_string(u) + "-" +
                                                  std::to_string(v));
      if (u == v) throw Error(ErrorKind::invalid_input, "self-loop at vertex " + std::to_string(u));
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      g.m_ += list.size();
    }
    g.m_ /= 2;
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// Edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Result of `induced_subgraph`: the relabeled graph plus the map from new
/// ids back to host ids (`to_host[new_id] == old_id`).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

inline void require_subset(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (!g.contains(v)) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " not in graph");
}

inline VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  require_subset(g, s);
  VertexSet members = make_vertex_set({s.begin(), s.end()});
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u : members)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[static_cast<std::size_t>(v)] >= 0)
        pairs.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  return {Graph::from_edge_list(static_cast<int>(members.size()), pairs), std::move(members)};
}

/// Connected components of the subgraph induced by `restrict`, ordered by
/// their minimum vertex id. Each component is a sorted VertexSet.
inline std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> restrict) {
  require_subset(g, restrict);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> allowed(n, 0), seen(n, 0);
  for (Vertex v : restrict) allowed[static_cast<std::size_t>(v)] = 1;

  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (!allowed[static_cast<std::size_t>(root)] || seen[static_cast<std::size_t>(root)]) continue;
    VertexSet comp;
    stack.push_back(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (allowed[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return connected_components(g, all);
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// True iff `s` is nonempty and induces a connected subgraph of g.
inline bool induces_connected(const Graph& g, std::span<const Vertex> s) {
  return !s.empty() && connected_components(g, s).size() == 1;
}

}  // namespace chordwitness
