#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chordwitness/cycle.hpp"
#include "chordwitness/graph.hpp"

namespace chordwitness {

struct LongestCycleOptions {
  std::size_t limit = 10000;  // max cycles kept; more set `truncated`
  int max_n = 18;             // refuse larger inputs (search is exponential)
};

struct LongestCycles {
  std::size_t length = 0;
  std::vector<Cycle> cycles;  // canonical, sorted, all of `length`
  bool truncated = false;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
  return adj;
}

// Exhaustive search for all longest cycles. Each cycle is generated once:
// its minimum vertex is the root, and it is accepted only in the direction
// where the second vertex is smaller than the last.
class LongestCycleSearch {
 public:
  LongestCycleSearch(const Graph& g, std::size_t limit) : adj_(adjacency_masks(g)), n_(g.order()), limit_(limit) {}

  LongestCycles run() {
    for (int root = 0; root < n_; ++root) {
      // Every cycle rooted here lives on vertices >= root.
      if (static_cast<std::size_t>(n_ - root) < best_) break;
      root_ = root;
      allowed_ = 0;
      for (int v = root + 1; v < n_; ++v) allowed_ |= bit(v);
      path_.assign(1, root);
      extend(bit(root));
    }
    LongestCycles out;
    out.length = best_;
    out.truncated = truncated_;
    out.cycles.reserve(found_.size());
    for (auto& seq : found_) out.cycles.push_back(Cycle::canonical(std::move(seq)));
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
  }

 private:
  // Vertices reachable from `from` through unvisited allowed vertices.
  Mask reachable(int from, Mask visited) const {
    const Mask open = allowed_ & ~visited;
    Mask frontier = adj_[static_cast<std::size_t>(from)] & open;
    Mask seen = frontier;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= open & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  void record() {
    const std::size_t len = path_.size();
    if (path_[1] > path_.back()) return;
    if (len > best_) {
      best_ = len;
      found_.clear();
      truncated_ = false;
    }
    if (len == best_) {
      if (found_.size() < limit_) found_.push_back(path_);
      else truncated_ = true;
    }
  }

  void extend(Mask visited) {
    const int tail = path_.back();
    const Mask tail_adj = adj_[static_cast<std::size_t>(tail)];
    if (path_.size() >= 3 && (tail_adj & bit(root_))) record();

    const Mask reach = reachable(tail, visited);
    // The cycle must come back to the root through a reachable vertex.
    if (!(adj_[static_cast<std::size_t>(root_)] & reach)) return;
    const std::size_t bound = path_.size() + static_cast<std::size_t>(std::popcount(reach));
    if (bound < best_ || (bound == best_ && truncated_)) return;

    for (Mask cand = tail_adj & allowed_ & ~visited; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      path_.push_back(w);
      extend(visited | bit(w));
      path_.pop_back();
    }
  }

  std::vector<Mask> adj_;
  int n_;
  std::size_t limit_;
  int root_ = 0;
  Mask allowed_ = 0;
  std::vector<int> path_;
  std::size_t best_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// All cycles of maximum length in g (exact, exponential).
///
/// Throws guard_exceeded when g has more than `options.max_n` vertices and
/// precondition when g is acyclic.
inline LongestCycles longest_cycles(const Graph& g, const LongestCycleOptions& options = {}) {
  if (g.order() > options.max_n || g.order() > 64)
    throw Error(ErrorKind::guard_exceeded, "longest-cycle search refused: n = " + std::to_string(g.order()) +
                                               " exceeds limit " + std::to_string(std::min(options.max_n, 64)));
  LongestCycles out = detail::LongestCycleSearch(g, options.limit).run();
  if (out.length == 0) throw Error(ErrorKind::precondition, "graph is acyclic");
  return out;
}

}  // namespace chordwitness
