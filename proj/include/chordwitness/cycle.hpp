#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chordwitness/graph.hpp"

namespace chordwitness {

/// A simple cycle given as its cyclic vertex sequence.
///
/// Always stored in canonical form: the smallest id first, and of the two
/// directions the one whose second vertex is smaller than the last. Two
/// Cycle objects compare equal iff they describe the same vertex cycle.
/// Positions 0..length()-1 index that canonical sequence; all positional
/// arithmetic elsewhere (arcs, attachments) is modulo length().
class Cycle {
 public:
  Cycle() = default;

  /// Canonicalizes `seq`. Performs no adjacency checks (see verify_cycle).
  static Cycle canonical(std::vector<Vertex> seq) {
    Cycle c;
    if (seq.empty()) return c;
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
    c.vertices_ = std::move(seq);
    return c;
  }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }

  Vertex at(std::size_t pos) const { return vertices_[pos % vertices_.size()]; }
  std::size_t next(std::size_t pos) const { return (pos + 1) % vertices_.size(); }
  std::size_t prev(std::size_t pos) const { return (pos + vertices_.size() - 1) % vertices_.size(); }

  std::optional<std::size_t> position_of(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool contains(Vertex v) const { return position_of(v).has_value(); }

  /// Cyclic distance between two positions (0..length()/2).
  std::size_t distance(std::size_t a, std::size_t b) const {
    const std::size_t d = a > b ? a - b : b - a;
    return std::min(d, vertices_.size() - d);
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Edge joining two non-consecutive cycle vertices (u < v).
struct Chord {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Validates `seq` as a cycle of g and returns its canonical form.
inline Cycle verify_cycle(const Graph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3) throw Error(ErrorKind::invalid_input, "cycle needs at least 3 vertices");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seq) {
    if (!g.contains(v)) throw Error(ErrorKind::invalid_input, "cycle vertex " + std::to_string(v) + " not in graph");
    if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::invalid_input, "cycle repeats vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex a = seq[i];
    const Vertex b = seq[(i + 1) % seq.size()];
    if (!g.has_edge(a, b))
      throw Error(ErrorKind::invalid_input,
                  "cycle vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  return Cycle::canonical({seq.begin(), seq.end()});
}

inline Cycle verify_cycle(const Graph& g, const Cycle& c) { return verify_cycle(g, c.vertices()); }

/// All chords of c in g, sorted. Empty iff c is chordless.
inline std::vector<Chord> chords(const Graph& g, const Cycle& c) {
  verify_cycle(g, c);
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < c.length(); ++i) pos[static_cast<std::size_t>(c.at(i))] = static_cast<int>(i);
  std::vector<Chord> out;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const Vertex u = c.at(i);
    for (Vertex w : g.neighbors(u)) {
      const int j = pos[static_cast<std::size_t>(w)];
      if (j < 0 || u > w) continue;
      if (c.distance(i, static_cast<std::size_t>(j)) >= 2) out.push_back({u, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_chord(const Graph& g, const Cycle& c, const Chord& ch) {
  auto a = c.position_of(ch.u);
  auto b = c.position_of(ch.v);
  return a && b && g.has_edge(ch.u, ch.v) && c.distance(*a, *b) >= 2;
}

}  // namespace chordwitness
