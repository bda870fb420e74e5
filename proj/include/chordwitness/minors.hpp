#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "chordwitness/graph.hpp"

namespace chordwitness {

enum class Pattern { k33, k5 };

inline const char* to_string(Pattern p) { return p == Pattern::k33 ? "K33" : "K5"; }

/// Branch sets of a K3,3 minor: each A-set must touch each B-set.
struct MinorModel {
  std::array<VertexSet, 3> a;
  std::array<VertexSet, 3> b;

  /// Branch set by index: 0..2 are A1..A3, 3..5 are B1..B3.
  const VertexSet& set(int index) const { return index < 3 ? a[static_cast<std::size_t>(index)] : b[static_cast<std::size_t>(index - 3)]; }

  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

enum class ModelViolation { none, empty_set, overlap, disconnected_set, missing_cross_edge };

inline const char* to_string(ModelViolation v) {
  switch (v) {
    case ModelViolation::none: return "none";
    case ModelViolation::empty_set: return "empty_set";
    case ModelViolation::overlap: return "overlap";
    case ModelViolation::disconnected_set: return "disconnected_set";
    case ModelViolation::missing_cross_edge: return "missing_cross_edge";
  }
  return "unknown";
}

/// Outcome of verify_k33_model. `first`/`second` are branch-set indices
/// (0..5, see MinorModel::set) naming the first violated clause.
struct ModelCheck {
  ModelViolation violation = ModelViolation::none;
  int first = -1;
  int second = -1;

  bool ok() const noexcept { return violation == ModelViolation::none; }
  explicit operator bool() const noexcept { return ok(); }
};

inline ModelCheck verify_k33_model(const Graph& g, const MinorModel& m) {
  for (int s = 0; s < 6; ++s) require_subset(g, m.set(s));
  for (int s = 0; s < 6; ++s)
    if (m.set(s).empty()) return {ModelViolation::empty_set, s, -1};

  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < 6; ++s) {
    for (Vertex v : m.set(s)) {
      int& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0 && o != s) return {ModelViolation::overlap, o, s};
      o = s;
    }
  }
  for (int s = 0; s < 6; ++s)
    if (!induces_connected(g, m.set(s))) return {ModelViolation::disconnected_set, s, -1};

  std::array<std::array<bool, 6>, 6> touch{};
  for (Vertex v = 0; v < g.order(); ++v) {
    const int s = owner[static_cast<std::size_t>(v)];
    if (s < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      const int t = owner[static_cast<std::size_t>(w)];
      if (t >= 0) touch[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
    }
  }
  for (int s = 0; s < 3; ++s)
    for (int t = 3; t < 6; ++t)
      if (!touch[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) return {ModelViolation::missing_cross_edge, s, t};
  return {};
}

inline nlohmann::json model_to_json(const MinorModel& m) {
  return {{"A", {m.a[0], m.a[1], m.a[2]}}, {"B", {m.b[0], m.b[1], m.b[2]}}};
}

inline MinorModel model_from_json(const nlohmann::json& j) {
  auto read = [&](const char* key, std::array<VertexSet, 3>& out) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
      throw Error(ErrorKind::parse, std::string("minor model JSON: \"") + key + "\" must hold three vertex lists");
    for (std::size_t t = 0; t < 3; ++t) out[t] = make_vertex_set(j[key][t].get<std::vector<Vertex>>());
  };
  MinorModel m;
  read("A", m.a);
  read("B", m.b);
  return m;
}

struct MinorOptions {
  int max_n = 16;
};

namespace detail {

// Exact minor search by repeated edge contraction.
//
// A state is a partition of a subset of the original vertices into
// connected blocks; the contracted graph is implied by it. At every state
// the pattern is looked for as a (non-induced) subgraph. Both patterns have
// minimum degree >= 3, so blocks of degree <= 1 are dropped and blocks of
// degree 2 are merged into a neighbor without losing any minor. States are
// memoized by their partition.
class MinorSearch {
 public:
  using Mask = std::uint64_t;

  MinorSearch(const Graph& g, Pattern pattern) : pattern_(pattern), n_(g.order()) {
    start_.adj.assign(static_cast<std::size_t>(n_), 0);
    start_.members.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
      start_.alive |= Mask{1} << v;
      start_.members[static_cast<std::size_t>(v)] = Mask{1} << v;
      for (Vertex w : g.neighbors(v)) start_.adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
    }
  }

  /// Branch sets (as original-vertex masks) of a pattern model, if any.
  /// K3,3 yields {A1,A2,A3,B1,B2,B3}; K5 yields five sets.
  std::optional<std::vector<Mask>> run() { return search(start_); }

  std::size_t states_explored() const { return memo_.size(); }

 private:
  struct State {
    Mask alive = 0;
    std::vector<Mask> adj;
    std::vector<Mask> members;
  };

  static void remove(State& s, int v) {
    for (Mask nb = s.adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1)
      s.adj[static_cast<std::size_t>(std::countr_zero(nb))] &= ~(Mask{1} << v);
    s.adj[static_cast<std::size_t>(v)] = 0;
    s.members[static_cast<std::size_t>(v)] = 0;
    s.alive &= ~(Mask{1} << v);
  }

  // Merge v into u (u, v adjacent).
  static void contract(State& s, int u, int v) {
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    const Mask vnb = s.adj[vi] & ~(Mask{1} << u);
    s.members[ui] |= s.members[vi];
    remove(s, v);
    s.adj[ui] |= vnb;
    for (Mask nb = vnb; nb; nb &= nb - 1) s.adj[static_cast<std::size_t>(std::countr_zero(nb))] |= Mask{1} << u;
  }

  static void reduce(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask live = s.alive; live; live &= live - 1) {
        const int v = std::countr_zero(live);
        const Mask nb = s.adj[static_cast<std::size_t>(v)];
        const int deg = std::popcount(nb);
        if (deg <= 1) {
          remove(s, v);
          changed = true;
        } else if (deg == 2) {
          contract(s, std::countr_zero(nb), v);
          changed = true;
        }
      }
    }
  }

  std::optional<std::vector<Mask>> find_subgraph(const State& s) const {
    std::vector<int> verts;
    for (Mask live = s.alive; live; live &= live - 1) verts.push_back(std::countr_zero(live));
    const auto& adj = s.adj;
    auto at = [&](int v) { return adj[static_cast<std::size_t>(v)]; };
    auto members = [&](int v) { return s.members[static_cast<std::size_t>(v)]; };
    const std::size_t k = verts.size();

    if (pattern_ == Pattern::k33) {
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x + 1; y < k; ++y) {
          const Mask xy = at(verts[x]) & at(verts[y]);
          if (std::popcount(xy) < 3) continue;
          for (std::size_t z = y + 1; z < k; ++z) {
            Mask common = xy & at(verts[z]);
            if (std::popcount(common) < 3) continue;
            std::vector<Mask> out{members(verts[x]), members(verts[y]), members(verts[z])};
            for (int t = 0; t < 3; ++t, common &= common - 1) out.push_back(members(std::countr_zero(common)));
            return out;
          }
        }
      return std::nullopt;
    }

    // K5: grow cliques in increasing vertex order.
    std::vector<int> clique;
    auto grow = [&](auto&& self, Mask candidates) -> bool {
      if (clique.size() == 5) return true;
      for (Mask c = candidates; c; c &= c - 1) {
        const int v = std::countr_zero(c);
        if (std::popcount(at(v) & candidates) + 1 + static_cast<int>(clique.size()) < 5) continue;
        clique.push_back(v);
        const Mask higher = ~((Mask{2} << v) - 1);
        if (self(self, candidates & at(v) & higher)) return true;
        clique.pop_back();
      }
      return false;
    };
    if (!grow(grow, s.alive)) return std::nullopt;
    std::vector<Mask> out;
    for (int v : clique) out.push_back(members(v));
    return out;
  }

  std::string key(const State& s) const {
    std::vector<Mask> blocks;
    for (Mask live = s.alive; live; live &= live - 1) blocks.push_back(s.members[static_cast<std::size_t>(std::countr_zero(live))]);
    std::sort(blocks.begin(), blocks.end());
    return {reinterpret_cast<const char*>(blocks.data()), blocks.size() * sizeof(Mask)};
  }

  std::optional<std::vector<Mask>> search(State s) {
    reduce(s);
    const int order = std::popcount(s.alive);
    int twice_edges = 0;
    for (Mask live = s.alive; live; live &= live - 1) twice_edges += std::popcount(s.adj[static_cast<std::size_t>(std::countr_zero(live))]);
    const int need_order = pattern_ == Pattern::k33 ? 6 : 5;
    const int need_edges = pattern_ == Pattern::k33 ? 9 : 10;
    if (order < need_order || twice_edges / 2 < need_edges) return std::nullopt;

    if (auto found = find_subgraph(s)) return found;
    if (order == need_order) return std::nullopt;
    if (!memo_.insert(key(s)).second) return std::nullopt;

    for (Mask live = s.alive; live; live &= live - 1) {
      const int u = std::countr_zero(live);
      for (Mask nb = s.adj[static_cast<std::size_t>(u)] & ~((Mask{2} << u) - 1); nb; nb &= nb - 1) {
        State next = s;
        contract(next, u, std::countr_zero(nb));
        if (auto found = search(std::move(next))) return found;
      }
    }
    return std::nullopt;
  }

  Pattern pattern_;
  int n_;
  State start_;
  std::unordered_set<std::string> memo_;
};

inline void check_minor_guard(const Graph& g, const MinorOptions& options) {
  if (g.order() > options.max_n || g.order() > 64)
    throw Error(ErrorKind::guard_exceeded, "minor search refused: n = " + std::to_string(g.order()) + " exceeds limit " +
                                               std::to_string(std::min(options.max_n, 64)));
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace detail

/// Exact K3,3 minor search; returns a model when one exists.
inline std::optional<MinorModel> find_k33_model(const Graph& g, const MinorOptions& options = {}) {
  detail::check_minor_guard(g, options);
  auto sets = detail::MinorSearch(g, Pattern::k33).run();
  if (!sets) return std::nullopt;
  MinorModel m;
  for (std::size_t t = 0; t < 3; ++t) {
    m.a[t] = detail::mask_to_set((*sets)[t]);
    m.b[t] = detail::mask_to_set((*sets)[t + 3]);
  }
  return m;
}

/// Exact minor containment test for K3,3 or K5 on small graphs.
inline bool has_minor(const Graph& g, Pattern pattern, const MinorOptions& options = {}) {
  detail::check_minor_guard(g, options);
  return detail::MinorSearch(g, pattern).run().has_value();
}

/// Planarity via Kuratowski/Wagner: no K5 and no K3,3 minor. Graphs with
/// more than 3n-6 edges are rejected before any search.
inline bool is_planar_smallgraph(const Graph& g, const MinorOptions& options = {}) {
  detail::check_minor_guard(g, options);
  const auto n = static_cast<std::size_t>(g.order());
  if (n >= 3 && g.size() > 3 * n - 6) return false;
  return !has_minor(g, Pattern::k5, options) && !has_minor(g, Pattern::k33, options);
}

}  // namespace chordwitness
