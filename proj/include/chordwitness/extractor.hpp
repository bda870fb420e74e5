#pragma once

// Witness extraction for chordless cycles in 3-connected graphs.
//
// Given a cycle C of a 3-connected graph G, extract_witness returns one of
//   * a chord of C;
//   * a strictly longer cycle, routed through one or two components of G - C
//     whenever some component attaches to consecutive cycle vertices or two
//     attachment pairs cross;
//   * a K3,3 minor model. Here C is chordless and every component has
//     pairwise non-consecutive, non-crossing attachments. A support P of
//     some component H_i containing no other support is paired with a
//     second component H_j that attaches inside P, chosen so that P u Q is
//     as small as possible, and then Q. Six "interest" vertices (three
//     attachments of each) are split into three disjoint cycle arcs A1..A3,
//     and a third component H_k together with the remaining arcs it
//     touches forms the last branch set.
//
// Every witness is re-verified before it is returned. When the arc split
// read off the interest vertices does not verify, a bounded search over arc
// partitions and branch-set assignments is run; only if that also fails is
// extractor_incomplete raised.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chordwitness/connectivity.hpp"
#include "chordwitness/cycle.hpp"
#include "chordwitness/decomposition.hpp"
#include "chordwitness/graph.hpp"
#include "chordwitness/minors.hpp"

namespace chordwitness {

enum class WitnessRule { chord, lemma_iii, lemma_iv, case_p_sub_q, case_a, case_b, case_c };

inline const char* to_string(WitnessRule r) {
  switch (r) {
    case WitnessRule::chord: return "chord";
    case WitnessRule::lemma_iii: return "lemma-iii";
    case WitnessRule::lemma_iv: return "lemma-iv";
    case WitnessRule::case_p_sub_q: return "case-PsubQ";
    case WitnessRule::case_a: return "case-a";
    case WitnessRule::case_b: return "case-b";
    case WitnessRule::case_c: return "case-c";
  }
  return "unknown";
}

/// Relative position of the two supports once P is fixed.
enum class Configuration { p_sub_q, case_a, case_b, case_c };

inline WitnessRule rule_for(Configuration c) {
  switch (c) {
    case Configuration::p_sub_q: return WitnessRule::case_p_sub_q;
    case Configuration::case_a: return WitnessRule::case_a;
    case Configuration::case_b: return WitnessRule::case_b;
    case Configuration::case_c: return WitnessRule::case_c;
  }
  return WitnessRule::case_b;
}

/// Cycle positions of the six vertices of interest.
struct InterestVertices {
  std::array<std::size_t, 3> first;   // N(i): start of P, middle, end of P
  std::array<std::size_t, 3> second;  // N(j): start of Q, third, end of Q
  std::size_t interior_witness;       // the N(j) vertex strictly inside P

  friend bool operator==(const InterestVertices&, const InterestVertices&) = default;
};

struct SecondChoice {
  std::size_t component;
  Arc arc;
};

/// Trace of the case analysis behind a K3,3 witness.
struct CaseTrace {
  std::size_t first = 0;   // i
  std::size_t second = 0;  // j
  std::size_t third = 0;   // k
  Arc p;
  Arc q;
  InterestVertices interest{};
  Configuration configuration = Configuration::p_sub_q;
  std::string assignment;  // "interest-pairing", "arc-search" or "triple-search"
};

struct ChordFound {
  Chord chord;
};
struct LongerCycle {
  Cycle cycle;
};
struct K33Minor {
  MinorModel model;
  CaseTrace trace;
};

struct Witness {
  std::variant<ChordFound, LongerCycle, K33Minor> value;
  WitnessRule rule = WitnessRule::chord;

  bool is_chord() const { return std::holds_alternative<ChordFound>(value); }
  bool is_longer_cycle() const { return std::holds_alternative<LongerCycle>(value); }
  bool is_k33() const { return std::holds_alternative<K33Minor>(value); }
};

namespace detail {

// Shortest path inside `members` from any vertex adjacent to `from` to any
// vertex adjacent to `to`, avoiding `blocked`. Ties resolve toward smaller
// ids. Returns the interior vertices only (never empty on success).
inline std::optional<std::vector<Vertex>> path_through(const Graph& g, std::span<const Vertex> members, Vertex from,
                                                       Vertex to, const std::vector<char>& blocked = {}) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> inside(n, 0);
  for (Vertex v : members)
    if (blocked.empty() || !blocked[static_cast<std::size_t>(v)]) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> parent(n, -2);
  std::deque<Vertex> queue;
  for (Vertex s : g.neighbors(from)) {
    if (inside[static_cast<std::size_t>(s)]) {
      parent[static_cast<std::size_t>(s)] = -1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (g.has_edge(u, to)) {
      std::vector<Vertex> path;
      for (Vertex x = u; x >= 0; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (inside[wi] && parent[wi] == -2) {
        parent[wi] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

// All simple paths inside `members` from a neighbor of `from` to a neighbor
// of `to`, shortest first, capped at `cap`.
inline std::vector<std::vector<Vertex>> simple_paths_through(const Graph& g, std::span<const Vertex> members, Vertex from,
                                                             Vertex to, std::size_t cap) {
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0), used(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : members) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex u) -> void {
    if (out.size() >= cap) return;
    path.push_back(u);
    used[static_cast<std::size_t>(u)] = 1;
    if (g.has_edge(u, to)) out.push_back(path);
    for (Vertex w : g.neighbors(u))
      if (inside[static_cast<std::size_t>(w)] && !used[static_cast<std::size_t>(w)]) self(self, w);
    used[static_cast<std::size_t>(u)] = 0;
    path.pop_back();
  };
  for (Vertex s : g.neighbors(from))
    if (inside[static_cast<std::size_t>(s)]) dfs(dfs, s);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

inline const OffCycleComponent& component_at(const std::vector<OffCycleComponent>& comps, std::size_t index) {
  if (index >= comps.size()) throw Error(ErrorKind::invalid_input, "component index out of range");
  return comps[index];
}

}  // namespace detail

/// Replaces the cycle edge v_k v_{k+1} by a shortest path through `comp`.
/// Requires both v_k and v_{k+1} to be attachments of comp.
inline Cycle extend_via_consecutive(const Graph& g, const Cycle& c, const OffCycleComponent& comp, std::size_t k) {
  const std::size_t len = c.length();
  if (k >= len) throw Error(ErrorKind::invalid_input, "position out of range");
  const Vertex a = c.at(k);
  const Vertex b = c.at(c.next(k));
  auto path = detail::path_through(g, comp.vertices, a, b);
  if (!path) throw Error(ErrorKind::precondition, "extend_via_consecutive: component does not attach to both vertices");
  std::vector<Vertex> seq{a};
  seq.insert(seq.end(), path->begin(), path->end());
  for (std::size_t o = 1; o < len; ++o) seq.push_back(c.at(k + o));
  return verify_cycle(g, seq);
}

/// Crossing attachments: v_k, v_l attach to `first` and v_{k+1}, v_{l+1}
/// attach to `second`. Builds
///   v_k -> (first) -> v_l -> v_{l-1} -> ... -> v_{k+1} -> (second) -> v_{l+1} -> ... -> v_{k-1}.
/// When first and second are the same component the two internal paths
/// must be vertex-disjoint; nullopt when no such pair is found.
inline std::optional<Cycle> extend_via_crossing(const Graph& g, const Cycle& c, const OffCycleComponent& first,
                                                const OffCycleComponent& second, std::size_t k, std::size_t l) {
  const std::size_t len = c.length();
  if (k >= len || l >= len) throw Error(ErrorKind::invalid_input, "position out of range");
  if (k == l) throw Error(ErrorKind::invalid_input, "extend_via_crossing requires k != l");
  if (!first.attaches_at(k) || !first.attaches_at(l) || !second.attaches_at(c.next(k)) || !second.attaches_at(c.next(l)))
    throw Error(ErrorKind::precondition, "extend_via_crossing: attachments do not cross as required");

  const Vertex vk = c.at(k), vl = c.at(l), vk1 = c.at(c.next(k)), vl1 = c.at(c.next(l));
  std::optional<std::vector<Vertex>> path_first, path_second;
  if (first.index != second.index) {
    path_first = detail::path_through(g, first.vertices, vk, vl);
    path_second = detail::path_through(g, second.vertices, vk1, vl1);
  } else {
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    for (const auto& candidate : detail::simple_paths_through(g, first.vertices, vk, vl, 20000)) {
      for (Vertex v : candidate) blocked[static_cast<std::size_t>(v)] = 1;
      auto other = detail::path_through(g, second.vertices, vk1, vl1, blocked);
      for (Vertex v : candidate) blocked[static_cast<std::size_t>(v)] = 0;
      if (other) {
        path_first = candidate;
        path_second = std::move(other);
        break;
      }
    }
  }
  if (!path_first || !path_second) return std::nullopt;

  std::vector<Vertex> seq{vk};
  seq.insert(seq.end(), path_first->begin(), path_first->end());
  for (std::size_t p = l;; p = c.prev(p)) {
    seq.push_back(c.at(p));
    if (p == c.next(k)) break;
  }
  seq.insert(seq.end(), path_second->begin(), path_second->end());
  for (std::size_t p = c.next(l); p != k; p = c.next(p)) seq.push_back(c.at(p));
  return verify_cycle(g, seq);
}

/// Picks (j, Q): Q a minimal support of a component j != i attaching
/// strictly inside P, minimizing |P u Q|, then |Q|, then Q's start, then j.
inline SecondChoice select_second(const std::vector<OffCycleComponent>& comps, const Cycle& c, std::size_t i,
                                  const Arc& p) {
  const std::size_t len = c.length();
  std::optional<SecondChoice> best;
  std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> best_rank{};
  for (const auto& comp : comps) {
    if (comp.index == i) continue;
    const bool eligible = std::any_of(comp.attachments.begin(), comp.attachments.end(),
                                      [&](std::size_t a) { return p.interior_contains(a); });
    if (!eligible || comp.attachments.size() < 2) continue;
    for (const Arc& q : minimal_supports(c, comp)) {
      std::size_t union_size = 0;
      for (std::size_t pos = 0; pos < len; ++pos) union_size += (p.contains(pos) || q.contains(pos)) ? 1 : 0;
      auto rank = std::tuple(union_size, q.length(), q.start(), comp.index);
      if (!best || rank < best_rank) {
        best = SecondChoice{comp.index, q};
        best_rank = rank;
      }
    }
  }
  if (!best) throw Error(ErrorKind::precondition, "select_second: no other component attaches inside P");
  return *best;
}

/// The six vertices of interest. The middle N(i) vertex is the attachment
/// of i closest to the start of P; the N(j) witness inside P is the one
/// closest to the start of P. If that witness is already an end of Q, the
/// third N(j) vertex is the first interior attachment of Q.
inline InterestVertices choose_interest(std::size_t i, const Arc& p, std::size_t j, const Arc& q,
                                        const std::vector<OffCycleComponent>& comps) {
  const auto& ci = detail::component_at(comps, i);
  const auto& cj = detail::component_at(comps, j);
  if (ci.attachments.size() < 3 || cj.attachments.size() < 3)
    throw Error(ErrorKind::precondition, "choose_interest: a component has fewer than three attachments");

  auto first_by_offset = [](const Arc& arc, const OffCycleComponent& comp, auto&& keep) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t a : comp.attachments)
      if (keep(a) && (!best || arc.offset(a) < arc.offset(*best))) best = a;
    return best;
  };

  auto middle = first_by_offset(p, ci, [&](std::size_t a) { return p.interior_contains(a); });
  auto witness = first_by_offset(p, cj, [&](std::size_t a) { return p.interior_contains(a); });
  if (!middle || !witness) throw Error(ErrorKind::precondition, "choose_interest: no interior attachment inside P");
  if (!ci.attaches_at(p.start()) || !ci.attaches_at(p.end()) || !cj.attaches_at(q.start()) || !cj.attaches_at(q.end()) ||
      !q.contains(*witness))
    throw Error(ErrorKind::precondition, "choose_interest: P or Q is not a support with attachment ends");

  std::size_t third = *witness;
  if (third == q.start() || third == q.end()) {
    auto inner = first_by_offset(q, cj, [&](std::size_t a) { return q.interior_contains(a); });
    if (!inner) throw Error(ErrorKind::precondition, "choose_interest: Q has no interior attachment");
    third = *inner;
  }
  return {{p.start(), *middle, p.end()}, {q.start(), third, q.end()}, *witness};
}

/// Classifies the pair of supports: P inside Q; Q holding exactly one end
/// of P with interest labels alternating i/j around the cycle (a) or not
/// (b); Q holding both ends of P but not all of it, wrapping around the
/// outside (c).
inline Configuration classify(const Arc& p, const Arc& q, const InterestVertices& iv) {
  if (p.within(q)) return Configuration::p_sub_q;
  const bool has_start = q.contains(p.start());
  const bool has_end = q.contains(p.end());
  if (has_start && has_end) return Configuration::case_c;

  std::vector<std::pair<std::size_t, int>> labels;
  for (std::size_t pos : iv.first) labels.emplace_back(p.offset(pos), 0);
  for (std::size_t pos : iv.second) labels.emplace_back(p.offset(pos), 1);
  std::sort(labels.begin(), labels.end());
  bool alternating = true;
  for (std::size_t t = 0; t < labels.size(); ++t)
    alternating = alternating && labels[t].second != labels[(t + 1) % labels.size()].second;
  return alternating ? Configuration::case_a : Configuration::case_b;
}

namespace detail {

struct ArcSplit {
  std::array<Arc, 3> bold;
  std::array<std::vector<std::size_t>, 3> gaps;  // gap t lies between bold[t] and bold[t+1]
};

inline std::vector<Vertex> vertices_of(const Cycle& c, std::span<const std::size_t> positions) {
  std::vector<Vertex> out;
  for (std::size_t p : positions) out.push_back(c.at(p));
  return out;
}

inline ArcSplit split_from_bold(const Cycle& c, const std::array<Arc, 3>& bold) {
  ArcSplit s{bold, {}};
  for (std::size_t t = 0; t < 3; ++t) {
    const Arc& next = bold[(t + 1) % 3];
    for (std::size_t p = c.next(bold[t].end()); p != next.start(); p = c.next(p)) s.gaps[t].push_back(p);
  }
  return s;
}

// Model with A-sets = bold arcs and B-sets = the three components plus
// the gaps assigned to them (role -1 leaves a gap unused).
inline MinorModel assemble(const Cycle& c, const ArcSplit& split, const std::array<const OffCycleComponent*, 3>& b,
                           const std::array<int, 3>& gap_role) {
  MinorModel m;
  for (std::size_t t = 0; t < 3; ++t) {
    m.a[t] = make_vertex_set(vertices_of(c, split.bold[t].positions()));
    std::vector<Vertex> members(b[t]->vertices.begin(), b[t]->vertices.end());
    for (std::size_t gp = 0; gp < 3; ++gp)
      if (gap_role[gp] == static_cast<int>(t)) {
        auto vs = vertices_of(c, split.gaps[gp]);
        members.insert(members.end(), vs.begin(), vs.end());
      }
    m.b[t] = make_vertex_set(std::move(members));
  }
  return m;
}

struct Found {
  MinorModel model;
  std::size_t third;
};

// Bold arcs read off the six interest vertices: sort them along the cycle
// from the start of P and pair neighbours so every pair carries one label
// of each kind. The third branch set is H_k plus every gap meeting N(k).
inline std::optional<Found> pair_interest(const Graph& g, const Cycle& c, const std::vector<OffCycleComponent>& comps,
                                          std::size_t i, std::size_t j, const Arc& p, const InterestVertices& iv) {
  for (int tie_first : {0, 1}) {
    // (offset along P, tie key, label, position); tie_first decides which
    // label comes first when an i- and a j-vertex coincide.
    std::vector<std::tuple<std::size_t, int, int, std::size_t>> points;
    for (std::size_t pos : iv.first) points.emplace_back(p.offset(pos), tie_first, 0, pos);
    for (std::size_t pos : iv.second) points.emplace_back(p.offset(pos), 1 - tie_first, 1, pos);
    std::sort(points.begin(), points.end());
    auto label = [&](std::size_t t) { return std::get<2>(points[t % 6]); };
    auto position = [&](std::size_t t) { return std::get<3>(points[t % 6]); };

    for (std::size_t shift : {std::size_t{0}, std::size_t{1}}) {
      std::array<Arc, 3> bold;
      bool ok = true;
      for (std::size_t t = 0; t < 3 && ok; ++t) {
        const std::size_t x = shift + 2 * t, y = x + 1;
        ok = label(x) != label(y);
        bold[t] = Arc::between(position(x), position(y), c.length());
      }
      if (!ok) continue;
      const std::size_t total = bold[0].length() + bold[1].length() + bold[2].length();
      bool disjoint = total <= c.length();
      for (std::size_t t = 0; t < 3 && disjoint; ++t)
        for (std::size_t u = t + 1; u < 3 && disjoint; ++u)
          for (std::size_t pos : bold[t].positions()) disjoint = disjoint && !bold[u].contains(pos);
      if (!disjoint) continue;

      const ArcSplit split = split_from_bold(c, bold);
      for (const auto& k : comps) {
        if (k.index == i || k.index == j) continue;
        std::array<int, 3> role{-1, -1, -1};
        for (std::size_t gp = 0; gp < 3; ++gp)
          for (std::size_t pos : split.gaps[gp])
            if (k.attaches_at(pos)) role[gp] = 2;
        MinorModel m = assemble(c, split, {&comps[i], &comps[j], &k}, role);
        if (verify_k33_model(g, m)) return Found{std::move(m), k.index};
      }
    }
  }
  return std::nullopt;
}

// Exhaustive search over splits of the cycle into A1 G1 A2 G2 A3 G3
// (A nonempty, G possibly empty) and gap roles, for a fixed triple of
// components playing B1, B2, B3.
inline std::optional<MinorModel> search_arcs(const Graph& g, const Cycle& c,
                                             const std::array<const OffCycleComponent*, 3>& b) {
  const std::size_t len = c.length();
  if (len < 3) return std::nullopt;
  std::array<std::vector<int>, 3> prefix;
  for (std::size_t s = 0; s < len; ++s) {
    for (std::size_t u = 0; u < 3; ++u) {
      prefix[u].assign(len + 1, 0);
      for (std::size_t o = 0; o < len; ++o) prefix[u][o + 1] = prefix[u][o] + (b[u]->attaches_at((s + o) % len) ? 1 : 0);
    }
    // attachment of b[u] within offsets [lo, hi]
    auto has = [&](std::size_t u, std::size_t lo, std::size_t hi) { return lo <= hi && prefix[u][hi + 1] > prefix[u][lo]; };

    for (std::size_t e1 = 0; e1 < len; ++e1)
      for (std::size_t s2 = e1 + 1; s2 < len; ++s2)
        for (std::size_t e2 = s2; e2 < len; ++e2)
          for (std::size_t s3 = e2 + 1; s3 < len; ++s3)
            for (std::size_t e3 = s3; e3 < len; ++e3) {
              const std::array<std::pair<std::size_t, std::size_t>, 3> arcs{{{0, e1}, {s2, e2}, {s3, e3}}};
              const std::array<std::pair<std::size_t, std::size_t>, 3> gaps{{{e1 + 1, s2 - 1}, {e2 + 1, s3 - 1}, {e3 + 1, len - 1}}};
              std::array<std::array<bool, 3>, 3> direct{};
              for (std::size_t t = 0; t < 3; ++t)
                for (std::size_t u = 0; u < 3; ++u) direct[t][u] = has(u, arcs[t].first, arcs[t].second);
              std::array<std::vector<int>, 3> options;
              for (std::size_t gp = 0; gp < 3; ++gp) {
                options[gp].push_back(-1);
                for (std::size_t u = 0; u < 3; ++u)
                  if (has(u, gaps[gp].first, gaps[gp].second)) options[gp].push_back(static_cast<int>(u));
              }
              for (int r0 : options[0])
                for (int r1 : options[1])
                  for (int r2 : options[2]) {
                    const std::array<int, 3> role{r0, r1, r2};
                    bool ok = true;
                    for (std::size_t t = 0; t < 3 && ok; ++t)
                      for (std::size_t u = 0; u < 3 && ok; ++u) {
                        // A_t borders gap t-1 (before it) and gap t (after it)
                        const int before = role[(t + 2) % 3], after = role[t];
                        ok = direct[t][u] || before == static_cast<int>(u) || after == static_cast<int>(u);
                      }
                    if (!ok) continue;
                    ArcSplit split;
                    for (std::size_t t = 0; t < 3; ++t) {
                      split.bold[t] = Arc::between((s + arcs[t].first) % len, (s + arcs[t].second) % len, len);
                      for (std::size_t o = gaps[t].first; o <= gaps[t].second && gaps[t].first <= gaps[t].second; ++o)
                        split.gaps[t].push_back((s + o) % len);
                    }
                    MinorModel m = assemble(c, split, b, role);
                    if (verify_k33_model(g, m)) return m;
                  }
            }
  }
  return std::nullopt;
}

}  // namespace detail

/// Result of build_k33: the verified model, the third component used and
/// how the branch sets were found.
struct K33Build {
  MinorModel model;
  std::size_t third;
  std::string assignment;
};

/// Builds a verified K3,3 model for the configuration (i, P, j, Q, iv).
/// Throws extractor_incomplete when none of the candidate assignments
/// verifies.
inline K33Build build_k33(const Graph& g, const Cycle& c, const std::vector<OffCycleComponent>& comps, std::size_t i,
                          const Arc& p, std::size_t j, const Arc& q, const InterestVertices& iv) {
  (void)q;
  detail::component_at(comps, i);
  detail::component_at(comps, j);
  if (auto found = detail::pair_interest(g, c, comps, i, j, p, iv))
    return {std::move(found->model), found->third, "interest-pairing"};
  for (const auto& k : comps) {
    if (k.index == i || k.index == j) continue;
    if (auto m = detail::search_arcs(g, c, {&comps[i], &comps[j], &k})) return {std::move(*m), k.index, "arc-search"};
  }
  for (std::size_t x = 0; x < comps.size(); ++x)
    for (std::size_t y = x + 1; y < comps.size(); ++y)
      for (std::size_t z = y + 1; z < comps.size(); ++z)
        if (auto m = detail::search_arcs(g, c, {&comps[x], &comps[y], &comps[z]})) return {std::move(*m), z, "triple-search"};
  throw Error(ErrorKind::extractor_incomplete, "no K3,3 branch-set assignment verified");
}

/// Re-checks a witness against g and the input cycle.
inline bool witness_is_valid(const Graph& g, const Cycle& c, const Witness& w) {
  if (const auto* ch = std::get_if<ChordFound>(&w.value)) return is_chord(g, c, ch->chord);
  if (const auto* lc = std::get_if<LongerCycle>(&w.value)) {
    try {
      return verify_cycle(g, lc->cycle) == lc->cycle && lc->cycle.length() > c.length();
    } catch (const Error&) {
      return false;
    }
  }
  return verify_k33_model(g, std::get<K33Minor>(w.value).model).ok();
}

/// Certifying driver: chord, then (iii), then (iv), then the K3,3 case
/// analysis. Each stage scans positions in ascending order.
inline Witness extract_witness(const Graph& g, std::span<const Vertex> cycle) {
  const Cycle c = verify_cycle(g, cycle);
  if (!is_three_connected(g)) throw Error(ErrorKind::precondition, "graph is not 3-connected");

  auto certified = [&](Witness w) {
    if (!witness_is_valid(g, c, w)) throw Error(ErrorKind::extractor_incomplete, "witness failed re-verification");
    return w;
  };

  if (auto ch = chords(g, c); !ch.empty()) return certified({ChordFound{ch.front()}, WitnessRule::chord});

  const auto comps = decompose(g, c);
  const LemmaReport report = check_lemma(g, c, comps);
  if (!report.unattached_positions.empty() || !report.small_attachment_sets.empty())
    throw Error(ErrorKind::precondition, "attachment structure contradicts 3-connectivity");

  if (!report.consecutive.empty()) {
    const auto& v = report.consecutive.front();
    return certified({LongerCycle{extend_via_consecutive(g, c, comps[v.component], v.position)}, WitnessRule::lemma_iii});
  }
  for (const auto& x : report.crossings)
    if (auto longer = extend_via_crossing(g, c, comps[x.first], comps[x.second], x.k, x.l))
      return certified({LongerCycle{std::move(*longer)}, WitnessRule::lemma_iv});

  const SupportChoice first = global_minimal_support(comps, c);
  const SecondChoice second = select_second(comps, c, first.component, first.arc);
  const InterestVertices iv = choose_interest(first.component, first.arc, second.component, second.arc, comps);
  const Configuration config = classify(first.arc, second.arc, iv);
  K33Build built = build_k33(g, c, comps, first.component, first.arc, second.component, second.arc, iv);
  CaseTrace trace{first.component, second.component, built.third, first.arc, second.arc, iv, config, built.assignment};
  return certified({K33Minor{std::move(built.model), std::move(trace)}, rule_for(config)});
}

inline Witness extract_witness(const Graph& g, const Cycle& c) { return extract_witness(g, c.vertices()); }

// ---------------------------------------------------------------------------
// JSON certificate

inline constexpr const char* kWitnessSchema = "chordwitness.witness/1";

inline nlohmann::json arc_to_json(const Cycle& c, const Arc& a) {
  std::vector<Vertex> vs;
  for (std::size_t pos : a.positions()) vs.push_back(c.at(pos));
  return {{"start", a.start()}, {"end", a.end()}, {"vertices", vs}};
}

inline nlohmann::json witness_to_json(const Cycle& input, const Witness& w) {
  nlohmann::json j;
  j["schema"] = kWitnessSchema;
  j["rule"] = to_string(w.rule);
  j["input_cycle"] = std::vector<Vertex>(input.vertices().begin(), input.vertices().end());
  if (const auto* ch = std::get_if<ChordFound>(&w.value)) {
    j["type"] = "chord";
    j["data"] = {{"chord", {ch->chord.u, ch->chord.v}}};
  } else if (const auto* lc = std::get_if<LongerCycle>(&w.value)) {
    j["type"] = "longer_cycle";
    j["data"] = {{"cycle", std::vector<Vertex>(lc->cycle.vertices().begin(), lc->cycle.vertices().end())},
                 {"length", lc->cycle.length()}};
  } else {
    const auto& k = std::get<K33Minor>(w.value);
    j["type"] = "k33_minor";
    j["data"] = {{"model", model_to_json(k.model)},
                 {"components", {k.trace.first, k.trace.second, k.trace.third}},
                 {"P", arc_to_json(input, k.trace.p)},
                 {"Q", arc_to_json(input, k.trace.q)},
                 {"interest", {{"i", k.trace.interest.first}, {"j", k.trace.interest.second}}},
                 {"assignment", k.trace.assignment}};
  }
  return j;
}

}  // namespace chordwitness
