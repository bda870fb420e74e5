#pragma once

// Components of G minus a cycle, their attachment positions, supports, and
// the four structural facts that hold around a chordless longest cycle of a
// 3-connected graph:
//   (i)   every component attaches to at least three cycle vertices;
//   (ii)  every cycle vertex is an attachment of some component;
//   (iii) no component attaches to two consecutive cycle vertices;
//   (iv)  there are no k != l and components i, j with v_k, v_l attached
//         to i and v_{k+1}, v_{l+1} attached to j.
// Violations of (iii)/(iv) are exactly the situations in which a strictly
// longer cycle can be routed through the components (see extractor.hpp).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "chordwitness/cycle.hpp"
#include "chordwitness/graph.hpp"

namespace chordwitness {

/// A connected component of G minus V(C) and the cycle positions it
/// attaches to (sorted ascending).
struct OffCycleComponent {
  std::size_t index = 0;
  VertexSet vertices;
  std::vector<std::size_t> attachments;

  bool attaches_at(std::size_t pos) const { return std::binary_search(attachments.begin(), attachments.end(), pos); }
};

/// Contiguous run of cycle positions, read forward from `start`.
/// `length()` counts vertices; length == cycle length is the full cycle
/// opened at `start` (its end is the position just before start).
class Arc {
 public:
  Arc() = default;
  Arc(std::size_t start, std::size_t length, std::size_t cycle_length)
      : start_(start % cycle_length), length_(length), cycle_length_(cycle_length) {
    if (length == 0 || length > cycle_length) throw Error(ErrorKind::invalid_input, "arc length out of range");
  }

  /// Forward arc from `start` to `end` inclusive (start == end gives one vertex).
  static Arc between(std::size_t start, std::size_t end, std::size_t cycle_length) {
    return Arc(start, (end + cycle_length - start) % cycle_length + 1, cycle_length);
  }

  std::size_t start() const noexcept { return start_; }
  std::size_t end() const noexcept { return (start_ + length_ - 1) % cycle_length_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t cycle_length() const noexcept { return cycle_length_; }
  bool full() const noexcept { return length_ == cycle_length_; }

  /// Steps from start to pos going forward.
  std::size_t offset(std::size_t pos) const { return (pos + cycle_length_ - start_) % cycle_length_; }
  std::size_t at(std::size_t offset) const { return (start_ + offset) % cycle_length_; }
  bool contains(std::size_t pos) const { return offset(pos) < length_; }
  /// Strictly between the two ends.
  bool interior_contains(std::size_t pos) const {
    const std::size_t o = offset(pos);
    return o > 0 && o + 1 < length_;
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out(length_);
    for (std::size_t o = 0; o < length_; ++o) out[o] = at(o);
    return out;
  }

  /// Vertex-set inclusion.
  bool within(const Arc& other) const {
    if (other.full()) return true;
    for (std::size_t o = 0; o < length_; ++o)
      if (!other.contains(at(o))) return false;
    return true;
  }

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  std::size_t start_ = 0;
  std::size_t length_ = 1;
  std::size_t cycle_length_ = 1;
};

inline std::vector<OffCycleComponent> decompose(const Graph& g, const Cycle& c) {
  verify_cycle(g, c);
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t p = 0; p < c.length(); ++p) pos[static_cast<std::size_t>(c.at(p))] = static_cast<int>(p);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (pos[static_cast<std::size_t>(v)] < 0) rest.push_back(v);

  std::vector<OffCycleComponent> out;
  for (VertexSet& members : connected_components(g, rest)) {
    OffCycleComponent comp;
    comp.index = out.size();
    for (Vertex v : members)
      for (Vertex w : g.neighbors(v))
        if (pos[static_cast<std::size_t>(w)] >= 0) comp.attachments.push_back(static_cast<std::size_t>(pos[static_cast<std::size_t>(w)]));
    std::sort(comp.attachments.begin(), comp.attachments.end());
    comp.attachments.erase(std::unique(comp.attachments.begin(), comp.attachments.end()), comp.attachments.end());
    comp.vertices = std::move(members);
    out.push_back(std::move(comp));
  }
  return out;
}

struct ConsecutiveAttachment {
  std::size_t component;
  std::size_t position;  // v_k and v_{k+1} both attach
  friend bool operator==(const ConsecutiveAttachment&, const ConsecutiveAttachment&) = default;
};

struct CrossingAttachment {
  std::size_t first;   // component attached at v_k and v_l
  std::size_t second;  // component attached at v_{k+1} and v_{l+1}
  std::size_t k;
  std::size_t l;       // k < l
  friend bool operator==(const CrossingAttachment&, const CrossingAttachment&) = default;
};

struct LemmaReport {
  std::vector<std::size_t> small_attachment_sets;  // (i): components with < 3 attachments
  std::vector<std::size_t> unattached_positions;   // (ii)
  std::vector<ConsecutiveAttachment> consecutive;  // (iii)
  std::vector<CrossingAttachment> crossings;       // (iv)

  bool clean() const {
    return small_attachment_sets.empty() && unattached_positions.empty() && consecutive.empty() && crossings.empty();
  }
};

/// Scans for violations of (i)-(iv). Throws invalid_input when c has a
/// chord; (i) violations signal that the host is not 3-connected.
inline LemmaReport check_lemma(const Graph& g, const Cycle& c, const std::vector<OffCycleComponent>& comps) {
  if (!chords(g, c).empty()) throw Error(ErrorKind::invalid_input, "check_lemma: cycle has a chord");
  const std::size_t len = c.length();
  LemmaReport report;
  for (const auto& comp : comps)
    if (comp.attachments.size() < 3) report.small_attachment_sets.push_back(comp.index);
  for (std::size_t p = 0; p < len; ++p) {
    bool any = false;
    for (const auto& comp : comps) any = any || comp.attaches_at(p);
    if (!any) report.unattached_positions.push_back(p);
  }
  for (std::size_t k = 0; k < len; ++k)
    for (const auto& comp : comps)
      if (comp.attaches_at(k) && comp.attaches_at(c.next(k))) report.consecutive.push_back({comp.index, k});
  for (std::size_t k = 0; k < len; ++k)
    for (std::size_t l = k + 1; l < len; ++l)
      for (const auto& first : comps) {
        if (!first.attaches_at(k) || !first.attaches_at(l)) continue;
        for (const auto& second : comps)
          if (second.attaches_at(c.next(k)) && second.attaches_at(c.next(l)))
            report.crossings.push_back({first.index, second.index, k, l});
      }
  return report;
}

/// The inclusion-minimal supports of one component: for each pair of
/// cyclically consecutive attachments, the arc that skips the gap between
/// them. Sorted by start position.
inline std::vector<Arc> minimal_supports(const Cycle& c, const OffCycleComponent& comp) {
  const auto& att = comp.attachments;
  if (att.size() < 2) throw Error(ErrorKind::precondition, "minimal_supports needs at least two attachments");
  std::vector<Arc> out;
  for (std::size_t s = 0; s < att.size(); ++s) out.push_back(Arc::between(att[(s + 1) % att.size()], att[s], c.length()));
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.start() < b.start(); });
  return out;
}

struct SupportChoice {
  std::size_t component;
  Arc arc;
};

/// A support that contains no other support of any component: the shortest
/// minimal support, ties broken by start position then component index.
inline SupportChoice global_minimal_support(const std::vector<OffCycleComponent>& comps, const Cycle& c) {
  std::optional<SupportChoice> best;
  auto rank = [](const SupportChoice& s) { return std::tuple(s.arc.length(), s.arc.start(), s.component); };
  for (const auto& comp : comps) {
    for (const Arc& arc : minimal_supports(c, comp)) {
      SupportChoice cand{comp.index, arc};
      if (!best || rank(cand) < rank(*best)) best = cand;
    }
  }
  if (!best) throw Error(ErrorKind::precondition, "global_minimal_support: no off-cycle component");
  return *best;
}

}  // namespace chordwitness
