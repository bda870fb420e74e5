#pragma once

// Seeded graph generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded integers are drawn with our own rejection
// sampler (uniform_below) rather than std::uniform_int_distribution, whose
// algorithm is implementation-defined, so a (family, n, seed) triple yields
// the same graph on every platform.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordwitness/connectivity.hpp"
#include "chordwitness/graph.hpp"

namespace chordwitness {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform_below(size)); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 step; used to derive per-instance seeds from a campaign seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// Named families

/// Wheel on n vertices: rim 0..n-2 in order, hub n-1.
inline Graph wheel(int n) {
  if (n < 4) throw Error(ErrorKind::invalid_input, "wheel needs n >= 4");
  std::vector<std::pair<Vertex, Vertex>> e;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return Graph::from_edge_list(n, e);
}

/// Prism on n vertices (n even, n >= 6): cycles 0..k-1 and k..2k-1 plus
/// the matching i -- i+k.
inline Graph prism(int n) {
  if (n < 6 || n % 2 != 0) throw Error(ErrorKind::invalid_input, "prism needs even n >= 6");
  const int k = n / 2;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return Graph::from_edge_list(n, e);
}

inline Graph complete(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, e);
}

/// Cube Q3: vertex ids are 3-bit strings, edges flip one bit.
inline Graph cube() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
  return Graph::from_edge_list(8, e);
}

/// Octahedron: K6 minus the perfect matching {0,3},{1,4},{2,5}.
inline Graph octahedron() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  return Graph::from_edge_list(6, e);
}

/// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::invalid_input, "cycle graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

/// Named graphs by family string: wheel and prism take n; cube, octahedron,
/// petersen, k4, k5 and k33 ignore it.
inline Graph named(std::string_view family, int n = 0) {
  if (family == "wheel") return wheel(n);
  if (family == "prism") return prism(n);
  if (family == "cube") return cube();
  if (family == "octahedron") return octahedron();
  if (family == "petersen") return petersen();
  if (family == "k4") return complete(4);
  if (family == "k5") return complete(5);
  if (family == "k33") return complete_bipartite(3, 3);
  throw Error(ErrorKind::invalid_input, "unknown named graph: " + std::string(family));
}

// ---------------------------------------------------------------------------
// Random families

namespace detail {

class AdjacencyBuilder {
 public:
  explicit AdjacencyBuilder(int n = 0) : adj_(static_cast<std::size_t>(n)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  Vertex add_vertex() {
    adj_.emplace_back();
    return order() - 1;
  }
  bool has_edge(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].count(v) > 0; }
  void add_edge(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
  }
  const std::set<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& s : adj_) twice += s.size();
    return twice / 2;
  }

  Graph build() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) e.emplace_back(u, v);
    return Graph::from_edge_list(order(), e);
  }

 private:
  std::vector<std::set<Vertex>> adj_;
};

}  // namespace detail

/// Random planar triangulation: K4, then repeated insertion of a new vertex
/// into a uniformly chosen face, then `flips` diagonal flips on uniformly
/// chosen edges (a flip is skipped when the new diagonal already exists).
/// Every simple triangulation on n >= 4 vertices is 3-connected.
inline Graph random_planar_triangulation(int n, int flips, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorKind::invalid_input, "triangulation needs n >= 4");
  if (flips < 0) throw Error(ErrorKind::invalid_input, "flip count must be non-negative");
  Rng rng(seed);
  using Face = std::array<Vertex, 3>;
  std::vector<Face> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  detail::AdjacencyBuilder b(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) b.add_edge(u, v);

  while (b.order() < n) {
    const std::size_t f = rng.index(faces.size());
    const Face old = faces[f];
    const Vertex x = b.add_vertex();
    for (Vertex c : old) b.add_edge(x, c);
    faces[f] = {old[0], old[1], x};
    faces.push_back({old[1], old[2], x});
    faces.push_back({old[0], old[2], x});
  }

  auto has = [](const Face& f, Vertex v) { return f[0] == v || f[1] == v || f[2] == v; };
  auto third = [](const Face& f, Vertex u, Vertex w) {
    for (Vertex v : f)
      if (v != u && v != w) return v;
    return -1;
  };

  int done = 0;
  const long max_attempts = 50L * flips + 100;
  for (long attempt = 0; done < flips && attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges = b.build().edges();
    const Edge e = edges[rng.index(edges.size())];
    std::array<std::size_t, 2> incident{};
    int found = 0;
    for (std::size_t f = 0; f < faces.size() && found < 2; ++f)
      if (has(faces[f], e.u) && has(faces[f], e.v)) incident[static_cast<std::size_t>(found++)] = f;
    if (found != 2) continue;
    const Vertex x = third(faces[incident[0]], e.u, e.v);
    const Vertex y = third(faces[incident[1]], e.u, e.v);
    if (x == y || b.has_edge(x, y)) continue;
    b.remove_edge(e.u, e.v);
    b.add_edge(x, y);
    faces[incident[0]] = {x, y, e.u};
    faces[incident[1]] = {x, y, e.v};
    ++done;
  }
  return b.build();
}

/// Random 3-connected graph with exactly n vertices and m edges, grown from
/// a wheel by random edge additions and vertex splits (a vertex of degree
/// >= 4 splits into two adjacent vertices, each keeping >= 2 of the old
/// neighbors). Both operations preserve 3-connectivity.
///
/// With `check_each_step`, every intermediate graph is re-checked and a
/// failure throws (a debugging aid; it makes generation much slower).
inline Graph random_three_connected(int n, int m, std::uint64_t seed, bool check_each_step = false) {
  if (n < 4) throw Error(ErrorKind::invalid_input, "random_three_connected needs n >= 4");
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  if (2L * m < 3L * n) throw Error(ErrorKind::invalid_input, "m below ceil(3n/2): no 3-connected graph exists");
  if (m > max_edges) throw Error(ErrorKind::invalid_input, "m exceeds n(n-1)/2");

  const int rim_lo = n == 4 ? 3 : 4;
  const int rim_hi = std::min(n - 1, m - n + 1);
  if (rim_lo > rim_hi) throw Error(ErrorKind::invalid_input, "(n, m) unreachable from any wheel");

  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int rim = rim_lo + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(rim_hi - rim_lo + 1)));
    detail::AdjacencyBuilder b(rim + 1);
    for (int i = 0; i < rim; ++i) {
      b.add_edge(i, (i + 1) % rim);
      b.add_edge(i, rim);
    }
    int splits = n - (rim + 1);
    int adds = m - 2 * rim - splits;
    if (adds < 0) continue;

    bool stuck = false;
    while (splits > 0 || adds > 0) {
      std::vector<Vertex> splittable;
      if (splits > 0)
        for (Vertex v = 0; v < b.order(); ++v)
          if (b.degree(v) >= 4) splittable.push_back(v);
      std::vector<Edge> non_edges;
      if (adds > 0)
        for (Vertex u = 0; u < b.order(); ++u)
          for (Vertex v = u + 1; v < b.order(); ++v)
            if (!b.has_edge(u, v)) non_edges.push_back({u, v});
      if (splittable.empty() && non_edges.empty()) {
        stuck = true;
        break;
      }
      bool do_split = !splittable.empty();
      if (do_split && !non_edges.empty())
        do_split = rng.uniform_below(static_cast<std::uint64_t>(splits + adds)) < static_cast<std::uint64_t>(splits);

      if (do_split) {
        const Vertex v = splittable[rng.index(splittable.size())];
        std::vector<Vertex> nbrs(b.neighbors(v).begin(), b.neighbors(v).end());
        rng.shuffle(nbrs);
        const auto moved = 2 + rng.index(nbrs.size() - 3);  // in [2, deg-2]
        const Vertex w = b.add_vertex();
        for (std::size_t t = 0; t < moved; ++t) {
          b.remove_edge(v, nbrs[t]);
          b.add_edge(w, nbrs[t]);
        }
        b.add_edge(v, w);
        --splits;
      } else {
        const Edge e = non_edges[rng.index(non_edges.size())];
        b.add_edge(e.u, e.v);
        --adds;
      }
      if (check_each_step && !is_three_connected(b.build()))
        throw Error(ErrorKind::precondition, "generator step broke 3-connectivity");
    }
    if (stuck) continue;
    return b.build();
  }
  throw Error(ErrorKind::invalid_input, "(n, m) not reached after bounded attempts");
}

enum class Family { wheel, prism, apollonian, flip_triangulation, tutte_wheel };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::wheel: return "wheel";
    case Family::prism: return "prism";
    case Family::apollonian: return "apollonian";
    case Family::flip_triangulation: return "flip_triangulation";
    case Family::tutte_wheel: return "tutte_wheel";
  }
  return "unknown";
}

inline Family family_from_string(std::string_view s) {
  for (Family f : {Family::wheel, Family::prism, Family::apollonian, Family::flip_triangulation, Family::tutte_wheel})
    if (to_string(f) == s) return f;
  throw Error(ErrorKind::invalid_input, "unknown family: " + std::string(s));
}

struct GenSpec {
  Family family = Family::apollonian;
  int n = 8;
  std::uint64_t seed = 0;
  int flips = -1;  // flip_triangulation; -1 means 2n
  int m = -1;      // tutte_wheel; -1 means 2n - 2

  int effective_flips() const { return family == Family::flip_triangulation ? (flips < 0 ? 2 * n : flips) : 0; }
  int effective_m() const { return m < 0 ? 2 * n - 2 : m; }
};

inline Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::wheel: return wheel(spec.n);
    case Family::prism: return prism(spec.n);
    case Family::apollonian: return random_planar_triangulation(spec.n, 0, spec.seed);
    case Family::flip_triangulation: return random_planar_triangulation(spec.n, spec.effective_flips(), spec.seed);
    case Family::tutte_wheel: return random_three_connected(spec.n, spec.effective_m(), spec.seed);
  }
  throw Error(ErrorKind::invalid_input, "unknown family");
}

}  // namespace chordwitness
