#include <gtest/gtest.h>

#include <numeric>

#include "chordwitness/decomposition.hpp"
#include "chordwitness/generators.hpp"
#include "support/oracles.hpp"

using namespace chordwitness;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::invalid_input;
}

Cycle ring(int len) {
  std::vector<Vertex> v(static_cast<std::size_t>(len));
  std::iota(v.begin(), v.end(), 0);
  return Cycle::canonical(v);
}

OffCycleComponent comp(std::size_t index, std::vector<std::size_t> att) {
  return {index, {}, std::move(att)};
}

Cycle on(const Graph& g, std::vector<Vertex> v) { return verify_cycle(g, v); }

using Positions = std::vector<std::size_t>;

}  // namespace

TEST(Arc, Basics) {
  Arc a = Arc::between(6, 1, 8);
  EXPECT_EQ(a.length(), 4u);
  EXPECT_EQ(a.end(), 1u);
  EXPECT_EQ(a.positions(), (Positions{6, 7, 0, 1}));
  EXPECT_TRUE(a.contains(0));
  EXPECT_FALSE(a.contains(2));
  EXPECT_TRUE(a.interior_contains(7));
  EXPECT_FALSE(a.interior_contains(6));
  EXPECT_TRUE(Arc::between(7, 0, 8).within(a));
  EXPECT_FALSE(Arc::between(5, 0, 8).within(a));
  Arc full = Arc::between(3, 2, 8);
  EXPECT_TRUE(full.full());
  EXPECT_EQ(kind_of([] { Arc(0, 0, 5); }), ErrorKind::invalid_input);
}

TEST(Decompose, K4Triangle) {
  Graph g = complete(4);
  auto comps = decompose(g, on(g, {0, 1, 2}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].vertices, VertexSet{3});
  EXPECT_EQ(comps[0].attachments, (Positions{0, 1, 2}));
}

TEST(Decompose, K33FourCycle) {
  Graph g = complete_bipartite(3, 3);
  Cycle c = on(g, {0, 3, 1, 4});
  auto comps = decompose(g, c);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].vertices, (VertexSet{2, 5}));
  EXPECT_EQ(comps[0].attachments, (Positions{0, 1, 2, 3}));
}

TEST(Decompose, WheelRim) {
  Graph g = wheel(6);
  auto comps = decompose(g, on(g, {0, 1, 2, 3, 4}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].vertices, VertexSet{5});
  EXPECT_EQ(comps[0].attachments, (Positions{0, 1, 2, 3, 4}));
}

TEST(Decompose, HamiltonianCycleHasNoComponents) {
  Graph g = complete(4);
  EXPECT_TRUE(decompose(g, on(g, {0, 1, 2, 3})).empty());
}

TEST(Decompose, PartitionAndAttachmentProperty) {
  for (int t = 0; t < 30; ++t) {
    const int n = 8 + t % 5;
    Graph g = random_three_connected(n, (3 * n + 1) / 2 + t % 4, 500 + static_cast<std::uint64_t>(t));
    for (const auto& cyc : oracle::chordless_cycles(g, 20)) {
      Cycle c = Cycle::canonical(cyc);
      auto comps = decompose(g, c);
      std::vector<int> owner(static_cast<std::size_t>(n), -1);
      for (const auto& x : comps) {
        EXPECT_TRUE(induces_connected(g, x.vertices));
        for (Vertex v : x.vertices) {
          EXPECT_FALSE(c.contains(v));
          EXPECT_EQ(owner[static_cast<std::size_t>(v)], -1);
          owner[static_cast<std::size_t>(v)] = static_cast<int>(x.index);
        }
        Positions expected;
        for (std::size_t p = 0; p < c.length(); ++p)
          for (Vertex v : x.vertices)
            if (g.has_edge(v, c.at(p))) {
              expected.push_back(p);
              break;
            }
        EXPECT_EQ(x.attachments, expected);
      }
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(owner[static_cast<std::size_t>(v)] >= 0, !c.contains(v));
    }
  }
}

TEST(CheckLemma, K4TriangleIsConsecutive) {
  Graph g = complete(4);
  Cycle c = on(g, {0, 1, 2});
  auto r = check_lemma(g, c, decompose(g, c));
  EXPECT_TRUE(r.small_attachment_sets.empty());
  EXPECT_TRUE(r.unattached_positions.empty());
  EXPECT_EQ(r.consecutive, (std::vector<ConsecutiveAttachment>{{0, 0}, {0, 1}, {0, 2}}));
}

TEST(CheckLemma, HexagonalPrismFace) {
  Graph g = prism(12);
  Cycle c = on(g, {0, 1, 2, 3, 4, 5});
  auto comps = decompose(g, c);
  ASSERT_EQ(comps.size(), 1u);
  auto r = check_lemma(g, c, comps);
  EXPECT_TRUE(r.small_attachment_sets.empty());
  EXPECT_TRUE(r.unattached_positions.empty());
  EXPECT_EQ(r.consecutive.size(), 6u);
  EXPECT_FALSE(r.clean());
}

TEST(CheckLemma, CrossingDetected) {
  // C8 with X={8} on v0,v4 and Y={9} on v1,v5.
  Graph g = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {8, 0}, {8, 4}, {9, 1}, {9, 5}});
  Cycle c = on(g, {0, 1, 2, 3, 4, 5, 6, 7});
  auto r = check_lemma(g, c, decompose(g, c));
  EXPECT_EQ(r.crossings, (std::vector<CrossingAttachment>{{0, 1, 0, 4}}));
  EXPECT_TRUE(r.consecutive.empty());
  EXPECT_EQ(r.small_attachment_sets, (Positions{0, 1}));
  EXPECT_EQ(r.unattached_positions, (Positions{2, 3, 6, 7}));
}

TEST(CheckLemma, ChordRejected) {
  Graph g = complete(4);
  Cycle c = on(g, {0, 1, 2, 3});
  EXPECT_EQ(kind_of([&] { check_lemma(g, c, decompose(g, c)); }), ErrorKind::invalid_input);
}

TEST(MinimalSupports, Examples) {
  Cycle c6 = ring(6), c8 = ring(8);
  EXPECT_EQ(minimal_supports(c6, comp(0, {0, 2, 4})),
            (std::vector<Arc>{Arc::between(0, 4, 6), Arc::between(2, 0, 6), Arc::between(4, 2, 6)}));
  EXPECT_EQ(minimal_supports(c6, comp(0, {0, 1, 2})),
            (std::vector<Arc>{Arc::between(0, 2, 6), Arc::between(1, 0, 6), Arc::between(2, 1, 6)}));
  EXPECT_EQ(minimal_supports(c8, comp(0, {0, 3})), (std::vector<Arc>{Arc::between(0, 3, 8), Arc::between(3, 0, 8)}));
  EXPECT_EQ(kind_of([&] { minimal_supports(c8, comp(0, {5})); }), ErrorKind::precondition);
}

TEST(MinimalSupports, MinimalityProperty) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const std::size_t len = 4 + rng.index(12);
    Positions att;
    for (std::size_t p = 0; p < len; ++p)
      if (rng.uniform_below(3) == 0) att.push_back(p);
    if (att.size() < 2) continue;
    Cycle c = ring(static_cast<int>(len));
    auto supports = minimal_supports(c, comp(0, att));
    EXPECT_EQ(supports.size(), att.size());
    for (const Arc& a : supports) {
      for (std::size_t p : att) EXPECT_TRUE(a.contains(p));
      EXPECT_TRUE(std::binary_search(att.begin(), att.end(), a.start()));
      EXPECT_TRUE(std::binary_search(att.begin(), att.end(), a.end()));
      if (a.length() > 1) {
        Arc shorter_front(a.start() + 1, a.length() - 1, len);
        Arc shorter_back(a.start(), a.length() - 1, len);
        bool front_ok = true, back_ok = true;
        for (std::size_t p : att) {
          front_ok = front_ok && shorter_front.contains(p);
          back_ok = back_ok && shorter_back.contains(p);
        }
        EXPECT_FALSE(front_ok);
        EXPECT_FALSE(back_ok);
      }
    }
  }
}

TEST(GlobalMinimalSupport, Examples) {
  Cycle c6 = ring(6), c8 = ring(8);
  auto one = global_minimal_support({comp(0, {0, 2, 4})}, c6);
  EXPECT_EQ(one.component, 0u);
  EXPECT_EQ(one.arc, Arc::between(0, 4, 6));

  auto two = global_minimal_support({comp(0, {0, 2, 4, 6}), comp(1, {1, 3})}, c8);
  EXPECT_EQ(two.component, 1u);
  EXPECT_EQ(two.arc, Arc::between(1, 3, 8));

  auto all = global_minimal_support({comp(0, {0, 1, 2, 3, 4, 5})}, c6);
  EXPECT_EQ(all.arc.start(), 0u);
  EXPECT_EQ(all.arc.length(), 6u);

  EXPECT_EQ(kind_of([&] { global_minimal_support({}, c6); }), ErrorKind::precondition);
}

TEST(GlobalMinimalSupport, ContainsNoOtherSupport) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t len = 6 + rng.index(10);
    std::vector<OffCycleComponent> comps;
    for (std::size_t i = 0; i < 3; ++i) {
      Positions att;
      for (std::size_t p = 0; p < len; ++p)
        if (rng.uniform_below(3) == 0) att.push_back(p);
      if (att.size() >= 2) comps.push_back(comp(comps.size(), att));
    }
    if (comps.empty()) continue;
    Cycle c = ring(static_cast<int>(len));
    auto best = global_minimal_support(comps, c);
    for (const auto& x : comps)
      for (const Arc& a : minimal_supports(c, x))
        if (a.within(best.arc)) {
          EXPECT_EQ(a.length(), best.arc.length());
        }
  }
}
