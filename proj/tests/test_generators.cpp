#include <gtest/gtest.h>

#include "chordwitness/connectivity.hpp"
#include "chordwitness/generators.hpp"
#include "chordwitness/io.hpp"
#include "chordwitness/minors.hpp"

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

int count_degree(const Graph& g, int d) {
  int c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == d ? 1 : 0;
  return c;
}

}  // namespace

TEST(Named, Wheel) {
  Graph g = wheel(6);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(g.degree(5), 5);
  EXPECT_EQ(count_degree(g, 3), 5);
  EXPECT_EQ(wheel(4), complete(4));
  EXPECT_EQ(kind_of([] { wheel(3); }), ErrorKind::invalid_input);
}

TEST(Named, Prism) {
  Graph g = prism(6);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(count_degree(g, 3), 6);
  EXPECT_TRUE(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(3, 4) && g.has_edge(4, 5) && g.has_edge(3, 5));
  EXPECT_EQ(kind_of([] { prism(7); }), ErrorKind::invalid_input);
}

TEST(Named, Others) {
  EXPECT_EQ(complete_bipartite(3, 3).size(), 9u);
  EXPECT_EQ(cube().size(), 12u);
  EXPECT_EQ(count_degree(cube(), 3), 8);
  EXPECT_EQ(octahedron().size(), 12u);
  EXPECT_EQ(count_degree(octahedron(), 4), 6);
  EXPECT_EQ(petersen().size(), 15u);
  EXPECT_EQ(count_degree(petersen(), 3), 10);
  EXPECT_EQ(named("k5"), complete(5));
  EXPECT_EQ(kind_of([] { named("dodecahedron"); }), ErrorKind::invalid_input);
}

TEST(Triangulation, SmallestIsK4) {
  EXPECT_EQ(random_planar_triangulation(4, 0, 1), complete(4));
  EXPECT_EQ(kind_of([] { random_planar_triangulation(3, 0, 1); }), ErrorKind::invalid_input);
}

TEST(Triangulation, EdgeCountPlanarAndThreeConnected) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    for (int flips : {0, 2 * n}) {
      Graph g = random_planar_triangulation(n, flips, seed);
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(g.size(), static_cast<std::size_t>(3 * n - 6));
      EXPECT_TRUE(is_three_connected(g));
      EXPECT_TRUE(is_planar_smallgraph(g)) << emit_graph6(g);
    }
  }
  EXPECT_EQ(random_planar_triangulation(10, 0, 7).size(), 24u);
}

TEST(Triangulation, FlipsChangeTheGraph) {
  int differs = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    differs += random_planar_triangulation(11, 0, seed) != random_planar_triangulation(11, 30, seed) ? 1 : 0;
  EXPECT_GT(differs, 5);
}

TEST(ThreeConnectedGen, ExactOrderAndSize) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 10);
    const int m = std::min((3 * n + 1) / 2 + static_cast<int>(seed % 7), n * (n - 1) / 2);
    Graph g = random_three_connected(n, m, seed);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(m));
    EXPECT_TRUE(is_three_connected(g)) << emit_graph6(g);
  }
  EXPECT_EQ(random_three_connected(4, 6, 3), complete(4));
  EXPECT_EQ(random_three_connected(8, 12, 5).size(), 12u);
}

TEST(ThreeConnectedGen, EveryStepChecked) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) EXPECT_NO_THROW(random_three_connected(12, 20, seed, true));
}

TEST(ThreeConnectedGen, Errors) {
  EXPECT_EQ(kind_of([] { random_three_connected(5, 6, 0); }), ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([] { random_three_connected(3, 3, 0); }), ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([] { random_three_connected(6, 16, 0); }), ErrorKind::invalid_input);
}

TEST(Generate, DeterministicPerSeed) {
  for (Family f : {Family::apollonian, Family::flip_triangulation, Family::tutte_wheel}) {
    GenSpec spec{f, 11, 1234};
    EXPECT_EQ(emit_graph6(generate(spec)), emit_graph6(generate(spec)));
    GenSpec other = spec;
    other.seed = 1235;
    EXPECT_NE(emit_graph6(generate(spec)), emit_graph6(generate(other)));
  }
}

TEST(Generate, FrozenOutputs) {
  // Pinned so that a change in the RNG or the generators shows up here.
  EXPECT_EQ(emit_graph6(generate({Family::apollonian, 10, 42})), "I~mlLEWJ?");
  EXPECT_EQ(emit_graph6(generate({Family::flip_triangulation, 10, 42})), "I]ilNfob?");
  EXPECT_EQ(emit_graph6(generate({Family::tutte_wheel, 10, 42})), "I[EHaREHo");
}

TEST(Generate, FamilyNames) {
  EXPECT_EQ(family_from_string("tutte_wheel"), Family::tutte_wheel);
  EXPECT_EQ(to_string(Family::flip_triangulation), "flip_triangulation");
  EXPECT_EQ(kind_of([] { family_from_string("nope"); }), ErrorKind::invalid_input);
  GenSpec w{Family::wheel, 7, 0};
  EXPECT_EQ(generate(w), wheel(7));
}

TEST(SeedMixing, SplitMixReference) {
  // First outputs of the SplitMix64 reference generator seeded with 0.
  EXPECT_EQ(mix_seed(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(mix_seed(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(RngTest, UniformBelowInRange) {
  Rng rng(99);
  std::array<int, 7> hist{};
  for (int t = 0; t < 7000; ++t) {
    auto x = rng.uniform_below(7);
    ASSERT_LT(x, 7u);
    ++hist[x];
  }
  for (int h : hist) EXPECT_GT(h, 800);
}
