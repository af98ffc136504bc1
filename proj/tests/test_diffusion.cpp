#include <gtest/gtest.h>

#include <random>

#include "diffgame/diffusion.hpp"
#include "diffgame/distances.hpp"
#include "diffgame/generators.hpp"
#include "oracles.hpp"

using namespace diffgame;

namespace {

int code(NodeState s) { return s.is_white() ? oracle::kWhite : s.is_gray() ? oracle::kGray : static_cast<int>(s.player()); }

SeedProfile random_profile(std::mt19937_64& rng, std::size_t n, std::size_t players, std::size_t max_seeds) {
  SeedProfile profile;
  for (std::size_t p = 0; p < players; ++p) {
    std::vector<NodeId> s;
    const std::size_t count = 1 + rng() % max_seeds;
    for (std::size_t i = 0; i < count; ++i) s.push_back(static_cast<NodeId>(rng() % n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    profile.seeds.push_back(s);
  }
  return profile;
}

}  // namespace

TEST(Diffusion, HypercubeAntipodal) {
  const auto o = diffuse(make_hypercube(3), SeedProfile::singles({0b000, 0b111}));
  EXPECT_EQ(o.utilities, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(o.gray_count(), 0u);
  EXPECT_EQ(o.white_count(), 0u);
}

TEST(Diffusion, SameNodeIsGrayAndNothingSpreads) {
  const auto o = diffuse(make_cycle(6), SeedProfile::singles({2, 2}));
  EXPECT_EQ(o.utilities, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(o.gray_count(), 1u);
  EXPECT_EQ(o.white_count(), 5u);
  EXPECT_TRUE(o.final[2].is_gray());
}

TEST(Diffusion, PathExample) {
  const auto o = diffuse(make_path(5), SeedProfile::singles({0, 2}));
  EXPECT_EQ(o.utilities, (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(o.final[1].is_gray());
  EXPECT_EQ(o.final[3], NodeState::adopted(1));
  EXPECT_EQ(o.final[4], NodeState::adopted(1));
}

TEST(Diffusion, SmallUtilities) {
  EXPECT_EQ(utilities(make_star(4), SeedProfile::singles({0, 1})), (std::vector<std::size_t>{4, 1}));
  EXPECT_EQ(utilities(make_complete(3), SeedProfile::singles({0, 1})), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(utilities(make_path(3), SeedProfile::singles({0, 2})), (std::vector<std::size_t>{1, 1}));
}

TEST(Diffusion, GrayBlocksAndIsolatedStayWhite) {
  // 0 - 1 - 2 - 3 with 1 seeded by both: nothing reaches 2 or 3 from player 0.
  const auto o = diffuse(make_path(4), SeedProfile({{0, 1}, {1}}));
  EXPECT_TRUE(o.final[1].is_gray());
  EXPECT_EQ(o.utilities, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(o.white_count(), 2u);
  const auto split = diffuse(Graph::from_edges(4, {{0, 1}}), SeedProfile::singles({0}));
  EXPECT_EQ(split.utilities, (std::vector<std::size_t>{2}));
  EXPECT_EQ(split.white_count(), 2u);
}

TEST(Diffusion, RejectsInvalidProfiles) {
  const Graph g = make_path(3);
  EXPECT_THROW(diffuse(g, SeedProfile()), Error);
  EXPECT_THROW(diffuse(g, SeedProfile({{0}, {}})), Error);
  EXPECT_THROW(diffuse(g, SeedProfile::singles({0, 7})), Error);
}

TEST(Diffusion, MatchesShuffledReferenceSimulator) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 40;
    const Graph g = make_erdos_renyi(n, 0.05 + 0.3 * unit_draw(rng), rng());
    const SeedProfile profile = random_profile(rng, n, 1 + rng() % 4, 3);
    DiffusionEngine engine(g);
    engine.run(profile);
    for (std::uint64_t order = 0; order < 3; ++order) {
      const auto ref = oracle::simulate(g, profile.seeds, order + iter * 7);
      ASSERT_EQ(std::vector<std::size_t>(engine.utilities().begin(), engine.utilities().end()), ref.utilities);
      ASSERT_EQ(engine.steps(), ref.steps);
      for (NodeId v = 0; v < n; ++v) ASSERT_EQ(code(engine.states()[v]), ref.state[v]) << "node " << v;
    }
  }
}

TEST(Diffusion, EngineReuseMatchesFreshRuns) {
  const Graph g = make_lattice(6, 5);
  DiffusionEngine engine(g);
  for (NodeId a = 0; a < g.node_count(); a += 3)
    for (NodeId b = 1; b < g.node_count(); b += 5) {
      const NodeId seeds[] = {a, b};
      const auto u = engine.run_singles(seeds);
      EXPECT_EQ(std::vector<std::size_t>(u.begin(), u.end()), utilities(g, SeedProfile::singles(seeds)));
    }
}

TEST(Diffusion, ConservationMonotonicityAndTermination) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + rng() % 60;
    const Graph g = make_erdos_renyi(n, 0.08, rng());
    const SeedProfile profile = random_profile(rng, n, 1 + rng() % 3, 4);
    const auto o = diffuse(g, profile, true);
    std::size_t owned = 0;
    for (auto u : o.utilities) owned += u;
    EXPECT_EQ(owned + o.gray_count() + o.white_count(), n);
    ASSERT_EQ(o.trace.size(), o.steps + 1);
    EXPECT_EQ(o.trace.back(), o.final);
    for (std::size_t t = 1; t < o.trace.size(); ++t)
      for (NodeId v = 0; v < n; ++v)
        if (!o.trace[t - 1][v].is_white()) {
          EXPECT_EQ(o.trace[t][v], o.trace[t - 1][v]);
        }
    // Every productive round claims a node, so rounds are bounded by the white count at the start.
    EXPECT_LE(o.steps, n);
  }
}

TEST(Diffusion, PlayerRelabelingPermutesUtilities) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 3 + rng() % 30;
    const Graph g = make_erdos_renyi(n, 0.15, rng());
    SeedProfile profile = random_profile(rng, n, 3, 2);
    const auto before = utilities(g, profile);
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    SeedProfile permuted;
    for (std::size_t i : perm) permuted.seeds.push_back(profile.seeds[i]);
    const auto after = utilities(g, permuted);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(after[i], before[perm[i]]);
  }
}

TEST(Sandwich, Examples) {
  const SeedProfile path_profile = SeedProfile::singles({0, 2});
  EXPECT_TRUE(check_distance_sandwich(make_path(5), path_profile, diffuse(make_path(5), path_profile)).empty());
  const SeedProfile k3 = SeedProfile::singles({0, 1});
  const auto o = diffuse(make_complete(3), k3);
  EXPECT_TRUE(o.final[2].is_gray());
  EXPECT_TRUE(check_distance_sandwich(make_complete(3), k3, o).empty());
  EXPECT_THROW(check_distance_sandwich(make_path(3), SeedProfile::singles({0}), diffuse(make_path(3), SeedProfile::singles({0}))),
               Error);
}

TEST(Sandwich, DetectsTamperedOutcome) {
  const Graph g = make_path(5);
  const SeedProfile profile = SeedProfile::singles({0, 4});
  auto o = diffuse(g, profile);
  o.final[1] = NodeState::adopted(1);
  const auto v = check_distance_sandwich(g, profile, o);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].node, 1u);
  EXPECT_EQ(v[0].dist_a, 1u);
  EXPECT_EQ(v[0].dist_b, 3u);
}

TEST(Sandwich, RandomisedRunsHaveNoViolations) {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 120;
    const Graph g = make_erdos_renyi(n, 0.5 * unit_draw(rng) * unit_draw(rng), rng());
    const SeedProfile profile = random_profile(rng, n, 2, 3);
    EXPECT_TRUE(check_distance_sandwich(g, profile, diffuse(g, profile)).empty());
  }
}
