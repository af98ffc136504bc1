#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "diffgame/characterizations.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/generators.hpp"
#include "oracles.hpp"

using namespace diffgame;

namespace {

std::vector<std::pair<NodeId, NodeId>> pairs_of(const EquilibriumReport& r) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& p : r.equilibria) out.emplace_back(p.a, p.b);
  return out;
}

EquilibriumReport run(const Graph& g, bool block, bool degree) {
  EquilibriumOptions o;
  o.use_block_filter = block;
  o.use_degree_filter = degree;
  return enumerate_equilibria_2p(g, o);
}

}  // namespace

TEST(UtilityMatrix, SmallGraphs) {
  const UtilityMatrix k3 = utility_matrix(make_complete(3));
  for (NodeId a = 0; a < 3; ++a)
    for (NodeId b = 0; b < 3; ++b) EXPECT_EQ(k3.at(a, b), a == b ? 0u : 1u);
  EXPECT_EQ(utility_matrix(make_path(3)).at(0, 2), 1u);
  const UtilityMatrix q3 = utility_matrix(make_hypercube(3));
  for (NodeId a = 0; a < 8; ++a)
    for (NodeId b = 0; b < 8; ++b)
      if (std::popcount(a ^ b) % 2 == 1) {
        EXPECT_EQ(q3.at(a, b), 4u);
      }
}

TEST(UtilityMatrix, RoleSymmetryAgainstDirectRuns) {
  const Graph g = make_erdos_renyi(25, 0.15, 11);
  const UtilityMatrix ua = utility_matrix(g, 3);
  for (NodeId a = 0; a < 25; a += 2)
    for (NodeId b = 1; b < 25; b += 3) {
      if (a == b) continue;
      const auto u = oracle::utilities(g, {a, b});
      EXPECT_EQ(ua.at(a, b), u[0]);
      EXPECT_EQ(ua.at(b, a), u[1]);
    }
}

TEST(UtilityMatrix, ThreadCountDoesNotMatter) {
  const Graph g = make_erdos_renyi(60, 0.07, 3);
  const UtilityMatrix one = utility_matrix(g, 1);
  const UtilityMatrix four = utility_matrix(g, 4);
  for (NodeId a = 0; a < 60; ++a)
    for (NodeId b = 0; b < 60; ++b) ASSERT_EQ(one.at(a, b), four.at(a, b));
}

TEST(Equilibria, CycleFour) {
  const auto r = enumerate_equilibria_2p(make_cycle(4));
  ASSERT_EQ(r.equilibria.size(), 8u);
  for (const auto& p : r.equilibria) {
    EXPECT_TRUE(make_cycle(4).has_edge(p.a, p.b));
    EXPECT_EQ(p.utility_a, 2u);
    EXPECT_EQ(p.utility_b, 2u);
  }
}

TEST(Equilibria, Star) {
  const auto r = enumerate_equilibria_2p(make_star(4));
  std::vector<std::pair<NodeId, NodeId>> expected;
  for (NodeId leaf = 1; leaf <= 4; ++leaf) expected.emplace_back(0, leaf);
  for (NodeId leaf = 1; leaf <= 4; ++leaf) expected.emplace_back(leaf, 0);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(pairs_of(r), expected);
}

TEST(Equilibria, GridCenter) {
  const Graph g = make_lattice(2, 2);
  const auto r = enumerate_equilibria_2p(g);
  ASSERT_FALSE(r.equilibria.empty());
  for (const auto& p : r.equilibria) {
    EXPECT_TRUE(p.a == 4 || p.b == 4);
    EXPECT_TRUE(g.has_edge(p.a, p.b));
  }
  EXPECT_EQ(pairs_of(r), pairs_of(run(g, false, false)));
}

TEST(Equilibria, MatchReferenceAndFiltersAreSound) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = make_erdos_renyi(n, 0.2 + 0.6 * unit_draw(rng), rng());
    const auto reference = oracle::equilibria_2p(g);
    const auto plain = run(g, false, false);
    EXPECT_EQ(pairs_of(plain), reference);
    EXPECT_EQ(pairs_of(run(g, true, false)), reference);
    EXPECT_EQ(pairs_of(run(g, false, true)), reference);
    const auto both = run(g, true, true);
    EXPECT_EQ(pairs_of(both), reference);
    EXPECT_EQ(both.filters_applied, is_connected(g));
    if (is_connected(g)) {
      EXPECT_TRUE(necessary_conditions_report(g, both).all_passed());
    }
  }
}

TEST(Equilibria, FiltersAreSkippedOnDisconnectedGraphs) {
  // Two isolated nodes: (0,1) is an equilibrium but degree 0 defeats the degree bound.
  const auto isolated = enumerate_equilibria_2p(Graph(2));
  EXPECT_FALSE(isolated.filters_applied);
  EXPECT_EQ(isolated.equilibria.size(), 2u);
  // Two disjoint triangles: the seeds share no block yet some pairs are equilibria.
  const Graph triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(pairs_of(enumerate_equilibria_2p(triangles)), oracle::equilibria_2p(triangles));
}

TEST(IsEquilibrium, Examples) {
  const Graph c4 = make_cycle(4);
  EXPECT_TRUE(is_equilibrium(c4, SeedProfile::singles({0, 1})).equilibrium);
  const auto bad = is_equilibrium(c4, SeedProfile::singles({0, 2}));
  ASSERT_FALSE(bad.equilibrium);
  ASSERT_TRUE(bad.deviation.has_value());
  EXPECT_TRUE(c4.has_edge(bad.deviation->node, bad.deviation->player == 0 ? 2 : 0));
  EXPECT_EQ(bad.deviation->gain, 1u);

  const Graph g = make_erdos_renyi(12, 0.3, 8);
  const std::vector<std::vector<NodeId>> singleton{{3}, {7}};
  EXPECT_TRUE(is_equilibrium(g, SeedProfile::singles({3, 7}), singleton).equilibrium);
  EXPECT_THROW(is_equilibrium(g, SeedProfile::singles({3, 7}), std::vector<std::vector<NodeId>>{{3}, {6}}), Error);
  EXPECT_THROW(is_equilibrium(g, SeedProfile({{3, 4}, {7}})), Error);
}

TEST(IsEquilibrium, AgreesWithEnumerationExhaustively) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = make_erdos_renyi(n, 0.35, rng());
    const auto listed = pairs_of(enumerate_equilibria_2p(g));
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = 0; b < n; ++b) {
        if (a == b) continue;
        const bool in_list = std::binary_search(listed.begin(), listed.end(), std::pair{a, b});
        EXPECT_EQ(is_equilibrium(g, SeedProfile::singles({a, b})).equilibrium, in_list);
      }
  }
}

TEST(BestResponse, Examples) {
  const std::vector<NodeId> all5{0, 1, 2, 3, 4};
  const NodeId center[] = {0};
  const auto star = best_response(make_star(4), center, 1, all5);
  EXPECT_EQ(star.nodes, (std::vector<NodeId>{1, 2, 3, 4}));
  EXPECT_EQ(star.value, 1u);

  const NodeId middle[] = {1};
  const auto p3 = best_response(make_path(3), middle, 1, std::vector<NodeId>{0, 1, 2});
  EXPECT_EQ(p3.nodes, (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(p3.value, 1u);

  const NodeId zero[] = {0};
  const auto k4 = best_response(make_complete(4), zero, 1, std::vector<NodeId>{0, 1, 2, 3});
  EXPECT_EQ(k4.nodes, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(k4.value, 1u);
}

TEST(NecessaryConditions, Examples) {
  const Graph star = make_star(4);
  const auto r = necessary_conditions_report(star, enumerate_equilibria_2p(star));
  ASSERT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed());
    if (c.profile.a == 0) {
      EXPECT_EQ(c.degree_bound_a, 1u);
      EXPECT_EQ(c.degree_bound_b, 4u);
    }
  }
  const auto c4 = necessary_conditions_report(make_cycle(4), enumerate_equilibria_2p(make_cycle(4)));
  for (const auto& c : c4.checks) {
    EXPECT_EQ(c.degree_bound_a, 2u);
    EXPECT_TRUE(c.passed());
  }
  EXPECT_TRUE(necessary_conditions_report(make_cycle(5), EquilibriumReport{}).all_passed());
}

TEST(Characterizations, HypercubePredicate) {
  EXPECT_TRUE(hypercube_predicted(3, 0b000, 0b111));
  EXPECT_FALSE(hypercube_predicted(3, 0b000, 0b011));
  EXPECT_TRUE(hypercube_predicted(1, 0, 1));
  EXPECT_THROW(hypercube_predicted(3, 0, 8), Error);
}

TEST(Characterizations, LatticePredicate) {
  EXPECT_EQ(lattice_predicted(1, 1).size(), 8u);
  // L(2x1): ids x*2+y, central edge (1,0)-(1,1) = 2-3.
  EXPECT_EQ(lattice_predicted(2, 1), (std::vector<OrderedPair>{{2, 3}, {3, 2}}));
  EXPECT_TRUE(lattice_predicted(2, 2).empty());
}

TEST(Characterizations, SmallFamilies) {
  for (unsigned k = 1; k <= 5; ++k) EXPECT_TRUE(verify_characterization(HypercubeFamily{k}).passed()) << k;
  EXPECT_TRUE(verify_characterization(LatticeFamily{1, 1}).passed());
  const auto l32 = verify_characterization(LatticeFamily{3, 2});
  EXPECT_TRUE(l32.asserted);
  EXPECT_TRUE(l32.passed());
  EXPECT_FALSE(verify_characterization(LatticeFamily{2, 2}).asserted);
  EXPECT_THROW(verify_characterization(HypercubeFamily{9}), Error);
  EXPECT_THROW(verify_characterization(LatticeFamily{20, 20}), Error);
}
