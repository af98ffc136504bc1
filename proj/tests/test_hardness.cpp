#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "diffgame/characterizations.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/generators.hpp"
#include "diffgame/hardness.hpp"
#include "oracles.hpp"

using namespace diffgame;

namespace {

bool valid_partition(const ThreePartitionInstance& inst, const std::vector<Triple>& parts) {
  std::vector<int> used(inst.alphas.size(), 0);
  for (const Triple& t : parts) {
    std::uint64_t sum = 0;
    for (std::size_t i : t) {
      ++used[i];
      sum += inst.alphas[i];
    }
    if (sum != inst.beta) return false;
  }
  return parts.size() == inst.m && std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

const ThreePartitionInstance kAllThrees{2, 9, {3, 3, 3, 3, 3, 3}};

}  // namespace

TEST(ThreePartition, Validation) {
  EXPECT_NO_THROW(kAllThrees.validate());
  EXPECT_THROW((ThreePartitionInstance{2, 10, {3, 3, 3, 3, 3, 5}}.validate()), Error);  // 5 >= beta/2
  EXPECT_THROW((ThreePartitionInstance{1, 9, {3, 3, 4}}.validate()), Error);            // sum
  EXPECT_THROW((ThreePartitionInstance{1, 3, {1, 1, 1}}.validate()), Error);            // beta <= 3
  EXPECT_THROW((ThreePartitionInstance{2, 9, {3, 3, 3}}.validate()), Error);            // count
}

TEST(ThreePartition, Solver) {
  const auto p = solve_3partition(kAllThrees);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(valid_partition(kAllThrees, *p));
  const ThreePartitionInstance single{1, 9, {3, 3, 3}};
  EXPECT_EQ(solve_3partition(single), (std::vector<Triple>{{0, 1, 2}}));
  const ThreePartitionInstance pairs{2, 10, {3, 3, 3, 3, 4, 4}};
  ASSERT_TRUE(solve_3partition(pairs).has_value());
  EXPECT_TRUE(valid_partition(pairs, *solve_3partition(pairs)));
  EXPECT_FALSE(solve_3partition(ThreePartitionInstance{2, 13, {4, 4, 4, 4, 4, 6}}).has_value());
  EXPECT_FALSE(solve_3partition(ThreePartitionInstance{2, 15, {4, 4, 4, 6, 6, 6}}).has_value());
  const ThreePartitionInstance big{6, 9, std::vector<std::uint64_t>(18, 3)};
  EXPECT_THROW(solve_3partition(big), Error);
}

TEST(ThreePartition, SolverAgreesWithSubsetEnumeration) {
  // Oracle: try every assignment of items to groups directly.
  std::mt19937_64 rng(3);
  std::size_t checked = 0;
  while (checked < 40) {
    const std::uint64_t beta = 9 + rng() % 12;
    std::vector<std::uint64_t> alphas;
    for (int i = 0; i < 6; ++i) alphas.push_back(beta / 4 + 1 + rng() % std::max<std::uint64_t>(1, (beta - 1) / 2 - beta / 4));
    ThreePartitionInstance inst{2, beta, alphas};
    try {
      inst.validate();
    } catch (const Error&) {
      continue;
    }
    ++checked;
    bool exists = false;
    for (int mask = 0; mask < 64; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
      std::uint64_t sum = 0;
      for (int i = 0; i < 6; ++i)
        if (mask >> i & 1) sum += alphas[i];
      exists = exists || sum == beta;
    }
    EXPECT_EQ(solve_3partition(inst).has_value(), exists);
  }
}

TEST(ThreePartition, TextFormat) {
  const auto inst = parse_three_partition("# comment\n2 9\n3 3 3 3 3 3\n");
  EXPECT_EQ(inst.m, 2u);
  EXPECT_EQ(inst.beta, 9u);
  EXPECT_EQ(inst.alphas.size(), 6u);
  EXPECT_EQ(parse_three_partition(to_text(inst)).alphas, inst.alphas);
  EXPECT_THROW(parse_three_partition("2 9\n3 3 3\n"), ParseError);
  EXPECT_THROW(parse_three_partition("2 9 1\n3 3 3 3 3 3\n"), ParseError);
  EXPECT_THROW(parse_three_partition("2 10\n3 3 3 3 3 5\n"), Error);
}

TEST(Core, CandidateShapes) {
  for (const CoreSpec& spec : core_candidates()) {
    const Graph core = build_core(spec, 5);
    EXPECT_EQ(core.node_count(), 45u) << spec.name;
    EXPECT_EQ(core.edge_count(), 9 * 4 + spec.center_edges.size()) << spec.name;
    EXPECT_TRUE(is_connected(core)) << spec.name;
  }
}

TEST(Core, VerificationReports) {
  const auto cycle = verify_core(build_core(core_cycle9(), 5), 5);
  EXPECT_TRUE(cycle.sole_player_ok);
  EXPECT_FALSE(cycle.no_equilibrium_ok);
  ASSERT_TRUE(cycle.equilibrium_witness.has_value());

  const auto shipped = verify_core(build_core(core_hexagon_bridged_triangle(), 5), 5);
  EXPECT_TRUE(shipped.passed());
  EXPECT_TRUE(shipped.usable_in_gadget());
  EXPECT_EQ(shipped.entrant_guarantee, 20u);

  const auto disconnected = verify_core(build_core(CoreSpec{"none", {}}, 5), 5);
  EXPECT_FALSE(disconnected.sole_player_ok);
  ASSERT_TRUE(disconnected.sole_player_witness.has_value());
}

TEST(Gadget, SizesAndWiring) {
  const GadgetGraph gadget = build_reduction_graph(kAllThrees);
  EXPECT_EQ(gadget.params.c, 20u);
  EXPECT_EQ(gadget.params.d, 41u);
  EXPECT_EQ(gadget.graph.node_count(), 749u);
  EXPECT_EQ(gadget.left_size, 360u);
  EXPECT_EQ(gadget.right_begin - gadget.middle_begin, 20u);
  EXPECT_EQ(gadget.graph.node_count() - gadget.right_begin, 369u);
  EXPECT_EQ(gadget.T.size(), 389u);
  EXPECT_EQ(gadget.core_name, "hexagon_bridged_triangle");
  EXPECT_EQ(gadget.params.n_ext, 2 * 749u + 1);
  EXPECT_EQ(gadget.triples.size(), 20u);

  // Left nodes see exactly the C(5,2) middle nodes whose triple contains their index.
  for (NodeId v = 0; v < gadget.left_size; ++v) {
    ASSERT_EQ(gadget.regions[v].kind, Region::Kind::Left);
    const auto i = gadget.regions[v].index[0];
    ASSERT_EQ(gadget.graph.degree(v), 10u);
    for (NodeId w : gadget.graph.neighbors(v)) {
      ASSERT_EQ(gadget.regions[w].kind, Region::Kind::Middle);
      const auto& t = gadget.regions[w].index;
      EXPECT_TRUE(t[0] == i || t[1] == i || t[2] == i);
    }
  }
  for (NodeId a = gadget.middle_begin; a < gadget.right_begin; ++a)
    for (NodeId b = a + 1; b < gadget.right_begin; ++b) EXPECT_TRUE(gadget.graph.has_edge(a, b));
  const std::size_t d = gadget.params.d, c = gadget.params.c;
  EXPECT_TRUE(4 * d > 8 * c && 4 * d < 9 * c);
  EXPECT_GT(2 * 9 * d, 3 * 9 * c);

  const std::size_t edges = 360 * 10 + 20 * 19 / 2 + (9 * 40 + 11);
  EXPECT_EQ(gadget.graph.edge_count(), edges);
}

TEST(Gadget, EmptyStarInterval) {
  EXPECT_FALSE(star_size(9, 1).has_value());
  EXPECT_THROW(build_reduction_graph(ThreePartitionInstance{1, 9, {3, 3, 3}}), Error);
  EXPECT_EQ(star_size(9, 20), 41u);
}

TEST(Gadget, RegionSidecar) {
  const GadgetGraph gadget = build_reduction_graph(kAllThrees);
  const std::string text = regions_to_text(gadget.regions);
  EXPECT_NE(text.find("\n0 left 0\n"), std::string::npos);
  EXPECT_NE(text.find("\n360 middle 0 1 2\n"), std::string::npos);
  EXPECT_NE(text.find("\n380 right_core 0 0\n"), std::string::npos);
}

TEST(Extension, SizeFormulas) {
  const NodeId t02[] = {0, 2};
  const auto p3 = extend_graph(make_path(3), t02);
  EXPECT_EQ(p3.graph.node_count(), 3u + 14u);
  EXPECT_EQ(p3.graph.edge_count(), 2u + 21u);
  EXPECT_EQ(p3.column_size, 7u);

  const NodeId t0[] = {0};
  const auto edge = extend_graph(make_path(2), t0);
  EXPECT_EQ(edge.graph.node_count(), 2u + 5u);
  EXPECT_EQ(edge.graph.edge_count(), 1u + 5u);

  const Graph c4 = make_cycle(4);
  const NodeId all[] = {0, 1, 2, 3};
  const auto full = extend_graph(c4, all);
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(full.graph.degree(v), 2u + 9u);
  // Row j of column i is |V| + i * 9 + j; rows form cliques across columns.
  EXPECT_TRUE(full.graph.has_edge(4 + 0 * 9 + 3, 4 + 2 * 9 + 3));
  EXPECT_FALSE(full.graph.has_edge(4 + 0 * 9 + 3, 4 + 2 * 9 + 4));
  EXPECT_THROW(extend_graph(c4, std::vector<NodeId>{}), Error);
  EXPECT_THROW(extend_graph(c4, std::vector<NodeId>{1, 1}), Error);
}

TEST(Extension, RestrictedEquilibriaCorrespondOnPath) {
  const Graph g = make_path(5);
  const std::vector<NodeId> T{0, 4};
  const auto ext = extend_graph(g, T);
  std::vector<OrderedPair> unrestricted;
  for (const auto& p : enumerate_equilibria_2p(ext.graph).equilibria) unrestricted.emplace_back(p.a, p.b);
  std::vector<OrderedPair> restricted;
  for (const auto& p : restricted_equilibria_2p(g, T, utility_matrix(g))) restricted.emplace_back(p.a, p.b);
  EXPECT_EQ(unrestricted, restricted);
  EXPECT_EQ(restricted, (std::vector<OrderedPair>{{0, 4}, {4, 0}}));
}

TEST(Extension, SingletonTHasNoRestrictedProfiles) {
  // With one T node the restricted game has no distinct seed pair, while the extension still has equilibria.
  const Graph g = make_path(2);
  const std::vector<NodeId> T{0};
  EXPECT_TRUE(restricted_equilibria_2p(g, T, utility_matrix(g)).empty());
  EXPECT_FALSE(enumerate_equilibria_2p(extend_graph(g, T).graph).equilibria.empty());
}

TEST(TwinSweep, ClassesAreFalseTwins) {
  const Graph star = make_star(4);
  const std::vector<NodeId> all{0, 1, 2, 3, 4};
  EXPECT_EQ(twin_classes(star, all), (std::vector<std::vector<NodeId>>{{0}, {1, 2, 3, 4}}));
}

TEST(TwinSweep, AgreesWithNaiveSweep) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    // Stars and random graphs with pendant leaves create plenty of twins.
    const std::size_t n = 4 + rng() % 6;
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) {
      const NodeId parent = static_cast<NodeId>(rng() % std::min<std::size_t>(v, 3));
      edges.push_back({parent, v});
    }
    for (int extra = 0; extra < 2; ++extra) {
      const NodeId a = static_cast<NodeId>(rng() % n), b = static_cast<NodeId>(rng() % n);
      if (a != b && std::find(edges.begin(), edges.end(), Edge{std::min(a, b), std::max(a, b)}) == edges.end() &&
          std::find(edges.begin(), edges.end(), Edge{std::max(a, b), std::min(a, b)}) == edges.end())
        edges.push_back({a, b});
    }
    const Graph g = Graph::from_edges(n, edges);
    std::vector<NodeId> T;
    for (NodeId v = 0; v < n; ++v)
      if (rng() % 3 != 0) T.push_back(v);
    if (T.size() < 2) continue;
    const std::size_t players = 2 + rng() % 2;
    const auto naive = oracle::restricted_equilibria(g, T, players);
    const auto fast = find_restricted_equilibrium(g, T, players, 1 + iter % 3);
    ASSERT_EQ(fast.equilibrium.has_value(), !naive.empty()) << "iter " << iter;
    if (fast.equilibrium) {
      EXPECT_NE(std::find(naive.begin(), naive.end(), *fast.equilibrium), naive.end());
    }
  }
}

TEST(Reduction, SolvableInstanceIsCertified) {
  const GadgetGraph gadget = build_reduction_graph(kAllThrees);
  const ReductionReport r = verify_reduction(kAllThrees, gadget);
  ASSERT_TRUE(r.partition.has_value());
  EXPECT_TRUE(r.partition_profile_certified);
  EXPECT_FALSE(r.partition_profile_deviation.has_value());
  EXPECT_TRUE(r.sweep_found_equilibrium);
  EXPECT_TRUE(r.consistent());
  // Each middle player owns its seed and the beta*c = 180 left nodes of its triple.
  EXPECT_EQ(r.partition_utilities, (std::vector<std::size_t>{181, 181, 369}));
  EXPECT_THROW(verify_reduction(ThreePartitionInstance{2, 13, {4, 4, 4, 4, 4, 6}}, gadget), Error);
}
