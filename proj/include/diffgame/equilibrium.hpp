#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffgame/blocks.hpp"
#include "diffgame/diffusion.hpp"
#include "diffgame/distances.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/parallel.hpp"

namespace diffgame {

/**
 * Player-0 utilities of the 2-player single-seed game: at(a, b) is the
 * utility of the player seeding a against an opponent seeding b. The
 * opponent's utility at (a, b) is at(b, a); the diagonal is zero.
 */
class UtilityMatrix {
 public:
  UtilityMatrix() = default;
  explicit UtilityMatrix(std::size_t n) : n_(n), values_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t at(NodeId a, NodeId b) const noexcept { return values_[a * n_ + b]; }
  std::uint32_t& at(NodeId a, NodeId b) noexcept { return values_[a * n_ + b]; }

  /// max over a' of at(a', b): the best a player can do against an opponent at b.
  std::uint32_t best_against(NodeId b) const {
    std::uint32_t best = 0;
    for (NodeId a = 0; a < n_; ++a) best = std::max(best, at(a, b));
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> values_;
};

/// All ordered single-seed pairs, one diffusion per unordered pair.
inline UtilityMatrix utility_matrix(const Graph& g, std::size_t threads = 1) {
  const std::size_t n = g.node_count();
  UtilityMatrix ua(n);
  std::vector<std::optional<DiffusionEngine>> engines(resolve_threads(threads));
  parallel_for(n, threads, [&](std::size_t a, std::size_t worker) {
    auto& engine = engines[worker];
    if (!engine) engine.emplace(g);
    for (NodeId b = static_cast<NodeId>(a) + 1; b < n; ++b) {
      const NodeId seeds[] = {static_cast<NodeId>(a), b};
      const auto u = engine->run_singles(seeds);
      ua.at(static_cast<NodeId>(a), b) = static_cast<std::uint32_t>(u[0]);
      ua.at(b, static_cast<NodeId>(a)) = static_cast<std::uint32_t>(u[1]);
    }
  });
  return ua;
}

struct OrderedProfile {
  NodeId a;
  NodeId b;
  std::uint32_t utility_a;
  std::uint32_t utility_b;

  friend bool operator==(const OrderedProfile&, const OrderedProfile&) = default;
};

struct EquilibriumOptions {
  bool use_block_filter = true;
  bool use_degree_filter = true;
  std::size_t threads = 1;
};

struct EquilibriumReport {
  std::vector<OrderedProfile> equilibria;  // sorted by (a, b)
  std::size_t candidates_examined = 0;
  std::size_t pruned_by_block = 0;
  std::size_t pruned_by_degree_bound = 0;
  // Filters are necessary conditions only on connected graphs; elsewhere they are skipped.
  bool filters_applied = false;
};

inline std::uint32_t ceil_div(std::size_t num, std::size_t den) {
  return static_cast<std::uint32_t>((num + den - 1) / den);
}

/**
 * Every ordered pair (a, b), a != b, where neither player can strictly gain by
 * moving its seed. The block filter skips pairs with no common block; the
 * degree filter skips pairs violating ceil((n-1)/deg(a)) <= U_B or
 * ceil((n-1)/deg(b)) <= U_A. Both hold for every equilibrium of a connected
 * graph, so they only prune non-equilibria.
 */
inline EquilibriumReport enumerate_equilibria_2p(const Graph& g, const UtilityMatrix& ua,
                                                 const EquilibriumOptions& options = {}) {
  const std::size_t n = g.node_count();
  if (ua.size() != n) throw Error("utility matrix does not match the graph");
  EquilibriumReport report;
  report.filters_applied = (options.use_block_filter || options.use_degree_filter) && is_connected(g);
  const bool block_filter = report.filters_applied && options.use_block_filter;
  const bool degree_filter = report.filters_applied && options.use_degree_filter;

  std::optional<BlockDecomposition> decomposition;
  if (block_filter) decomposition = blocks(g);

  std::vector<std::uint32_t> best(n);
  for (NodeId b = 0; b < n; ++b) best[b] = ua.best_against(b);

  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a == b) continue;
      if (block_filter && !decomposition->share_block(a, b)) {
        ++report.pruned_by_block;
        continue;
      }
      if (degree_filter && (ceil_div(n - 1, g.degree(a)) > ua.at(b, a) || ceil_div(n - 1, g.degree(b)) > ua.at(a, b))) {
        ++report.pruned_by_degree_bound;
        continue;
      }
      ++report.candidates_examined;
      if (ua.at(a, b) == best[b] && ua.at(b, a) == best[a]) report.equilibria.push_back({a, b, ua.at(a, b), ua.at(b, a)});
    }
  }
  return report;
}

inline EquilibriumReport enumerate_equilibria_2p(const Graph& g, const EquilibriumOptions& options = {}) {
  return enumerate_equilibria_2p(g, utility_matrix(g, options.threads), options);
}

struct Deviation {
  PlayerId player;
  NodeId node;
  std::size_t gain;  // strictly positive
};

struct EquilibriumCheck {
  bool equilibrium = true;
  std::optional<Deviation> deviation;
};

namespace detail {

inline std::vector<NodeId> single_seeds(const SeedProfile& profile) {
  std::vector<NodeId> nodes;
  for (std::size_t p = 0; p < profile.player_count(); ++p) {
    if (profile.seeds[p].size() != 1)
      throw Error("player " + std::to_string(p) + " must hold exactly one seed in the single-seed game");
    nodes.push_back(profile.seeds[p][0]);
  }
  return nodes;
}

}  // namespace detail

/**
 * Single-seed k-player certification on restricted strategy spaces. Returns
 * false with the first strictly improving unilateral move found (players in
 * order, candidate nodes in the order given).
 */
inline EquilibriumCheck is_equilibrium(const Graph& g, const SeedProfile& profile,
                                       std::span<const std::vector<NodeId>> strategy_spaces) {
  profile.validate(g);
  if (profile.player_count() < 2) throw Error("equilibrium certification needs at least 2 players");
  if (strategy_spaces.size() != profile.player_count())
    throw Error("need one strategy space per player");
  std::vector<NodeId> seeds = detail::single_seeds(profile);
  for (std::size_t p = 0; p < seeds.size(); ++p) {
    const auto& space = strategy_spaces[p];
    for (NodeId v : space) require_node(g, v, "strategy node");
    if (std::find(space.begin(), space.end(), seeds[p]) == space.end())
      throw Error("seed of player " + std::to_string(p) + " lies outside its strategy space");
  }

  DiffusionEngine engine(g);
  const auto base = engine.run_singles(seeds);
  const std::vector<std::size_t> current(base.begin(), base.end());
  for (PlayerId p = 0; p < seeds.size(); ++p) {
    const NodeId original = seeds[p];
    for (NodeId v : strategy_spaces[p]) {
      if (v == original) continue;
      seeds[p] = v;
      const std::size_t value = engine.run_singles(seeds)[p];
      if (value > current[p]) return {false, Deviation{p, v, value - current[p]}};
    }
    seeds[p] = original;
  }
  return {};
}

/// Convenience: every player may use every node.
inline EquilibriumCheck is_equilibrium(const Graph& g, const SeedProfile& profile) {
  std::vector<NodeId> all(g.node_count());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  const std::vector<std::vector<NodeId>> spaces(profile.player_count(), all);
  return is_equilibrium(g, profile, spaces);
}

struct BestResponse {
  std::vector<NodeId> nodes;  // all maximizers, ascending
  std::size_t value = 0;
};

/**
 * Maximizers of @p player's utility over @p strategy_space while the other
 * players keep their single seeds. @p others lists those seeds in player
 * order with @p player removed.
 */
inline BestResponse best_response(const Graph& g, std::span<const NodeId> others, PlayerId player,
                                  std::span<const NodeId> strategy_space) {
  if (strategy_space.empty()) throw Error("best response over an empty strategy space");
  if (player > others.size()) throw Error("player id out of range");
  for (NodeId v : others) require_node(g, v, "seed");
  for (NodeId v : strategy_space) require_node(g, v, "strategy node");

  std::vector<NodeId> seeds(others.begin(), others.end());
  seeds.insert(seeds.begin() + player, 0);
  std::vector<NodeId> space(strategy_space.begin(), strategy_space.end());
  std::sort(space.begin(), space.end());
  space.erase(std::unique(space.begin(), space.end()), space.end());

  DiffusionEngine engine(g);
  BestResponse out;
  for (NodeId v : space) {
    seeds[player] = v;
    const std::size_t value = engine.run_singles(seeds)[player];
    if (out.nodes.empty() || value > out.value) {
      out.value = value;
      out.nodes = {v};
    } else if (value == out.value) {
      out.nodes.push_back(v);
    }
  }
  return out;
}

struct NecessaryConditionCheck {
  OrderedProfile profile;
  std::uint32_t degree_bound_a;  // ceil((n-1)/deg(a)), compared with U_B
  std::uint32_t degree_bound_b;  // ceil((n-1)/deg(b)), compared with U_A
  bool degree_a_ok;
  bool degree_b_ok;
  bool common_block;

  bool passed() const { return degree_a_ok && degree_b_ok && common_block; }
};

struct NecessaryConditionsReport {
  std::vector<NecessaryConditionCheck> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }
};

/// Re-checks both degree bounds and common-block membership for every listed equilibrium.
inline NecessaryConditionsReport necessary_conditions_report(const Graph& g, const EquilibriumReport& report) {
  NecessaryConditionsReport out;
  if (report.equilibria.empty()) return out;
  const std::size_t n = g.node_count();
  const BlockDecomposition decomposition = blocks(g);
  for (const OrderedProfile& eq : report.equilibria) {
    NecessaryConditionCheck c{eq, 0, 0, false, false, decomposition.share_block(eq.a, eq.b)};
    const std::size_t da = g.degree(eq.a);
    const std::size_t db = g.degree(eq.b);
    c.degree_bound_a = da == 0 ? std::uint32_t(-1) : ceil_div(n - 1, da);
    c.degree_bound_b = db == 0 ? std::uint32_t(-1) : ceil_div(n - 1, db);
    c.degree_a_ok = c.degree_bound_a <= eq.utility_b;
    c.degree_b_ok = c.degree_bound_b <= eq.utility_a;
    out.checks.push_back(c);
  }
  return out;
}

}  // namespace diffgame
