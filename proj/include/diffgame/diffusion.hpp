#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diffgame/distances.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"

namespace diffgame {

using PlayerId = std::uint32_t;

/// Per-node state of the process: White (never reached), Gray, or Adopted(player).
class NodeState {
 public:
  constexpr NodeState() = default;

  static constexpr NodeState white() { return NodeState(kWhite); }
  static constexpr NodeState gray() { return NodeState(kGray); }
  static constexpr NodeState adopted(PlayerId p) { return NodeState(static_cast<std::int32_t>(p)); }

  constexpr bool is_white() const { return code_ == kWhite; }
  constexpr bool is_gray() const { return code_ == kGray; }
  constexpr bool is_adopted() const { return code_ >= 0; }
  // Only meaningful when is_adopted().
  constexpr PlayerId player() const { return static_cast<PlayerId>(code_); }

  std::string to_string() const {
    if (is_white()) return "white";
    if (is_gray()) return "gray";
    return std::to_string(player());
  }

  friend constexpr bool operator==(NodeState, NodeState) = default;

 private:
  static constexpr std::int32_t kWhite = -2;
  static constexpr std::int32_t kGray = -1;
  constexpr explicit NodeState(std::int32_t code) : code_(code) {}
  std::int32_t code_ = kWhite;
};

/// One nonempty seed set per player. Sets of different players may overlap.
struct SeedProfile {
  std::vector<std::vector<NodeId>> seeds;

  SeedProfile() = default;
  explicit SeedProfile(std::vector<std::vector<NodeId>> s) : seeds(std::move(s)) {}

  /// Single-seed profile: player i seeds nodes[i].
  static SeedProfile singles(std::span<const NodeId> nodes) {
    SeedProfile p;
    for (NodeId v : nodes) p.seeds.push_back({v});
    return p;
  }
  static SeedProfile singles(std::initializer_list<NodeId> nodes) {
    return singles(std::span<const NodeId>(nodes.begin(), nodes.size()));
  }

  std::size_t player_count() const noexcept { return seeds.size(); }

  void validate(const Graph& g) const {
    if (seeds.empty()) throw Error("seed profile needs at least one player");
    for (std::size_t p = 0; p < seeds.size(); ++p) {
      if (seeds[p].empty()) throw Error("player " + std::to_string(p) + " has an empty seed set");
      for (NodeId v : seeds[p]) require_node(g, v, "seed");
    }
  }
};

struct DiffusionOutcome {
  std::vector<NodeState> final;
  std::vector<std::size_t> utilities;
  std::size_t steps = 0;
  // trace[0] is the seeded state, trace[t] the state after round t. Empty unless requested.
  std::vector<std::vector<NodeState>> trace;

  std::size_t gray_count() const {
    return static_cast<std::size_t>(std::count(final.begin(), final.end(), NodeState::gray()));
  }
  std::size_t white_count() const {
    return static_cast<std::size_t>(std::count(final.begin(), final.end(), NodeState::white()));
  }
};

/**
 * Reusable simulator bound to one graph.
 *
 * Round 0: a node seeded by exactly one player adopts that player; a node
 * seeded by two or more players turns Gray. Each later round updates every
 * White node simultaneously from the states of the previous round: one
 * distinct adopted type among its neighbors means adoption, two or more mean
 * Gray. Gray nodes never transmit. The run stops at the first round with no
 * change.
 *
 * A still-White node can only see adopters from the latest round (earlier
 * adopters would already have changed it), so each round only scans the
 * neighbors of the previous round's adopters.
 */
class DiffusionEngine {
 public:
  explicit DiffusionEngine(const Graph& g)
      : g_(&g), state_(g.node_count()), mark_(g.node_count(), 0), seen_(g.node_count(), 0) {}

  const Graph& graph() const noexcept { return *g_; }

  /// Runs the process; returns per-player utilities (valid until the next run).
  std::span<const std::size_t> run(const SeedProfile& profile, bool keep_trace = false) {
    profile.validate(*g_);
    begin(profile.player_count(), keep_trace);
    for (PlayerId p = 0; p < profile.player_count(); ++p)
      for (NodeId v : profile.seeds[p]) claim_seed(v, p);
    return finish(keep_trace);
  }

  /// Single-seed fast path: player i seeds nodes[i]. Nodes must be in range.
  std::span<const std::size_t> run_singles(std::span<const NodeId> nodes) {
    begin(nodes.size(), false);
    for (PlayerId p = 0; p < nodes.size(); ++p) claim_seed(nodes[p], p);
    return finish(false);
  }

  std::span<const std::size_t> utilities() const noexcept { return utilities_; }
  std::span<const NodeState> states() const noexcept { return state_; }
  std::size_t steps() const noexcept { return steps_; }

  DiffusionOutcome outcome() const {
    return DiffusionOutcome{state_, utilities_, steps_, trace_};
  }

 private:
  static constexpr std::uint32_t kConflict = static_cast<std::uint32_t>(-1);

  void begin(std::size_t players, bool keep_trace) {
    std::fill(state_.begin(), state_.end(), NodeState::white());
    utilities_.assign(players, 0);
    frontier_.clear();
    touched_.clear();
    trace_.clear();
    steps_ = 0;
    bump_stamp();
    (void)keep_trace;
  }

  // Seeds are collected with the same stamp/seen scratch used by rounds.
  void claim_seed(NodeId v, PlayerId p) {
    if (mark_[v] != stamp_) {
      mark_[v] = stamp_;
      seen_[v] = p;
      touched_.push_back(v);
    } else if (seen_[v] != p) {
      seen_[v] = kConflict;
    }
  }

  std::span<const std::size_t> finish(bool keep_trace) {
    commit_touched();
    if (keep_trace) trace_.push_back(state_);
    while (!frontier_.empty()) {
      bump_stamp();
      for (NodeId u : frontier_) {
        const auto type = static_cast<std::uint32_t>(state_[u].player());
        for (NodeId w : g_->neighbors(u)) {
          if (!state_[w].is_white()) continue;
          if (mark_[w] != stamp_) {
            mark_[w] = stamp_;
            seen_[w] = type;
            touched_.push_back(w);
          } else if (seen_[w] != type) {
            seen_[w] = kConflict;
          }
        }
      }
      if (touched_.empty()) break;
      commit_touched();
      ++steps_;
      if (keep_trace) trace_.push_back(state_);
    }
    return utilities_;
  }

  // Applies the decisions gathered in touched_ and rebuilds the frontier.
  void commit_touched() {
    frontier_.clear();
    for (NodeId w : touched_) {
      if (seen_[w] == kConflict) {
        state_[w] = NodeState::gray();
      } else {
        state_[w] = NodeState::adopted(seen_[w]);
        ++utilities_[seen_[w]];
        frontier_.push_back(w);
      }
    }
    touched_.clear();
  }

  void bump_stamp() {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
  }

  const Graph* g_;
  std::vector<NodeState> state_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> touched_;
  std::vector<std::size_t> utilities_;
  std::vector<std::vector<NodeState>> trace_;
  std::size_t steps_ = 0;
};

inline DiffusionOutcome diffuse(const Graph& g, const SeedProfile& profile, bool keep_trace = false) {
  DiffusionEngine engine(g);
  engine.run(profile, keep_trace);
  return engine.outcome();
}

inline std::vector<std::size_t> utilities(const Graph& g, const SeedProfile& profile) {
  DiffusionEngine engine(g);
  const auto u = engine.run(profile);
  return {u.begin(), u.end()};
}

struct SandwichViolation {
  NodeId node;
  std::uint32_t dist_a;  // kUnreachable when no path
  std::uint32_t dist_b;
  NodeState state;
};

/**
 * Checks the distance sandwich for a two-player run, with d_A = d(S_A, .) and
 * d_B = d(S_B, .):
 *   {d_A < d_B} subset of N_A subset of {d_A <= d_B}, symmetrically for B,
 *   and every Gray or White node has d_A = d_B.
 * Unreachable counts as an infinite distance. Returns the violating nodes.
 */
inline std::vector<SandwichViolation> check_distance_sandwich(const Graph& g, const SeedProfile& profile,
                                                              const DiffusionOutcome& outcome) {
  if (profile.player_count() != 2)
    throw Error("distance sandwich is defined for exactly 2 players, got " +
                std::to_string(profile.player_count()));
  profile.validate(g);
  if (outcome.final.size() != g.node_count()) throw Error("outcome does not match the graph");

  const DistanceField da = multi_source_distances(g, profile.seeds[0]);
  const DistanceField db = multi_source_distances(g, profile.seeds[1]);
  std::vector<SandwichViolation> violations;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint32_t a = da.raw()[v];
    const std::uint32_t b = db.raw()[v];
    const NodeState s = outcome.final[v];
    bool ok = true;
    if (a < b) ok = s == NodeState::adopted(0);
    else if (b < a) ok = s == NodeState::adopted(1);
    // Equal distances: anything is allowed by the inclusions.
    if (!ok) violations.push_back({v, a, b, s});
  }
  return violations;
}

}  // namespace diffgame
