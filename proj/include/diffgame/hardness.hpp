#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diffgame/diffusion.hpp"
#include "diffgame/distances.hpp"
#include "diffgame/edge_list.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/parallel.hpp"

namespace diffgame {

// ---------------------------------------------------------------------------
// 3-partition instances
// ---------------------------------------------------------------------------

struct ThreePartitionInstance {
  std::size_t m = 0;
  std::uint64_t beta = 0;
  std::vector<std::uint64_t> alphas;  // 3m values

  /// beta > 3, beta/4 < alpha_i < beta/2 and sum alpha_i = m * beta.
  void validate() const {
    if (m == 0) throw Error("3-partition needs m >= 1");
    if (alphas.size() != 3 * m)
      throw Error("expected " + std::to_string(3 * m) + " alphas, got " + std::to_string(alphas.size()));
    if (beta <= 3) throw Error("beta must exceed 3");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      if (!(4 * alphas[i] > beta && 2 * alphas[i] < beta))
        throw Error("alpha_" + std::to_string(i + 1) + " = " + std::to_string(alphas[i]) +
                    " violates beta/4 < alpha < beta/2");
    }
    const auto sum = std::accumulate(alphas.begin(), alphas.end(), std::uint64_t{0});
    if (sum != m * beta)
      throw Error("alphas sum to " + std::to_string(sum) + ", expected m*beta = " + std::to_string(m * beta));
  }
};

/// Text form: line 1 "m beta", line 2 the 3m alphas. '#' lines are comments.
inline ThreePartitionInstance parse_three_partition(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::parse_uints(line);
    if (!fields) throw ParseError(line_no, "expected non-negative integers");
    rows.emplace_back(line_no, std::move(*fields));
  }
  if (rows.size() != 2) throw ParseError(line_no, "expected exactly two lines: 'm beta' and the alphas");
  if (rows[0].second.size() != 2) throw ParseError(rows[0].first, "expected 'm beta'");
  ThreePartitionInstance inst{rows[0].second[0], rows[0].second[1], rows[1].second};
  if (inst.alphas.size() != 3 * inst.m)
    throw ParseError(rows[1].first, "expected " + std::to_string(3 * inst.m) + " alphas");
  inst.validate();
  return inst;
}

inline std::string to_text(const ThreePartitionInstance& inst) {
  std::ostringstream out;
  out << inst.m << ' ' << inst.beta << '\n';
  for (std::size_t i = 0; i < inst.alphas.size(); ++i) out << (i ? " " : "") << inst.alphas[i];
  out << '\n';
  return out.str();
}

using Triple = std::array<std::size_t, 3>;  // 0-based indices into alphas, ascending

inline constexpr std::size_t kMaxBruteForceItems = 15;

/**
 * Exhaustive search for m disjoint triples each summing to beta. The bounds on
 * alpha force every part with sum beta to have exactly three elements.
 */
inline std::optional<std::vector<Triple>> solve_3partition(const ThreePartitionInstance& inst) {
  inst.validate();
  if (inst.alphas.size() > kMaxBruteForceItems)
    throw Error("instance too large for brute force (3m = " + std::to_string(inst.alphas.size()) + " > 15)");

  const std::size_t count = inst.alphas.size();
  std::vector<char> used(count, 0);
  std::vector<Triple> parts;
  std::function<bool()> search = [&]() -> bool {
    const auto first = static_cast<std::size_t>(std::find(used.begin(), used.end(), 0) - used.begin());
    if (first == count) return true;
    used[first] = 1;
    for (std::size_t j = first + 1; j < count; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      for (std::size_t k = j + 1; k < count; ++k) {
        if (used[k] || inst.alphas[first] + inst.alphas[j] + inst.alphas[k] != inst.beta) continue;
        used[k] = 1;
        parts.push_back({first, j, k});
        if (search()) return true;
        parts.pop_back();
        used[k] = 0;
      }
      used[j] = 0;
    }
    used[first] = 0;
    return false;
  };
  if (search()) return parts;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Right core: nine stars with wired centers
// ---------------------------------------------------------------------------

/// Wiring of the nine star centers, as edges between center indices 0..8.
struct CoreSpec {
  std::string name;
  std::vector<Edge> center_edges;
};

inline CoreSpec core_cycle9() {
  CoreSpec spec{"cycle9", {}};
  for (NodeId i = 0; i < 9; ++i) spec.center_edges.push_back({i, static_cast<NodeId>((i + 1) % 9)});
  return spec;
}

inline CoreSpec core_grid3x3() {
  CoreSpec spec{"grid3x3", {}};
  for (NodeId x = 0; x < 3; ++x) {
    for (NodeId y = 0; y < 3; ++y) {
      if (x < 2) spec.center_edges.push_back({x * 3 + y, (x + 1) * 3 + y});
      if (y < 2) spec.center_edges.push_back({x * 3 + y, x * 3 + y + 1});
    }
  }
  return spec;
}

inline CoreSpec core_path9() {
  CoreSpec spec{"path9", {}};
  for (NodeId i = 0; i + 1 < 9; ++i) spec.center_edges.push_back({i, i + 1});
  return spec;
}

// Centers 0..5 form a hexagon; 6, 7, 8 form a triangle whose corners 6 and 7
// attach to hexagon nodes 0 and 4, which are two steps apart.
inline CoreSpec core_hexagon_bridged_triangle() {
  CoreSpec spec{"hexagon_bridged_triangle", {}};
  for (NodeId i = 0; i < 6; ++i) spec.center_edges.push_back({i, static_cast<NodeId>((i + 1) % 6)});
  for (Edge e : {Edge{0, 6}, Edge{4, 7}, Edge{6, 7}, Edge{6, 8}, Edge{7, 8}}) spec.center_edges.push_back(e);
  return spec;
}

/// Candidate wirings in the order they are tried.
inline std::vector<CoreSpec> core_candidates() {
  return {core_cycle9(), core_grid3x3(), core_path9(), core_hexagon_bridged_triangle()};
}

/// Nine stars of d nodes each (center + d-1 leaves). Star s occupies ids s*d .. s*d+d-1, center first.
inline Graph build_core(const CoreSpec& spec, std::size_t d) {
  if (d < 1) throw Error("star size must be positive");
  std::vector<Edge> edges;
  for (NodeId s = 0; s < 9; ++s)
    for (std::size_t leaf = 1; leaf < d; ++leaf)
      edges.push_back({static_cast<NodeId>(s * d), static_cast<NodeId>(s * d + leaf)});
  for (const Edge& e : spec.center_edges) {
    if (e.u >= 9 || e.v >= 9) throw Error("core wiring refers to a center outside 0..8");
    edges.push_back({static_cast<NodeId>(e.u * d), static_cast<NodeId>(e.v * d)});
  }
  return Graph::from_edges(9 * d, edges);
}

struct CoreReport {
  std::size_t d = 0;
  bool sole_player_ok = false;      // (1) a lone player collects all 9d nodes
  bool no_equilibrium_ok = false;   // (2) no pure 2-player equilibrium on the core
  bool deviation_4d_ok = false;     // (3) every profile has a deviation worth >= 4d
  std::optional<NodeId> sole_player_witness;           // node where (1) fails
  std::optional<OrderedProfile> equilibrium_witness;   // equilibrium refuting (2)
  std::optional<std::pair<NodeId, NodeId>> deviation_witness;  // profile refuting (3)
  // Least best-response value an entrant can secure against a lone incumbent,
  // and the lowest incumbent position attaining it.
  std::uint32_t entrant_guarantee = 0;
  NodeId incumbent_position = 0;
  // Some incumbent position holds every entrant to at most 4d. The gadget
  // places its right-side player there.
  bool entrant_cap_ok = false;

  bool passed() const { return sole_player_ok && no_equilibrium_ok && deviation_4d_ok; }
  bool usable_in_gadget() const { return passed() && entrant_cap_ok; }
};

/// Exhaustive check of the three core properties on the core graph alone.
inline CoreReport verify_core(const Graph& core, std::size_t d, std::size_t threads = 1) {
  CoreReport report;
  report.d = d;
  const std::size_t n = core.node_count();
  if (n != 9 * d) throw Error("core must have 9*d nodes");

  DiffusionEngine engine(core);
  report.sole_player_ok = true;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId seed[] = {v};
    if (engine.run_singles(seed)[0] != 9 * d) {
      report.sole_player_ok = false;
      report.sole_player_witness = v;
      break;
    }
  }

  const UtilityMatrix ua = utility_matrix(core, threads);
  EquilibriumOptions options;
  options.use_block_filter = false;
  options.use_degree_filter = false;
  const EquilibriumReport eq = enumerate_equilibria_2p(core, ua, options);
  report.no_equilibrium_ok = eq.equilibria.empty();
  if (!eq.equilibria.empty()) report.equilibrium_witness = eq.equilibria.front();

  std::vector<std::uint32_t> best(n);
  for (NodeId b = 0; b < n; ++b) best[b] = ua.best_against(b);
  const auto threshold = static_cast<std::uint32_t>(4 * d);
  report.deviation_4d_ok = true;
  for (NodeId a = 0; a < n && report.deviation_4d_ok; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      // Player at a can reach best[b]; player at b can reach best[a].
      if (std::max(best[a], best[b]) < threshold) {
        report.deviation_4d_ok = false;
        report.deviation_witness = std::pair{a, b};
        break;
      }
    }
  }
  const auto it = std::min_element(best.begin(), best.end());
  report.entrant_guarantee = *it;
  report.incumbent_position = static_cast<NodeId>(it - best.begin());
  report.entrant_cap_ok = report.entrant_guarantee <= threshold;
  return report;
}

// ---------------------------------------------------------------------------
// Reduction gadget
// ---------------------------------------------------------------------------

struct Region {
  enum class Kind { Left, Middle, RightCore, Original, Extension };
  Kind kind = Kind::Original;
  // Left: {i}; Middle: {i, j, k}; RightCore: {star, leaf index (0 = center)};
  // Original: {original id}; Extension: {column, row}.
  std::array<std::uint32_t, 3> index{};

  std::string to_string() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::Left: out << "left " << index[0]; break;
      case Kind::Middle: out << "middle " << index[0] << ' ' << index[1] << ' ' << index[2]; break;
      case Kind::RightCore: out << "right_core " << index[0] << ' ' << index[1]; break;
      case Kind::Original: out << "original " << index[0]; break;
      case Kind::Extension: out << "extension " << index[0] << ' ' << index[1]; break;
    }
    return out.str();
  }
};

struct GadgetParams {
  std::size_t c = 0;      // C(3m, 3)
  std::size_t d = 0;      // star size
  std::size_t n_ext = 0;  // column size 2|V| + 1 used if the gadget is extended
};

/**
 * Node layout: left sets I_0 .. I_{3m-1} (sizes c*alpha_i) first, then the
 * middle clique (one node per triple, lexicographic), then the right core.
 */
struct GadgetGraph {
  Graph graph;
  std::vector<Region> regions;
  std::vector<NodeId> T;  // middle + right core, ascending
  GadgetParams params;
  std::string core_name;
  CoreReport core_report;
  std::vector<Triple> triples;  // middle node order
  NodeId middle_begin = 0;
  NodeId right_begin = 0;
  std::size_t left_size = 0;

  NodeId middle_node(const Triple& t) const {
    const auto it = std::lower_bound(triples.begin(), triples.end(), t);
    if (it == triples.end() || *it != t) throw Error("not a triple of this gadget");
    return middle_begin + static_cast<NodeId>(it - triples.begin());
  }

  /// Right-core node where a lone player is placed: it minimizes the best entrant reply.
  NodeId right_optimum() const { return right_begin + core_report.incumbent_position; }
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Smallest integer d with (beta-1)c/4 < d < beta*c/4, if any.
inline std::optional<std::size_t> star_size(std::uint64_t beta, std::size_t c) {
  const std::uint64_t lower = (beta - 1) * c;  // need 4d > lower
  const std::uint64_t upper = beta * c;        // need 4d < upper
  const std::uint64_t d = lower / 4 + 1;
  if (4 * d < upper) return static_cast<std::size_t>(d);
  return std::nullopt;
}

/**
 * Builds the three-part reduction graph. Without an explicit core, the
 * candidate wirings are verified in order at the chosen d and the first that
 * passes is used.
 */
inline GadgetGraph build_reduction_graph(const ThreePartitionInstance& inst,
                                         const std::optional<CoreSpec>& core = std::nullopt,
                                         std::size_t threads = 1) {
  inst.validate();
  const std::size_t items = inst.alphas.size();
  GadgetGraph gadget;
  gadget.params.c = binomial(items, 3);
  const auto d = star_size(inst.beta, gadget.params.c);
  if (!d)
    throw Error("no integer d with (beta-1)c/4 < d < beta*c/4 (beta = " + std::to_string(inst.beta) +
                ", c = " + std::to_string(gadget.params.c) + ")");
  gadget.params.d = *d;
  const std::size_t c = gadget.params.c;
  if (!(2 * 9 * *d > 3 * inst.beta * c && 4 * *d > (inst.beta - 1) * c))
    throw Error("star size d = " + std::to_string(*d) + " violates 9d > 3*beta*c/2 or 4d > (beta-1)c");

  // Core selection and verification.
  std::vector<CoreSpec> candidates = core ? std::vector<CoreSpec>{*core} : core_candidates();
  std::optional<CoreSpec> chosen;
  for (const CoreSpec& spec : candidates) {
    CoreReport report = verify_core(build_core(spec, *d), *d, threads);
    if (report.usable_in_gadget()) {
      chosen = spec;
      gadget.core_report = report;
      break;
    }
  }
  if (!chosen) throw Error("no core wiring passed verification at d = " + std::to_string(*d));
  gadget.core_name = chosen->name;

  for (std::size_t i = 0; i < items; ++i)
    for (std::size_t j = i + 1; j < items; ++j)
      for (std::size_t k = j + 1; k < items; ++k) gadget.triples.push_back({i, j, k});

  std::vector<NodeId> left_begin(items);
  NodeId next = 0;
  for (std::size_t i = 0; i < items; ++i) {
    left_begin[i] = next;
    for (std::uint64_t s = 0; s < c * inst.alphas[i]; ++s)
      gadget.regions.push_back({Region::Kind::Left, {static_cast<std::uint32_t>(i), 0, 0}});
    next += static_cast<NodeId>(c * inst.alphas[i]);
  }
  gadget.left_size = next;
  gadget.middle_begin = next;
  for (const Triple& t : gadget.triples)
    gadget.regions.push_back({Region::Kind::Middle,
                              {static_cast<std::uint32_t>(t[0]), static_cast<std::uint32_t>(t[1]),
                               static_cast<std::uint32_t>(t[2])}});
  gadget.right_begin = next + static_cast<NodeId>(c);
  for (std::size_t s = 0; s < 9; ++s)
    for (std::size_t leaf = 0; leaf < *d; ++leaf)
      gadget.regions.push_back({Region::Kind::RightCore, {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(leaf), 0}});
  const std::size_t total = gadget.regions.size();

  std::vector<Edge> edges;
  for (std::size_t x = 0; x < c; ++x)
    for (std::size_t y = x + 1; y < c; ++y)
      edges.push_back({gadget.middle_begin + static_cast<NodeId>(x), gadget.middle_begin + static_cast<NodeId>(y)});
  for (std::size_t x = 0; x < c; ++x) {
    const NodeId mid = gadget.middle_begin + static_cast<NodeId>(x);
    for (std::size_t i : gadget.triples[x]) {
      for (std::uint64_t s = 0; s < c * inst.alphas[i]; ++s) edges.push_back({left_begin[i] + static_cast<NodeId>(s), mid});
    }
  }
  const Graph right = build_core(*chosen, *d);
  for (const Edge& e : right.edges()) edges.push_back({gadget.right_begin + e.u, gadget.right_begin + e.v});
  gadget.graph = Graph::from_edges(total, edges);

  for (NodeId v = gadget.middle_begin; v < total; ++v) gadget.T.push_back(v);
  gadget.params.n_ext = 2 * total + 1;
  return gadget;
}

/// Sidecar document: one "node label" line per node, after a header line.
inline std::string regions_to_text(std::span<const Region> regions) {
  std::ostringstream out;
  out << "# node region\n";
  for (std::size_t v = 0; v < regions.size(); ++v) out << v << ' ' << regions[v].to_string() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Extension graph
// ---------------------------------------------------------------------------

struct ExtendedGraph {
  Graph graph;
  std::vector<Region> regions;  // Original for ids < |V|, Extension(column, row) after
  std::size_t column_size = 0;  // 2|V| + 1
};

/**
 * For every t in T adds a column of 2|V|+1 new nodes adjacent to t; the j-th
 * nodes of all columns form a clique. Column of the i-th element of T (in
 * ascending order) at row j gets id |V| + i*(2|V|+1) + j.
 */
inline ExtendedGraph extend_graph(const Graph& g, std::span<const NodeId> T_in) {
  if (T_in.empty()) throw Error("extension needs a nonempty node set T");
  std::vector<NodeId> T(T_in.begin(), T_in.end());
  for (NodeId t : T) require_node(g, t, "T node");
  std::sort(T.begin(), T.end());
  if (std::adjacent_find(T.begin(), T.end()) != T.end()) throw Error("T contains a repeated node");

  const std::size_t base = g.node_count();
  const std::size_t rows = 2 * base + 1;
  ExtendedGraph out;
  out.column_size = rows;
  std::vector<Edge> edges = g.edges();
  const auto cell = [&](std::size_t col, std::size_t row) {
    return static_cast<NodeId>(base + col * rows + row);
  };
  for (std::size_t col = 0; col < T.size(); ++col)
    for (std::size_t row = 0; row < rows; ++row) edges.push_back({T[col], cell(col, row)});
  for (std::size_t row = 0; row < rows; ++row)
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t b = a + 1; b < T.size(); ++b) edges.push_back({cell(a, row), cell(b, row)});

  out.graph = Graph::from_edges(base + T.size() * rows, edges);
  for (NodeId v = 0; v < base; ++v) out.regions.push_back({Region::Kind::Original, {v, 0, 0}});
  for (std::size_t col = 0; col < T.size(); ++col)
    for (std::size_t row = 0; row < rows; ++row)
      out.regions.push_back({Region::Kind::Extension, {static_cast<std::uint32_t>(col), static_cast<std::uint32_t>(row), 0}});
  return out;
}

/// Ordered 2-player equilibria of g when both players are confined to T.
inline std::vector<OrderedProfile> restricted_equilibria_2p(const Graph& g, std::span<const NodeId> T,
                                                            const UtilityMatrix& ua) {
  std::vector<OrderedProfile> out;
  std::vector<std::uint32_t> best(g.node_count(), 0);
  for (NodeId b : T)
    for (NodeId a : T) best[b] = std::max(best[b], ua.at(a, b));
  std::vector<NodeId> sorted(T.begin(), T.end());
  std::sort(sorted.begin(), sorted.end());
  for (NodeId a : sorted)
    for (NodeId b : sorted)
      if (a != b && ua.at(a, b) == best[b] && ua.at(b, a) == best[a]) out.push_back({a, b, ua.at(a, b), ua.at(b, a)});
  return out;
}

// ---------------------------------------------------------------------------
// Restricted k-player sweep
// ---------------------------------------------------------------------------

/**
 * Groups the nodes of T by identical neighbor lists. Swapping two such nodes
 * is an automorphism of the graph that preserves T, so profiles related by
 * these swaps are equilibria together.
 */
inline std::vector<std::vector<NodeId>> twin_classes(const Graph& g, std::span<const NodeId> T) {
  std::map<std::vector<NodeId>, std::vector<NodeId>> by_neighbors;
  for (NodeId v : T) {
    const auto nb = g.neighbors(v);
    by_neighbors[std::vector<NodeId>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<std::vector<NodeId>> classes;
  for (auto& [nb, members] : by_neighbors) {
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

struct RestrictedSweepResult {
  std::optional<std::vector<NodeId>> equilibrium;  // one seed per player
  std::size_t profiles_examined = 0;               // canonical profiles checked
};

/**
 * Searches every k-player single-seed profile over T (all players share the
 * strategy set T) for a pure equilibrium, stopping at the first one. Profiles
 * are enumerated up to permutations inside twin classes, and deviations into a
 * twin class only try one member not held by another player.
 */
inline RestrictedSweepResult find_restricted_equilibrium(const Graph& g, std::span<const NodeId> T,
                                                         std::size_t players, std::size_t threads = 1) {
  if (players < 2) throw Error("restricted sweep needs at least 2 players");
  if (T.empty()) throw Error("restricted sweep needs a nonempty T");
  for (NodeId v : T) require_node(g, v, "T node");

  const auto classes = twin_classes(g, T);
  struct Worker {
    std::optional<DiffusionEngine> engine;
    std::vector<NodeId> seeds;
    std::vector<std::size_t> used;  // per class: how many members are in use (prefix)
  };
  const std::size_t workers = resolve_threads(threads);
  std::vector<Worker> scratch(workers);
  std::atomic<bool> found{false};
  std::atomic<std::size_t> examined{0};
  std::mutex result_mutex;
  std::optional<std::vector<NodeId>> witness;

  // Does player p have a strictly improving move? Others' seeds are fixed.
  const auto has_improvement = [&](Worker& w, std::size_t p, std::size_t current) {
    std::vector<NodeId>& seeds = w.seeds;
    const NodeId original = seeds[p];
    bool improved = false;
    for (std::size_t c = 0; c < classes.size() && !improved; ++c) {
      const auto& members = classes[c];
      bool fresh_tried = false;
      for (NodeId v : members) {
        bool held_by_other = false;
        for (std::size_t q = 0; q < seeds.size(); ++q) held_by_other = held_by_other || (q != p && seeds[q] == v);
        if (!held_by_other) {
          if (fresh_tried) continue;
          fresh_tried = true;
        }
        if (v == original) continue;
        seeds[p] = v;
        if (w.engine->run_singles(seeds)[p] > current) {
          improved = true;
          break;
        }
      }
    }
    seeds[p] = original;
    return improved;
  };

  const auto check_profile = [&](Worker& w) {
    examined.fetch_add(1, std::memory_order_relaxed);
    const auto base = w.engine->run_singles(w.seeds);
    const std::vector<std::size_t> current(base.begin(), base.end());
    for (std::size_t p = 0; p < players; ++p)
      if (has_improvement(w, p, current[p])) return false;
    return true;
  };

  // Canonical choices for the next player: any member already in use in its
  // class, or the next unused member of the class.
  std::function<void(Worker&, std::size_t)> extend = [&](Worker& w, std::size_t player) {
    if (found.load(std::memory_order_relaxed)) return;
    if (player == players) {
      if (check_profile(w)) {
        std::lock_guard lock(result_mutex);
        if (!witness) witness = w.seeds;
        found = true;
      }
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const std::size_t limit = std::min(w.used[c] + 1, classes[c].size());
      for (std::size_t r = 0; r < limit; ++r) {
        const bool fresh = r == w.used[c];
        w.seeds[player] = classes[c][r];
        if (fresh) ++w.used[c];
        extend(w, player + 1);
        if (fresh) --w.used[c];
      }
    }
  };

  // Parallel over the first player's canonical choice (always member 0 of a class).
  parallel_for(classes.size(), threads, [&](std::size_t c, std::size_t worker) {
    Worker& w = scratch[worker];
    if (!w.engine) {
      w.engine.emplace(g);
      w.seeds.assign(players, 0);
      w.used.assign(classes.size(), 0);
    }
    w.seeds[0] = classes[c][0];
    ++w.used[c];
    extend(w, 1);
    --w.used[c];
  });

  RestrictedSweepResult result;
  result.equilibrium = witness;
  result.profiles_examined = examined.load();
  return result;
}

// ---------------------------------------------------------------------------
// Reduction verification
// ---------------------------------------------------------------------------

struct ReductionReport {
  std::optional<std::vector<Triple>> partition;
  // Direction 1 (only when a partition exists).
  std::optional<std::vector<NodeId>> partition_profile;
  std::vector<std::size_t> partition_utilities;
  bool partition_profile_certified = false;
  std::optional<Deviation> partition_profile_deviation;
  // Direction 2.
  bool sweep_found_equilibrium = false;
  std::optional<std::vector<NodeId>> sweep_witness;
  std::size_t sweep_profiles_examined = 0;

  /// Solver verdict and sweep verdict agree, and direction 1 certifies when applicable.
  bool consistent() const {
    const bool solvable = partition.has_value();
    return solvable == sweep_found_equilibrium && (!solvable || partition_profile_certified);
  }
};

inline ReductionReport verify_reduction(const ThreePartitionInstance& inst, const GadgetGraph& gadget,
                                        std::size_t threads = 1) {
  inst.validate();
  const std::size_t c = binomial(inst.alphas.size(), 3);
  std::uint64_t left = 0;
  for (auto a : inst.alphas) left += c * a;
  if (gadget.params.c != c || gadget.left_size != left || gadget.triples.size() != c ||
      gadget.graph.node_count() != left + c + 9 * gadget.params.d)
    throw Error("gadget was not built from this instance");

  ReductionReport report;
  report.partition = solve_3partition(inst);
  const std::size_t players = inst.m + 1;

  if (report.partition) {
    std::vector<NodeId> seeds;
    for (const Triple& t : *report.partition) seeds.push_back(gadget.middle_node(t));
    seeds.push_back(gadget.right_optimum());
    report.partition_profile = seeds;
    report.partition_utilities = utilities(gadget.graph, SeedProfile::singles(seeds));
    const std::vector<std::vector<NodeId>> spaces(players, gadget.T);
    const EquilibriumCheck check = is_equilibrium(gadget.graph, SeedProfile::singles(seeds), spaces);
    report.partition_profile_certified = check.equilibrium;
    report.partition_profile_deviation = check.deviation;
  }

  const RestrictedSweepResult sweep = find_restricted_equilibrium(gadget.graph, gadget.T, players, threads);
  report.sweep_found_equilibrium = sweep.equilibrium.has_value();
  report.sweep_witness = sweep.equilibrium;
  report.sweep_profiles_examined = sweep.profiles_examined;
  return report;
}

}  // namespace diffgame
