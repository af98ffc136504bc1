#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "diffgame/diffusion.hpp"
#include "diffgame/distances.hpp"
#include "diffgame/edge_list.hpp"
#include "diffgame/equilibrium.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/parallel.hpp"

namespace diffgame {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline void require_connected_pair_graph(const Graph& g) {
  if (g.node_count() < 2) throw Error("welfare bound needs at least 2 nodes");
  if (!is_connected(g)) throw Error("welfare bound is defined for connected graphs only");
}

/// n + 1 - sum_x sum_k |S_x(k)|^2 / (n (n - 1)), exactly.
inline Rational welfare_lower_bound(const Graph& g) {
  require_connected_pair_graph(g);
  const auto n = static_cast<long long>(g.node_count());
  long long squares = 0;
  for (NodeId x = 0; x < g.node_count(); ++x)
    for (std::size_t s : sphere_sizes(g, x)) squares += static_cast<long long>(s * s);
  return Rational(n + 1) - Rational(squares, n * (n - 1));
}

/**
 * The same bound evaluated from zero patterns: with A = I + adjacency, sums
 * ||(sigma(A^k) - sigma(A^(k-1))) 1||^2 over k = 1 .. D, where sigma marks
 * positive entries and D is the first power with no change.
 */
inline Rational welfare_lower_bound_zero_pattern(const Graph& g) {
  require_connected_pair_graph(g);
  const std::size_t n = g.node_count();
  using Pattern = std::vector<std::vector<char>>;
  Pattern a(n, std::vector<char>(n, 0));
  for (NodeId u = 0; u < n; ++u) {
    a[u][u] = 1;
    for (NodeId w : g.neighbors(u)) a[u][w] = 1;
  }
  const auto multiply = [n](const Pattern& x, const Pattern& y) {
    Pattern out(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < n; ++j) out[i][j] = out[i][j] || y[k][j];
    return out;
  };
  Pattern previous(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) previous[i][i] = 1;  // sigma(A^0) = I
  long long squares = 0;
  for (;;) {
    Pattern current = multiply(previous, a);
    if (current == previous) break;
    for (std::size_t i = 0; i < n; ++i) {
      long long row = 0;
      for (std::size_t j = 0; j < n; ++j) row += current[i][j] - previous[i][j];
      squares += row * row;
    }
    previous = std::move(current);
  }
  const auto nn = static_cast<long long>(n);
  return Rational(nn + 1) - Rational(squares, nn * (nn - 1));
}

struct WelfareBoundReport {
  Rational bound;
  std::optional<std::size_t> optimum;
  std::optional<std::pair<NodeId, NodeId>> witness;  // first maximizing ordered pair

  bool bound_holds() const { return !optimum || bound <= Rational(static_cast<long long>(*optimum)); }
};

inline constexpr std::size_t kMaxWelfareNodes = 500;

/// Maximum of U_A + U_B over distinct ordered pairs, with the bound attached.
inline WelfareBoundReport optimal_welfare_bruteforce(const Graph& g, std::size_t threads = 1) {
  require_connected_pair_graph(g);
  if (g.node_count() > kMaxWelfareNodes)
    throw Error("brute-force welfare is limited to " + std::to_string(kMaxWelfareNodes) + " nodes");
  WelfareBoundReport report;
  report.bound = welfare_lower_bound(g);
  const UtilityMatrix ua = utility_matrix(g, threads);
  std::size_t best = 0;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = 0; b < g.node_count(); ++b) {
      if (a == b) continue;
      const std::size_t total = ua.at(a, b) + ua.at(b, a);
      if (!report.witness || total > best) {
        best = total;
        report.witness = std::pair{a, b};
      }
    }
  }
  report.optimum = best;
  return report;
}

// ---------------------------------------------------------------------------
// Sub-modularity
// ---------------------------------------------------------------------------

/// Utility of the own player (player 0) seeding own_seeds against opponent_seeds; 0 for an empty own set.
inline std::size_t own_utility(const Graph& g, std::span<const NodeId> opponent_seeds, std::span<const NodeId> own_seeds) {
  if (own_seeds.empty()) return 0;
  const SeedProfile profile({std::vector<NodeId>(own_seeds.begin(), own_seeds.end()),
                             std::vector<NodeId>(opponent_seeds.begin(), opponent_seeds.end())});
  return utilities(g, profile)[0];
}

/// U_own(own ∪ {x}) - U_own(own); may be negative.
inline long long marginal_gain(const Graph& g, std::span<const NodeId> opponent_seeds, std::span<const NodeId> own_seeds,
                               NodeId x) {
  if (opponent_seeds.empty()) throw Error("opponent needs at least one seed");
  require_node(g, x, "candidate node");
  if (std::find(own_seeds.begin(), own_seeds.end(), x) != own_seeds.end())
    throw Error("node " + std::to_string(x) + " is already an own seed");
  std::vector<NodeId> with(own_seeds.begin(), own_seeds.end());
  with.push_back(x);
  return static_cast<long long>(own_utility(g, opponent_seeds, with)) -
         static_cast<long long>(own_utility(g, opponent_seeds, own_seeds));
}

struct SubmodularityViolation {
  std::vector<NodeId> small;  // S
  std::vector<NodeId> large;  // S-bar, a superset of S
  NodeId x = 0;
  long long marginal_small = 0;
  long long marginal_large = 0;  // strictly larger
};

namespace detail {

inline void subsets_up_to(std::span<const NodeId> pool, std::size_t max_size, std::vector<std::vector<NodeId>>& out) {
  std::vector<NodeId> current;
  const auto rec = [&](auto&& self, std::size_t start) -> void {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/**
 * Every (S, S-bar, x) with S ⊆ S-bar ⊆ V \ opponent, |S-bar| <= max_set_size
 * and x outside S-bar and the opponent set, where adding x to the larger set
 * gains strictly more than adding it to the smaller one. Sets are ascending;
 * results are ordered by (S-bar, x, S).
 */
inline std::vector<SubmodularityViolation> submodularity_search(const Graph& g, std::span<const NodeId> opponent_seeds,
                                                                std::size_t max_set_size) {
  if (opponent_seeds.empty()) throw Error("opponent needs at least one seed");
  std::vector<char> is_opponent(g.node_count(), 0);
  for (NodeId v : opponent_seeds) {
    require_node(g, v, "opponent seed");
    is_opponent[v] = 1;
  }
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!is_opponent[v]) pool.push_back(v);

  std::vector<std::vector<NodeId>> sets;
  detail::subsets_up_to(pool, max_set_size, sets);
  std::sort(sets.begin(), sets.end());

  const auto utility_of = [&](const std::vector<NodeId>& s) { return own_utility(g, opponent_seeds, s); };

  std::vector<SubmodularityViolation> out;
  for (const auto& large : sets) {
    for (NodeId x : pool) {
      if (std::binary_search(large.begin(), large.end(), x)) continue;
      std::vector<NodeId> large_x = large;
      large_x.insert(std::lower_bound(large_x.begin(), large_x.end(), x), x);
      const long long m_large = static_cast<long long>(utility_of(large_x)) - static_cast<long long>(utility_of(large));
      // Every subset S of large.
      const std::size_t k = large.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<NodeId> small;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) small.push_back(large[i]);
        if (small.size() == k) continue;  // S = S-bar cannot violate
        std::vector<NodeId> small_x = small;
        small_x.insert(std::lower_bound(small_x.begin(), small_x.end(), x), x);
        const long long m_small =
            static_cast<long long>(utility_of(small_x)) - static_cast<long long>(utility_of(small));
        if (m_small < m_large) out.push_back({small, large, x, m_small, m_large});
      }
    }
  }
  return out;
}

struct SubmodularityWitness {
  Graph graph;
  std::vector<NodeId> opponent;
  SubmodularityViolation violation;
};

struct SubmodularitySearchResult {
  std::optional<SubmodularityWitness> witness;  // first violation found
  std::size_t graphs_examined = 0;              // connected labeled graphs searched
  std::size_t max_nodes_searched = 0;
};

/**
 * Searches connected labeled graphs on 2..max_nodes nodes, in increasing node
 * count and edge-mask order, each with every single opponent seed, and stops
 * at the first violation.
 */
inline SubmodularitySearchResult small_graph_submodularity_search(std::size_t max_nodes, std::size_t max_set_size) {
  if (max_nodes < 2 || max_nodes > 7) throw Error("exhaustive graph search supports 2..7 nodes");
  SubmodularitySearchResult result;
  for (std::size_t n = 2; n <= max_nodes; ++n) {
    result.max_nodes_searched = n;
    std::vector<Edge> pairs;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      Graph g = Graph::from_edges(n, edges);
      if (!is_connected(g)) continue;
      ++result.graphs_examined;
      for (NodeId o = 0; o < n; ++o) {
        const NodeId opponent[] = {o};
        auto violations = submodularity_search(g, opponent, max_set_size);
        if (!violations.empty()) {
          result.witness = SubmodularityWitness{std::move(g), {o}, violations.front()};
          return result;
        }
      }
    }
  }
  return result;
}

namespace detail {

inline std::string join_nodes(std::span<const NodeId> nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? " " : "") + std::to_string(nodes[i]);
  return out;
}

}  // namespace detail

/**
 * Edge-list document with the seed annotations in leading comment lines:
 *   # opponent <nodes>
 *   # small <nodes>        (may be empty)
 *   # large <nodes>
 *   # x <node>
 *   # marginals <small> <large>
 */
inline std::string witness_to_text(const SubmodularityWitness& w) {
  std::ostringstream out;
  out << "# submodularity witness\n";
  out << "# opponent " << detail::join_nodes(w.opponent) << '\n';
  out << "# small " << detail::join_nodes(w.violation.small) << '\n';
  out << "# large " << detail::join_nodes(w.violation.large) << '\n';
  out << "# x " << w.violation.x << '\n';
  out << "# marginals " << w.violation.marginal_small << ' ' << w.violation.marginal_large << '\n';
  out << to_edge_list(w.graph);
  return out.str();
}

inline SubmodularityWitness witness_from_text(std::string_view text) {
  SubmodularityWitness w;
  w.graph = from_edge_list(text);
  bool has_opponent = false, has_large = false, has_x = false, has_marginals = false;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() != '#') continue;
    line = detail::trim(line.substr(1));
    const auto space = line.find(' ');
    const auto key = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    const auto parse = [&]() {
      auto values = detail::parse_uints(rest);
      if (!values) throw ParseError(line_no, "expected node ids after '" + std::string(key) + "'");
      return *values;
    };
    const auto as_nodes = [&](const std::vector<std::uint64_t>& values) {
      std::vector<NodeId> nodes;
      for (auto v : values) {
        if (v >= w.graph.node_count()) throw ParseError(line_no, "node id out of range");
        nodes.push_back(static_cast<NodeId>(v));
      }
      return nodes;
    };
    if (key == "opponent") {
      w.opponent = as_nodes(parse());
      has_opponent = true;
    } else if (key == "small") {
      w.violation.small = as_nodes(parse());
    } else if (key == "large") {
      w.violation.large = as_nodes(parse());
      has_large = true;
    } else if (key == "x") {
      const auto v = as_nodes(parse());
      if (v.size() != 1) throw ParseError(line_no, "expected one node after 'x'");
      w.violation.x = v[0];
      has_x = true;
    } else if (key == "marginals") {
      // Marginals may be negative, so parse signed.
      std::istringstream in{std::string(rest)};
      if (!(in >> w.violation.marginal_small >> w.violation.marginal_large))
        throw ParseError(line_no, "expected two integers after 'marginals'");
      has_marginals = true;
    }
  }
  if (!has_opponent || !has_large || !has_x || !has_marginals)
    throw Error("witness is missing one of the opponent/large/x/marginals annotations");
  return w;
}

}  // namespace diffgame
