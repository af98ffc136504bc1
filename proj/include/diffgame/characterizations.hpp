#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diffgame/equilibrium.hpp"
#include "diffgame/error.hpp"
#include "diffgame/generators.hpp"
#include "diffgame/graph.hpp"

namespace diffgame {

using OrderedPair = std::pair<NodeId, NodeId>;

/// True iff the k-bit labels a and b differ in an odd number of positions.
inline bool hypercube_predicted(unsigned k, std::uint64_t a, std::uint64_t b) {
  if (k < 1 || k > 63) throw Error("hypercube dimension out of range");
  const std::uint64_t limit = std::uint64_t{1} << k;
  if (a >= limit || b >= limit) throw Error("hypercube label out of range for k = " + std::to_string(k));
  return std::popcount(a ^ b) % 2 == 1;
}

// Central coordinate values of an axis 0..len: {x : |2x - len| <= 1}.
inline std::vector<std::size_t> central_window(std::size_t len) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x <= len; ++x) {
    const auto twice = static_cast<long long>(2 * x) - static_cast<long long>(len);
    if (twice >= -1 && twice <= 1) out.push_back(x);
  }
  return out;
}

/// Adjacent ordered pairs of L(m x n) with both endpoints in the central window, sorted.
inline std::vector<OrderedPair> lattice_predicted(std::size_t m, std::size_t n) {
  const auto xs = central_window(m);
  const auto ys = central_window(n);
  std::vector<NodeId> window;
  for (std::size_t x : xs)
    for (std::size_t y : ys) window.push_back(static_cast<NodeId>(x * (n + 1) + y));
  std::vector<OrderedPair> out;
  for (NodeId a : window) {
    for (NodeId b : window) {
      const auto pa = lattice_coordinates(n, a);
      const auto pb = lattice_coordinates(n, b);
      const std::size_t dist = (pa.x > pb.x ? pa.x - pb.x : pb.x - pa.x) + (pa.y > pb.y ? pa.y - pb.y : pb.y - pa.y);
      if (dist == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct LatticeFamily {
  std::size_t m;
  std::size_t n;
};
struct HypercubeFamily {
  unsigned k;
};
using Family = std::variant<LatticeFamily, HypercubeFamily>;

inline std::string family_name(const Family& family) {
  if (const auto* l = std::get_if<LatticeFamily>(&family))
    return "lattice(" + std::to_string(l->m) + "," + std::to_string(l->n) + ")";
  return "hypercube(" + std::to_string(std::get<HypercubeFamily>(family).k) + ")";
}

struct CharacterizationVerdict {
  std::string family;
  std::vector<OrderedPair> predicted;
  std::vector<OrderedPair> enumerated;
  std::vector<OrderedPair> missing;  // predicted but not an equilibrium
  std::vector<OrderedPair> extra;    // equilibrium but not predicted
  EquilibriumReport report;
  // False for even x even lattices, whose predicted extent is not pinned down.
  bool asserted = true;

  bool passed() const { return missing.empty() && extra.empty(); }
};

inline constexpr std::size_t kMaxCharacterizationNodes = 300;

inline Graph family_graph(const Family& family) {
  if (const auto* l = std::get_if<LatticeFamily>(&family)) return make_lattice(l->m, l->n);
  return make_hypercube(std::get<HypercubeFamily>(family).k);
}

/// Enumerates all equilibria of the family instance and diffs them against the predictor.
inline CharacterizationVerdict verify_characterization(const Family& family, std::size_t threads = 1) {
  std::size_t nodes = 0;
  if (const auto* l = std::get_if<LatticeFamily>(&family)) {
    if (l->m < 1 || l->n < 1) throw Error("lattice dimensions must be positive");
    nodes = (l->m + 1) * (l->n + 1);
  } else {
    const unsigned k = std::get<HypercubeFamily>(family).k;
    if (k < 1 || k > 20) throw Error("hypercube dimension must be in 1..20");
    nodes = std::size_t{1} << k;
  }
  if (nodes > kMaxCharacterizationNodes)
    throw Error(family_name(family) + " has " + std::to_string(nodes) + " nodes; exhaustive check is limited to " +
                std::to_string(kMaxCharacterizationNodes));

  const Graph g = family_graph(family);
  CharacterizationVerdict verdict;
  verdict.family = family_name(family);
  EquilibriumOptions options;
  options.threads = threads;
  verdict.report = enumerate_equilibria_2p(g, options);
  for (const auto& eq : verdict.report.equilibria) verdict.enumerated.emplace_back(eq.a, eq.b);
  std::sort(verdict.enumerated.begin(), verdict.enumerated.end());

  if (const auto* l = std::get_if<LatticeFamily>(&family)) {
    verdict.predicted = lattice_predicted(l->m, l->n);
    verdict.asserted = l->m % 2 == 1 || l->n % 2 == 1;
  } else {
    const unsigned k = std::get<HypercubeFamily>(family).k;
    for (NodeId a = 0; a < nodes; ++a)
      for (NodeId b = 0; b < nodes; ++b)
        if (hypercube_predicted(k, a, b)) verdict.predicted.emplace_back(a, b);
  }
  std::set_difference(verdict.predicted.begin(), verdict.predicted.end(), verdict.enumerated.begin(),
                      verdict.enumerated.end(), std::back_inserter(verdict.missing));
  std::set_difference(verdict.enumerated.begin(), verdict.enumerated.end(), verdict.predicted.begin(),
                      verdict.predicted.end(), std::back_inserter(verdict.extra));
  return verdict;
}

}  // namespace diffgame
