#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"
#include "diffgame/rng.hpp"

namespace diffgame {

/**
 * Lattice L(m x n): nodes (x, y) with 0 <= x <= m, 0 <= y <= n, adjacent at
 * Euclidean distance 1. Node id of (x, y) is x * (n + 1) + y.
 */
inline Graph make_lattice(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error("lattice dimensions must be positive");
  const auto id = [n](std::size_t x, std::size_t y) { return static_cast<NodeId>(x * (n + 1) + y); };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x <= m; ++x) {
    for (std::size_t y = 0; y <= n; ++y) {
      if (x < m) edges.push_back({id(x, y), id(x + 1, y)});
      if (y < n) edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  return Graph::from_edges((m + 1) * (n + 1), edges);
}

struct LatticePoint {
  std::size_t x;
  std::size_t y;
};

inline LatticePoint lattice_coordinates(std::size_t n, NodeId id) {
  return {id / (n + 1), id % (n + 1)};
}

/// Hypercube Q_k; node id is the integer value of its k-bit label.
inline Graph make_hypercube(unsigned k) {
  if (k < 1 || k > 20) throw Error("hypercube dimension must be in 1..20, got " + std::to_string(k));
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> edges;
  edges.reserve(k * n / 2);
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned bit = 0; bit < k; ++bit) {
      const std::size_t w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(w)});
    }
  }
  return Graph::from_edges(n, edges);
}

/**
 * G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each
 * consumes exactly one draw from @p rng.
 */
inline Graph make_erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (n < 1) throw Error("G(n,p) needs at least one node");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0,1]");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) * 0.55) + 16);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (unit_draw(rng) < p) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

/// G(n, p) drawn from the stream (seed, 0); identical arguments give identical graphs.
inline Graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return make_erdos_renyi(n, p, rng);
}

inline Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  return Graph::from_edges(n, edges);
}

/// Path 0 - 1 - ... - (n-1).
inline Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<NodeId>(v - 1), static_cast<NodeId>(v)});
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw Error("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

/// Star with center 0 and leaves 1..leaves.
inline Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<NodeId>(v)});
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace diffgame
