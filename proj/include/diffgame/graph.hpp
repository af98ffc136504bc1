#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffgame/error.hpp"

namespace diffgame {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Immutable simple undirected graph on nodes 0..n-1.
 *
 * Stored in compressed sparse row form. Every neighbor list is sorted strictly
 * ascending and the adjacency relation is symmetric; self-loops and parallel
 * edges are rejected at construction.
 */
class Graph {
 public:
  Graph() = default;

  /// Graph with @p n nodes and no edges.
  explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

  /**
   * Builds a graph from an edge list. Endpoint order within an edge is
   * irrelevant. Throws Error on an out-of-range endpoint, a self-loop or a
   * repeated edge.
   */
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(2 * edges.size());
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (e.u == e.v) {
        throw Error("self-loop on node " + std::to_string(e.u));
      }
      arcs.emplace_back(e.u, e.v);
      arcs.emplace_back(e.v, e.u);
    }
    std::sort(arcs.begin(), arcs.end());
    if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end()) {
      const auto [a, b] = std::minmax(dup->first, dup->second);
      throw Error("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    Graph g(n);
    g.targets_.reserve(arcs.size());
    for (const auto& [from, to] : arcs) {
      ++g.offsets_[from + 1];
      g.targets_.push_back(to);
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const noexcept {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool contains(NodeId v) const noexcept { return v < node_count(); }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
      for (NodeId v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Throws unless v names a node of g.
inline void require_node(const Graph& g, NodeId v, const char* what = "node") {
  if (!g.contains(v)) {
    throw Error(std::string(what) + " " + std::to_string(v) + " out of range (graph has " +
                std::to_string(g.node_count()) + " nodes)");
  }
}

}  // namespace diffgame
