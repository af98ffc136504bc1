#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"

namespace diffgame {

/// Sentinel distance for nodes with no path to the source set.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/**
 * Breadth-first distances from a node set: dist(v) = min over sources s of
 * the hop distance d(s, v), or kUnreachable.
 */
class DistanceField {
 public:
  DistanceField() = default;
  DistanceField(std::vector<NodeId> sources, std::vector<std::uint32_t> dist)
      : sources_(std::move(sources)), dist_(std::move(dist)) {}

  std::span<const NodeId> sources() const noexcept { return sources_; }
  std::span<const std::uint32_t> raw() const noexcept { return dist_; }
  std::size_t size() const noexcept { return dist_.size(); }

  bool reachable(NodeId v) const noexcept { return dist_[v] != kUnreachable; }

  std::optional<std::uint32_t> operator[](NodeId v) const noexcept {
    if (dist_[v] == kUnreachable) return std::nullopt;
    return dist_[v];
  }

 private:
  std::vector<NodeId> sources_;
  std::vector<std::uint32_t> dist_;
};

inline DistanceField multi_source_distances(const Graph& g, std::span<const NodeId> sources) {
  if (sources.empty()) throw Error("distance query needs a nonempty source set");
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  for (NodeId s : sources) {
    require_node(g, s, "source");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return DistanceField(std::vector<NodeId>(sources.begin(), sources.end()), std::move(dist));
}

inline DistanceField distances_from(const Graph& g, NodeId source) {
  const NodeId s[] = {source};
  return multi_source_distances(g, s);
}

/**
 * Sphere sizes around x: entry i-1 holds |S_x(i)|, the number of nodes at
 * distance exactly i, for i = 1 .. eccentricity of x within its component.
 */
inline std::vector<std::size_t> sphere_sizes(const Graph& g, NodeId x) {
  require_node(g, x);
  const DistanceField field = distances_from(g, x);
  std::vector<std::size_t> spheres;
  for (std::uint32_t d : field.raw()) {
    if (d == kUnreachable || d == 0) continue;
    if (spheres.size() < d) spheres.resize(d, 0);
    ++spheres[d - 1];
  }
  return spheres;
}

/// Ball sizes |B_x(i)| for i = 0 .. eccentricity, i.e. prefix sums of spheres plus one.
inline std::vector<std::size_t> ball_sizes(std::span<const std::size_t> spheres) {
  std::vector<std::size_t> balls{1};
  for (std::size_t s : spheres) balls.push_back(balls.back() + s);
  return balls;
}

inline std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

inline bool is_connected(const Graph& g) { return g.node_count() <= 1 || component_count(g) == 1; }

/// Largest finite distance from the set; 0 when only the sources are reachable.
inline std::uint32_t eccentricity(const DistanceField& field) {
  std::uint32_t ecc = 0;
  for (std::uint32_t d : field.raw())
    if (d != kUnreachable && d > ecc) ecc = d;
  return ecc;
}

}  // namespace diffgame
