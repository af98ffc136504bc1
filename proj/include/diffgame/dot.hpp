#pragma once

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "diffgame/diffusion.hpp"
#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"

namespace diffgame {

inline std::string player_color(PlayerId p) {
  static constexpr std::array<const char*, 8> palette{"red", "blue", "green3", "orange", "purple", "cyan3", "gold", "brown"};
  return palette[p % palette.size()];
}

/// Undirected DOT graph; with states, nodes are filled by owner (gray, or white when unreached).
inline std::string to_dot(const Graph& g, std::optional<std::span<const NodeState>> states = std::nullopt) {
  if (states && states->size() != g.node_count()) throw Error("state vector does not match the graph");
  std::ostringstream out;
  out << "graph G {\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  " << v;
    if (states) {
      const NodeState s = (*states)[v];
      const std::string color = s.is_adopted() ? player_color(s.player()) : s.is_gray() ? "gray" : "white";
      out << " [style=filled, fillcolor=" << color << ", label=\"" << v << ":" << s.to_string() << "\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace diffgame
