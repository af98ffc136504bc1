#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diffgame/error.hpp"
#include "diffgame/graph.hpp"

namespace diffgame {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Whitespace-separated unsigned integers; nullopt on anything else.
inline std::optional<std::vector<std::uint64_t>> parse_uints(std::string_view s) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc{}) return std::nullopt;
    const auto consumed = static_cast<std::size_t>(ptr - (s.data() + i));
    i += consumed;
    if (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') return std::nullopt;
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

/**
 * Reads the edge-list format:
 *
 *   # comment lines start with '#'
 *   n m
 *   u v        (m lines, 0 <= u < v < n)
 *
 * Blank lines are ignored. Errors carry the 1-based line number.
 */
inline Graph from_edge_list(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    last_line = line_no;
    const auto fields = detail::parse_uints(line);
    if (!fields || fields->size() != 2) throw ParseError(line_no, "expected two non-negative integers");

    if (!header) {
      header = std::pair{(*fields)[0], (*fields)[1]};
      if (header->first > std::numeric_limits<NodeId>::max()) throw ParseError(line_no, "node count too large");
      continue;
    }
    const auto [n, m] = *header;
    const std::uint64_t u = (*fields)[0];
    const std::uint64_t v = (*fields)[1];
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
    if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "endpoints must be listed as u < v");
    if (!seen.emplace(static_cast<NodeId>(u), static_cast<NodeId>(v)).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }

  if (!header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != header->second)
    throw ParseError(last_line, "declared " + std::to_string(header->second) + " edges, found " +
                                    std::to_string(edges.size()));
  return Graph::from_edges(header->first, edges);
}

inline std::string to_edge_list(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace diffgame
