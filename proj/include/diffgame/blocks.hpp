#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "diffgame/graph.hpp"

namespace diffgame {

/**
 * Block (biconnected component) decomposition. Blocks partition the edge set;
 * two blocks share at most one node and every shared node is a cut vertex.
 * Isolated nodes form singleton blocks. Disconnected graphs are decomposed
 * component by component.
 */
struct BlockDecomposition {
  std::vector<std::vector<NodeId>> blocks;  // each sorted; list sorted
  std::vector<NodeId> cut_vertices;         // sorted
  std::vector<std::vector<std::size_t>> blocks_of_node;

  bool share_block(NodeId u, NodeId v) const {
    const auto& a = blocks_of_node[u];
    const auto& b = blocks_of_node[v];
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return true;
      if (*i < *j) ++i; else ++j;
    }
    return false;
  }

  bool is_cut_vertex(NodeId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
};

// Iterative Hopcroft-Tarjan with an edge stack.
inline BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kNone);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<NodeId>> found;

  struct Frame {
    NodeId node;
    NodeId parent;
    std::size_t next;  // index into neighbor list
    std::size_t children;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      found.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nb = g.neighbors(f.node);
      if (f.next < nb.size()) {
        const NodeId w = nb[f.next++];
        if (disc[w] == kNone) {
          ++f.children;
          edge_stack.push_back({f.node, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.node, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.node]) {
          edge_stack.push_back({f.node, w});
          low[f.node] = std::min(low[f.node], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.node] = 1;
        break;
      }
      Frame& parent = stack.back();
      low[parent.node] = std::min(low[parent.node], low[done.node]);
      if (low[done.node] >= disc[parent.node]) {
        if (parent.node != root) is_cut[parent.node] = 1;
        std::vector<NodeId> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == parent.node && e.v == done.node) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        found.push_back(std::move(block));
      }
    }
  }

  std::sort(found.begin(), found.end());
  BlockDecomposition out;
  out.blocks = std::move(found);
  out.blocks_of_node.resize(n);
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (NodeId v : out.blocks[b]) out.blocks_of_node[v].push_back(b);
  for (NodeId v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

}  // namespace diffgame
