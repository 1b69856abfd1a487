#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "bpm/graph.hpp"

namespace bpm::test {

// Edges written 1-based, as in the graph file format.
inline std::vector<Edge> one_based(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  for (auto [i, j] : pairs) out.push_back({i - 1, j - 1});
  return out;
}

inline BipartiteGraph graph1(Index n1, Index n2, std::initializer_list<std::pair<int, int>> pairs) {
  return build_graph(n1, n2, one_based(pairs));
}

inline Matching matching1(const BipartiteGraph& g, std::initializer_list<std::pair<int, int>> pairs) {
  return Matching(g.left_count(), g.right_count(), one_based(pairs));
}

// The seven-edge example with maximum matching {(1,1),(2,2),(3,3)}.
inline BipartiteGraph seven_edge() {
  return graph1(4, 4, {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 1}, {3, 4}, {4, 1}});
}

inline BipartiteGraph complete(Index n1, Index n2) {
  std::vector<Edge> edges;
  for (Index l = 0; l < n1; ++l)
    for (Index r = 0; r < n2; ++r) edges.push_back({l, r});
  return build_graph(n1, n2, std::move(edges));
}

// Graph on n1 x n2 whose edge set is the bitmask `mask` over the grid, row-major.
inline BipartiteGraph from_mask(Index n1, Index n2, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Index l = 0; l < n1; ++l)
    for (Index r = 0; r < n2; ++r)
      if (mask >> (l * n2 + r) & 1) edges.push_back({l, r});
  return build_graph(n1, n2, std::move(edges));
}

inline std::vector<bool> mask_of(const BipartiteGraph& g, const std::vector<Edge>& edges) {
  std::vector<bool> out(static_cast<std::size_t>(g.edge_count()), false);
  for (const auto& e : edges) out[static_cast<std::size_t>(g.find_edge(e.left, e.right))] = true;
  return out;
}

inline EdgeLabel label_of(const BipartiteGraph& g, const EdgeClassification& c, int i, int j) {
  return c[g.find_edge(i - 1, j - 1)];
}

}  // namespace bpm::test
