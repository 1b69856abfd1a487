#pragma once

#include <vector>

#include "bpm/graph.hpp"

namespace bpm::oracle {

// Exponential ground truth for small graphs. Every entry point throws
// Error{TooLarge} when n1 + n2 exceeds `cap`.
inline constexpr Index kDefaultCap = 16;

// Exact maximum matching size by backtracking over left nodes.
Index brute_force_max_matching(const BipartiteGraph& g, Index cap = kDefaultCap);

// Edges e such that removing e's endpoints lowers the maximum by exactly one,
// i.e. e lies in some maximum matching. Returned in edge order.
std::vector<Edge> brute_force_allowed(const BipartiteGraph& g, Index cap = kDefaultCap);

// Every maximum matching, each exactly once, pairs ordered by left index.
std::vector<Matching> enumerate_maximum_matchings(const BipartiteGraph& g, Index cap = kDefaultCap);

}  // namespace bpm::oracle
