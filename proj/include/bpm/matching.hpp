#pragma once

#include <vector>

#include "bpm/graph.hpp"

namespace bpm {

// Scans left nodes in order and takes the first free right neighbor.
// The result is maximal, not necessarily maximum.
Matching greedy_maximal(const BipartiteGraph& g);

// Maximum-cardinality matching. Phases of layered BFS from the free left
// nodes followed by shortest-path augmentation; O(sqrt(n) * m).
// Neighbors are scanned in ascending order, so the output is deterministic.
Matching hopcroft_karp(const BipartiteGraph& g);

// One alternating BFS from all uncovered left nodes. Returns the augmenting
// path as its edge sequence (odd positions are matched edges), or an empty
// vector if m is already maximum. Precondition: verify_matching(g, m).
std::vector<Edge> find_augmenting_path(const BipartiteGraph& g, const Matching& m);

inline bool is_maximum(const BipartiteGraph& g, const Matching& m) { return find_augmenting_path(g, m).empty(); }

}  // namespace bpm
