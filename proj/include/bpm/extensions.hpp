#pragma once

#include <optional>
#include <vector>

#include "bpm/graph.hpp"

namespace bpm {

struct Extension {
  Matching matching;  // P plus every pair of M that P does not touch
  Index k = 0;        // |P|
  Index t = 0;        // |M|
  Index touched = 0;  // |A u A'|: matched pair indices hit by an endpoint of P
  Index kept = 0;     // |B| = t - touched

  // k + t - |A u A'|; the construction meets it exactly.
  Index bound() const noexcept { return k + t - touched; }
};

// Extends the non-adjacent edge set p with the pairs of the maximum matching
// m whose endpoints p leaves free. Result size k + |B| >= t - k.
// Throws Error{InvalidMatching} if m is not a matching of g,
// Error{EdgeAbsent} if some edge of p is not in g, Error{NotNonAdjacent} if
// two edges of p share a node.
Extension extend_partial_matching(const BipartiteGraph& g, const Matching& m, const std::vector<Edge>& p);

// Common degree of every node (0 for a graph with no nodes), or nullopt.
std::optional<Index> is_regular(const BipartiteGraph& g);

// Splits a d-regular graph into d edge-disjoint perfect matchings by
// repeatedly running Hopcroft-Karp on the residual graph.
// Throws Error{NotRegular} naming the first node whose degree differs from d.
std::vector<Matching> decompose_regular(const BipartiteGraph& g, Index d);

}  // namespace bpm
