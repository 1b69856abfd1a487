#pragma once

#include <optional>
#include <vector>

#include "bpm/allowed.hpp"

namespace bpm {

// A graph that shrinks as allowed edges "materialize": each removal deletes
// both endpoints and every incident edge, derives a maximum matching of the
// smaller graph without rerunning Hopcroft-Karp, and reclassifies.
//
// Nodes and edges are renumbered densely after each removal; the origin maps
// relate them to the graph the state was created from.
class DynamicState {
 public:
  // Runs Hopcroft-Karp to obtain the starting matching.
  explicit DynamicState(BipartiteGraph g);
  // m must be a maximum matching of g (trusted, like classify_general).
  DynamicState(BipartiteGraph g, Matching m);

  const BipartiteGraph& graph() const noexcept { return graph_; }
  const Matching& matching() const noexcept { return matching_; }
  const Analysis& analysis() const noexcept { return analysis_; }
  const EdgeClassification& classification() const noexcept { return analysis_.labels; }

  Index left_origin(Index left) const { return left_origin_[static_cast<std::size_t>(left)]; }
  Index right_origin(Index right) const { return right_origin_[static_cast<std::size_t>(right)]; }
  Index edge_origin(Index edge) const { return edge_origin_[static_cast<std::size_t>(edge)]; }

  // Current edge id of the edge between two original nodes, or kNone if
  // either node has been removed or they are not adjacent.
  Index find_edge_by_origin(Index left, Index right) const;

 private:
  friend DynamicState remove_allowed_edge(const DynamicState& s, const Edge& e);
  DynamicState() = default;
  void rebuild_index(Index original_n1, Index original_n2);

  BipartiteGraph graph_;
  Matching matching_;
  Analysis analysis_;
  std::vector<Index> left_origin_;
  std::vector<Index> right_origin_;
  std::vector<Index> edge_origin_;
  std::vector<Index> left_current_;   // original -> current, kNone once removed
  std::vector<Index> right_current_;
};

// Removes the endpoints of allowed edge e (current labels) and returns the
// reduced state. The new matching has size t - 1 and is maximum:
//  - type I matched edge: drop its pair;
//  - type I unmatched edge: rotate M along an alternating cycle through e;
//  - type II edge: switch to the augmented-path matching M0 containing e;
//  - lower edge: drop the pair of its covered endpoint.
// Throws Error{EdgeAbsent} or Error{EdgeNotAllowed}.
DynamicState remove_allowed_edge(const DynamicState& s, const Edge& e);

// Size of the maximum matching after removing e, i.e. t - 1. Same errors.
Index max_matching_after_removal_size(const DynamicState& s, const Edge& e);

// An alternating path in canonical labels: `edges` alternate away from the
// matching, the last (or first) one touching an uncovered node; `indices` are
// the distinct matched pair indices the path passes through.
struct AugmentedPath {
  bool right_augmented = true;
  std::vector<Edge> edges;
  std::vector<Index> indices;
};

// For a type II edge with canonical endpoints (i, j): searches HLR forward
// from j for an uncovered right node, else HRL from i for an uncovered left
// node. Returns nullopt if neither search succeeds (the edge is not type II).
std::optional<AugmentedPath> find_type_two_path(const Analysis& a, const Edge& canonical_edge);

// P together with the matched pairs (x, x), x < t, that P does not touch.
// Size t whenever P is a left- or right-augmented path.
Matching reconstruct_matching_from_path(const Analysis& a, const AugmentedPath& path);

}  // namespace bpm
