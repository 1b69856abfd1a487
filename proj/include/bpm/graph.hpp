#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bpm {

using Index = std::int32_t;
inline constexpr Index kNone = -1;

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateEdge,
  InvalidMatching,
  NotCanonicalPerfect,
  EdgeNotAllowed,
  EdgeAbsent,
  NotNonAdjacent,
  NotRegular,
  TooLarge,
  NotTileable,
  InvalidBoard,
  MalformedBoard,
  GameOver,
  CellOccupied,
  OffBoard,
  NotAdjacent,
  Parse,
};

// snake_case identifier, also used as the machine-readable reason in the HTTP API.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// An edge between left node `left` and right node `right` (0-based).
struct Edge {
  Index left = 0;
  Index right = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable two-part graph. Edges keep their input order; both adjacency
// directions are stored in CSR form, neighbors sorted ascending, each entry
// carrying the index of the originating edge.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  Index left_count() const noexcept { return n1_; }
  Index right_count() const noexcept { return n2_; }
  Index node_count() const noexcept { return n1_ + n2_; }
  Index edge_count() const noexcept { return static_cast<Index>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(Index id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const Index> right_neighbors(Index left) const { return slice(left_offsets_, left_targets_, left); }
  std::span<const Index> left_edge_ids(Index left) const { return slice(left_offsets_, left_ids_, left); }
  std::span<const Index> left_neighbors(Index right) const { return slice(right_offsets_, right_targets_, right); }
  std::span<const Index> right_edge_ids(Index right) const { return slice(right_offsets_, right_ids_, right); }

  // Raw CSR of the left side: row l of right_neighbors is
  // left_targets()[left_offsets()[l] .. left_offsets()[l + 1]), edge ids alike in left_ids().
  std::span<const Index> left_offsets() const noexcept { return left_offsets_; }
  std::span<const Index> left_targets() const noexcept { return left_targets_; }
  std::span<const Index> left_ids() const noexcept { return left_ids_; }

  Index left_degree(Index left) const { return static_cast<Index>(right_neighbors(left).size()); }
  Index right_degree(Index right) const { return static_cast<Index>(left_neighbors(right).size()); }

  // Edge index of (left, right), or kNone. O(log degree).
  Index find_edge(Index left, Index right) const;
  bool has_edge(Index left, Index right) const { return find_edge(left, right) != kNone; }

 private:
  friend BipartiteGraph build_graph(Index n1, Index n2, std::vector<Edge> edges);

  static std::span<const Index> slice(const std::vector<Index>& offsets, const std::vector<Index>& data, Index node) {
    const auto b = static_cast<std::size_t>(offsets[static_cast<std::size_t>(node)]);
    const auto e = static_cast<std::size_t>(offsets[static_cast<std::size_t>(node) + 1]);
    return std::span<const Index>(data).subspan(b, e - b);
  }

  Index n1_ = 0;
  Index n2_ = 0;
  std::vector<Edge> edges_;
  std::vector<Index> left_offsets_{0};
  std::vector<Index> left_targets_;
  std::vector<Index> left_ids_;
  std::vector<Index> right_offsets_{0};
  std::vector<Index> right_targets_;
  std::vector<Index> right_ids_;
};

// Validates and indexes an edge list in O(n + m).
// Throws Error{IndexOutOfRange} or Error{DuplicateEdge}.
BipartiteGraph build_graph(Index n1, Index n2, std::vector<Edge> edges);

// A set of edges together with partner lookups for both sides. Construction
// never throws; a pair list that reuses a node (or leaves the index range)
// produces a matching that fails verify_matching.
class Matching {
 public:
  Matching() = default;
  Matching(Index n1, Index n2, std::vector<Edge> pairs);

  static Matching empty(Index n1, Index n2) { return Matching(n1, n2, {}); }

  const std::vector<Edge>& pairs() const noexcept { return pairs_; }
  Index size() const noexcept { return static_cast<Index>(pairs_.size()); }
  Index left_count() const noexcept { return static_cast<Index>(left_partner_.size()); }
  Index right_count() const noexcept { return static_cast<Index>(right_partner_.size()); }

  Index left_partner(Index left) const { return left_partner_[static_cast<std::size_t>(left)]; }
  Index right_partner(Index right) const { return right_partner_[static_cast<std::size_t>(right)]; }
  bool left_covered(Index left) const { return left_partner(left) != kNone; }
  bool right_covered(Index right) const { return right_partner(right) != kNone; }

  // Pairs in range and node-disjoint; says nothing about a host graph.
  bool well_formed() const noexcept { return well_formed_; }

  bool contains(const Edge& e) const {
    return e.left >= 0 && e.left < left_count() && left_partner(e.left) == e.right;
  }

 private:
  std::vector<Edge> pairs_;
  std::vector<Index> left_partner_;
  std::vector<Index> right_partner_;
  bool well_formed_ = true;
};

// True iff every pair is an edge of g and no node is used twice.
bool verify_matching(const BipartiteGraph& g, const Matching& m);

// Relabeling that moves the k-th matched pair (ordered by left index) to
// (k, k); uncovered nodes follow in ascending original order.
struct CanonicalView {
  std::vector<Index> left_perm;   // original -> canonical
  std::vector<Index> right_perm;
  std::vector<Index> left_inv;    // canonical -> original
  std::vector<Index> right_inv;
  Index t = 0;

  Edge to_canonical(const Edge& e) const {
    return {left_perm[static_cast<std::size_t>(e.left)], right_perm[static_cast<std::size_t>(e.right)]};
  }
  Edge to_original(const Edge& e) const {
    return {left_inv[static_cast<std::size_t>(e.left)], right_inv[static_cast<std::size_t>(e.right)]};
  }
  Matching to_canonical(const Matching& m) const;
  Matching to_original(const Matching& m) const;
};

// The relabeling alone, O(n). Throws Error{InvalidMatching} if m is not a
// matching of g.
CanonicalView canonical_labels(const BipartiteGraph& g, const Matching& m);

// Returns the relabeled graph (edge indices preserved) and the view.
// Throws Error{InvalidMatching} if m is not a matching of g.
std::pair<BipartiteGraph, CanonicalView> canonicalize(const BipartiteGraph& g, const Matching& m);

enum class EdgeLabel : std::uint8_t { NotAllowed, AllowedLower, AllowedTypeI, AllowedTypeII };

std::string_view to_string(EdgeLabel label);

inline bool is_allowed(EdgeLabel label) { return label != EdgeLabel::NotAllowed; }

// Per-edge labels, parallel to the graph's edge list.
struct EdgeClassification {
  std::vector<EdgeLabel> labels;

  std::size_t size() const noexcept { return labels.size(); }
  EdgeLabel operator[](Index edge) const { return labels[static_cast<std::size_t>(edge)]; }
  bool allowed(Index edge) const { return is_allowed((*this)[edge]); }
  Index allowed_count() const;
  std::vector<bool> allowed_mask() const;
};

}  // namespace bpm
