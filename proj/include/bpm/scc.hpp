#pragma once

#include <span>
#include <vector>

#include "bpm/graph.hpp"

namespace bpm {

// Which single-sided projection of a canonical bipartite graph a view holds.
//   H    nodes [0, t); i -> j iff i != j and (v_i, v'_j) in E, both < t.
//   HLR  nodes [0, max(n1, n2)); i -> j iff (v_i, v'_j) in E.
//   HRL  nodes [0, max(n1, n2)); i -> j iff (v_j, v'_i) in E.
enum class Orientation { H, HLR, HRL };

// Directed graph in CSR form. Every arc remembers the bipartite edge it came from.
class DirectedView {
 public:
  DirectedView() = default;

  // Arcs given as (tail, head, bipartite edge id); any order.
  struct Arc {
    Index tail;
    Index head;
    Index edge;
  };
  DirectedView(Index nodes, Orientation orientation, std::span<const Arc> arcs);

  Index node_count() const noexcept { return static_cast<Index>(offsets_.size()) - 1; }
  Index arc_count() const noexcept { return static_cast<Index>(heads_.size()); }
  Orientation orientation() const noexcept { return orientation_; }

  std::span<const Index> successors(Index node) const {
    return std::span<const Index>(heads_).subspan(begin(node), end(node) - begin(node));
  }
  // Raw CSR: successors of u are heads()[offsets()[u] .. offsets()[u + 1]).
  std::span<const Index> offsets() const noexcept { return offsets_; }
  std::span<const Index> heads() const noexcept { return heads_; }

  std::span<const Index> arc_edges(Index node) const {
    return std::span<const Index>(edge_ids_).subspan(begin(node), end(node) - begin(node));
  }

 private:
  friend DirectedView make_view(const BipartiteGraph&, Orientation, Index);
  friend DirectedView make_view(const BipartiteGraph&, const CanonicalView&, Orientation);
  template <class RowOf, class HeadOf>
  static DirectedView build(const BipartiteGraph& g, Orientation orientation, Index t, RowOf row_of, HeadOf head_of);

  std::size_t begin(Index node) const { return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(node)]); }
  std::size_t end(Index node) const { return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(node) + 1]); }

  Orientation orientation_ = Orientation::H;
  std::vector<Index> offsets_{0};
  std::vector<Index> heads_;
  std::vector<Index> edge_ids_;
};

// Builds one projection of a graph already in canonical form with matching
// size t. O(n + m), reads the graph's adjacency directly.
DirectedView make_view(const BipartiteGraph& canonical, Orientation orientation, Index t);

// Same projection of g in the canonical labels given by `labels`, without
// materializing the relabeled graph. Successor lists are not sorted.
DirectedView make_view(const BipartiteGraph& g, const CanonicalView& labels, Orientation orientation);

struct SccLabeling {
  std::vector<Index> component;  // per node
  Index count = 0;
};

// Tarjan's algorithm with an explicit work stack; component ids are assigned
// in completion order (a reverse topological order of the condensation).
SccLabeling tarjan_scc(const DirectedView& h);

}  // namespace bpm
