#include "bpm/scc.hpp"

#include <algorithm>
#include <numeric>

#include "tarjan.hpp"

namespace bpm {

DirectedView::DirectedView(Index nodes, Orientation orientation, std::span<const Arc> arcs)
    : orientation_(orientation) {
  offsets_.assign(static_cast<std::size_t>(nodes) + 1, 0);
  for (const auto& a : arcs) ++offsets_[static_cast<std::size_t>(a.tail) + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  heads_.resize(arcs.size());
  edge_ids_.resize(arcs.size());
  std::vector<Index> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& a : arcs) {
    const auto slot = static_cast<std::size_t>(cursor[static_cast<std::size_t>(a.tail)]++);
    heads_[slot] = a.head;
    edge_ids_[slot] = a.edge;
  }
}

// Rows are visited in relabeled order; `row_of` maps a view node to the
// graph row feeding it (kNone for padding) and `head_of` relabels a neighbor.
template <class RowOf, class HeadOf>
DirectedView DirectedView::build(const BipartiteGraph& g, Orientation orientation, Index t, RowOf row_of, HeadOf head_of) {
  DirectedView view;
  const Index wide = std::max(g.left_count(), g.right_count());
  const Index nodes = orientation == Orientation::H ? t : wide;
  const bool from_right = orientation == Orientation::HRL;
  view.offsets_.assign(static_cast<std::size_t>(nodes) + 1, 0);
  view.orientation_ = orientation;
  view.heads_.reserve(static_cast<std::size_t>(g.edge_count()));
  view.edge_ids_.reserve(static_cast<std::size_t>(g.edge_count()));

  for (Index u = 0; u < nodes; ++u) {
    const Index row = row_of(u);
    if (row != kNone) {
      const auto heads = from_right ? g.left_neighbors(row) : g.right_neighbors(row);
      const auto ids = from_right ? g.right_edge_ids(row) : g.left_edge_ids(row);
      for (std::size_t k = 0; k < heads.size(); ++k) {
        const Index head = head_of(heads[k]);
        if (orientation == Orientation::H && (head >= t || head == u)) continue;
        view.heads_.push_back(head);
        view.edge_ids_.push_back(ids[k]);
      }
    }
    view.offsets_[static_cast<std::size_t>(u) + 1] = static_cast<Index>(view.heads_.size());
  }
  return view;
}

DirectedView make_view(const BipartiteGraph& g, Orientation orientation, Index t) {
  const Index rows = orientation == Orientation::HRL ? g.right_count() : g.left_count();
  return DirectedView::build(
      g, orientation, t, [rows](Index u) { return u < rows ? u : kNone; }, [](Index x) { return x; });
}

DirectedView make_view(const BipartiteGraph& g, const CanonicalView& labels, Orientation orientation) {
  const bool from_right = orientation == Orientation::HRL;
  const auto& rows = from_right ? labels.right_inv : labels.left_inv;
  const auto& heads = from_right ? labels.left_perm : labels.right_perm;
  return DirectedView::build(
      g, orientation, labels.t,
      [&rows](Index u) { return u < static_cast<Index>(rows.size()) ? rows[static_cast<std::size_t>(u)] : kNone; },
      [&heads](Index x) { return heads[static_cast<std::size_t>(x)]; });
}

SccLabeling tarjan_scc(const DirectedView& h) {
  const auto offsets = h.offsets();
  return detail::tarjan(
      h.node_count(), h.heads().data(),
      [offsets](Index v) {
        return std::pair{offsets[static_cast<std::size_t>(v)], offsets[static_cast<std::size_t>(v) + 1]};
      },
      [](Index w) { return w; });
}

}  // namespace bpm
