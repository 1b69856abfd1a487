#include "bpm/graph.hpp"

#include <algorithm>
#include <numeric>

namespace bpm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::DuplicateEdge: return "duplicate_edge";
    case ErrorCode::InvalidMatching: return "invalid_matching";
    case ErrorCode::NotCanonicalPerfect: return "not_canonical_perfect";
    case ErrorCode::EdgeNotAllowed: return "edge_not_allowed";
    case ErrorCode::EdgeAbsent: return "edge_absent";
    case ErrorCode::NotNonAdjacent: return "not_non_adjacent";
    case ErrorCode::NotRegular: return "not_regular";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::NotTileable: return "not_tileable";
    case ErrorCode::InvalidBoard: return "invalid_board";
    case ErrorCode::MalformedBoard: return "malformed_board";
    case ErrorCode::GameOver: return "game_over";
    case ErrorCode::CellOccupied: return "cell_occupied";
    case ErrorCode::OffBoard: return "off_board";
    case ErrorCode::NotAdjacent: return "not_adjacent";
    case ErrorCode::Parse: return "parse_error";
  }
  return "unknown";
}

std::string_view to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::NotAllowed: return "not_allowed";
    case EdgeLabel::AllowedLower: return "lower";
    case EdgeLabel::AllowedTypeI: return "type1";
    case EdgeLabel::AllowedTypeII: return "type2";
  }
  return "unknown";
}

namespace {

// Bucket edges by `key` into CSR rows, keeping the order in which `order`
// lists them. Returns the permutation of edge ids in row-major order.
std::vector<Index> bucket(Index rows, const std::vector<Edge>& edges, const std::vector<Index>& order,
                          bool by_left, std::vector<Index>& offsets) {
  offsets.assign(static_cast<std::size_t>(rows) + 1, 0);
  for (const auto& e : edges) ++offsets[static_cast<std::size_t>(by_left ? e.left : e.right) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<Index> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<Index> out(edges.size());
  for (Index id : order) {
    const auto& e = edges[static_cast<std::size_t>(id)];
    out[static_cast<std::size_t>(cursor[static_cast<std::size_t>(by_left ? e.left : e.right)]++)] = id;
  }
  return out;
}

}  // namespace

BipartiteGraph build_graph(Index n1, Index n2, std::vector<Edge> edges) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::IndexOutOfRange, "negative part size");
  for (const auto& e : edges) {
    if (e.left < 0 || e.left >= n1 || e.right < 0 || e.right >= n2) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(e.left + 1) + "," +
                                                  std::to_string(e.right + 1) + ") outside " +
                                                  std::to_string(n1) + "x" + std::to_string(n2));
    }
  }

  BipartiteGraph g;
  g.n1_ = n1;
  g.n2_ = n2;

  std::vector<Index> identity(edges.size());
  std::iota(identity.begin(), identity.end(), 0);

  // Two stable counting passes: by right, then by left, gives each left row
  // sorted by right index (and vice versa).
  std::vector<Index> scratch;
  const auto by_right = bucket(n2, edges, identity, false, scratch);
  g.left_ids_ = bucket(n1, edges, by_right, true, g.left_offsets_);
  const auto by_left = bucket(n1, edges, identity, true, scratch);
  g.right_ids_ = bucket(n2, edges, by_left, false, g.right_offsets_);

  g.left_targets_.resize(edges.size());
  g.right_targets_.resize(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    g.left_targets_[k] = edges[static_cast<std::size_t>(g.left_ids_[k])].right;
    g.right_targets_[k] = edges[static_cast<std::size_t>(g.right_ids_[k])].left;
  }

  for (Index l = 0; l < n1; ++l) {
    const auto row = g.right_neighbors(l);
    const auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(l + 1) + "," + std::to_string(*dup + 1) + ")");
    }
  }

  g.edges_ = std::move(edges);
  return g;
}

Index BipartiteGraph::find_edge(Index left, Index right) const {
  if (left < 0 || left >= n1_ || right < 0 || right >= n2_) return kNone;
  const auto row = right_neighbors(left);
  const auto it = std::lower_bound(row.begin(), row.end(), right);
  if (it == row.end() || *it != right) return kNone;
  return left_edge_ids(left)[static_cast<std::size_t>(it - row.begin())];
}

Matching::Matching(Index n1, Index n2, std::vector<Edge> pairs)
    : pairs_(std::move(pairs)),
      left_partner_(static_cast<std::size_t>(std::max<Index>(n1, 0)), kNone),
      right_partner_(static_cast<std::size_t>(std::max<Index>(n2, 0)), kNone) {
  for (const auto& p : pairs_) {
    if (p.left < 0 || p.left >= n1 || p.right < 0 || p.right >= n2) {
      well_formed_ = false;
      continue;
    }
    auto& lp = left_partner_[static_cast<std::size_t>(p.left)];
    auto& rp = right_partner_[static_cast<std::size_t>(p.right)];
    if (lp != kNone || rp != kNone) well_formed_ = false;
    lp = p.right;
    rp = p.left;
  }
}

bool verify_matching(const BipartiteGraph& g, const Matching& m) {
  if (!m.well_formed()) return false;
  if (m.left_count() != g.left_count() || m.right_count() != g.right_count()) return false;
  return std::all_of(m.pairs().begin(), m.pairs().end(),
                     [&](const Edge& p) { return g.has_edge(p.left, p.right); });
}

Matching CanonicalView::to_canonical(const Matching& m) const {
  std::vector<Edge> pairs;
  pairs.reserve(m.pairs().size());
  for (const auto& p : m.pairs()) pairs.push_back(to_canonical(p));
  return Matching(m.left_count(), m.right_count(), std::move(pairs));
}

Matching CanonicalView::to_original(const Matching& m) const {
  std::vector<Edge> pairs;
  pairs.reserve(m.pairs().size());
  for (const auto& p : m.pairs()) pairs.push_back(to_original(p));
  return Matching(m.left_count(), m.right_count(), std::move(pairs));
}

CanonicalView canonical_labels(const BipartiteGraph& g, const Matching& m) {
  if (!verify_matching(g, m)) throw Error(ErrorCode::InvalidMatching, "not a matching of the graph");

  const Index n1 = g.left_count();
  const Index n2 = g.right_count();
  CanonicalView view;
  view.t = m.size();
  view.left_perm.assign(static_cast<std::size_t>(n1), kNone);
  view.right_perm.assign(static_cast<std::size_t>(n2), kNone);
  view.left_inv.reserve(static_cast<std::size_t>(n1));
  view.right_inv.reserve(static_cast<std::size_t>(n2));

  Index next = 0;
  for (Index l = 0; l < n1; ++l) {
    const Index r = m.left_partner(l);
    if (r == kNone) continue;
    view.left_perm[static_cast<std::size_t>(l)] = next;
    view.right_perm[static_cast<std::size_t>(r)] = next;
    view.left_inv.push_back(l);
    view.right_inv.push_back(r);
    ++next;
  }
  for (Index l = 0; l < n1; ++l) {
    if (view.left_perm[static_cast<std::size_t>(l)] != kNone) continue;
    view.left_perm[static_cast<std::size_t>(l)] = static_cast<Index>(view.left_inv.size());
    view.left_inv.push_back(l);
  }
  for (Index r = 0; r < n2; ++r) {
    if (view.right_perm[static_cast<std::size_t>(r)] != kNone) continue;
    view.right_perm[static_cast<std::size_t>(r)] = static_cast<Index>(view.right_inv.size());
    view.right_inv.push_back(r);
  }
  return view;
}

std::pair<BipartiteGraph, CanonicalView> canonicalize(const BipartiteGraph& g, const Matching& m) {
  CanonicalView view = canonical_labels(g, m);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back(view.to_canonical(e));
  return {build_graph(g.left_count(), g.right_count(), std::move(edges)), std::move(view)};
}

Index EdgeClassification::allowed_count() const {
  return static_cast<Index>(std::count_if(labels.begin(), labels.end(), is_allowed));
}

std::vector<bool> EdgeClassification::allowed_mask() const {
  std::vector<bool> mask(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) mask[i] = is_allowed(labels[i]);
  return mask;
}

}  // namespace bpm
