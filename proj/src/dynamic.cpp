#include "bpm/dynamic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bpm/matching.hpp"

namespace bpm {

namespace {

std::vector<Index> iota_vector(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.left + 1) + "," + std::to_string(e.right + 1) + ")";
}

Index locate_allowed(const DynamicState& s, const Edge& e) {
  const Index id = s.graph().find_edge(e.left, e.right);
  if (id == kNone) throw Error(ErrorCode::EdgeAbsent, "edge " + edge_text(e) + " is not in the graph");
  if (!s.classification().allowed(id)) {
    throw Error(ErrorCode::EdgeNotAllowed, "edge " + edge_text(e) + " is not in any maximum matching");
  }
  return id;
}

// Walks parent arcs back from `last` to the BFS root.
std::vector<Index> unwind(const std::vector<Index>& parent, Index last) {
  std::vector<Index> nodes;
  for (Index x = last; x != kNone; x = parent[static_cast<std::size_t>(x)]) nodes.push_back(x);
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

// Rotates the canonical matching along the cycle closed by the unmatched
// type I edge (i, j): a path j -> ... -> i in H inside their SCC.
std::vector<Edge> rotate_along_cycle(const Analysis& a, Index i, Index j) {
  const Index comp = a.scc.component[static_cast<std::size_t>(i)];
  std::vector<Index> parent(static_cast<std::size_t>(a.t()), kNone);
  std::vector<char> seen(static_cast<std::size_t>(a.t()), 0);
  std::vector<Index> queue{j};
  seen[static_cast<std::size_t>(j)] = 1;
  for (std::size_t head = 0; head < queue.size() && !seen[static_cast<std::size_t>(i)]; ++head) {
    const Index x = queue[head];
    for (Index y : a.h.successors(x)) {
      const auto uy = static_cast<std::size_t>(y);
      if (seen[uy] || a.scc.component[uy] != comp) continue;
      seen[uy] = 1;
      parent[uy] = x;
      queue.push_back(y);
    }
  }
  const auto cycle = unwind(parent, i);  // j, ..., i

  std::vector<char> on_cycle(static_cast<std::size_t>(a.t()), 0);
  for (Index x : cycle) on_cycle[static_cast<std::size_t>(x)] = 1;
  std::vector<Edge> pairs;
  for (std::size_t k = 0; k + 1 < cycle.size(); ++k) pairs.push_back({cycle[k], cycle[k + 1]});
  for (Index x = 0; x < a.t(); ++x) {
    if (!on_cycle[static_cast<std::size_t>(x)]) pairs.push_back({x, x});
  }
  return pairs;
}

}  // namespace

DynamicState::DynamicState(BipartiteGraph g) : DynamicState() {
  Matching m = hopcroft_karp(g);
  *this = DynamicState(std::move(g), std::move(m));
}

DynamicState::DynamicState(BipartiteGraph g, Matching m) {
  analysis_ = analyze(g, m);
  left_origin_ = iota_vector(g.left_count());
  right_origin_ = iota_vector(g.right_count());
  edge_origin_ = iota_vector(g.edge_count());
  graph_ = std::move(g);
  matching_ = std::move(m);
  rebuild_index(graph_.left_count(), graph_.right_count());
}

void DynamicState::rebuild_index(Index original_n1, Index original_n2) {
  left_current_.assign(static_cast<std::size_t>(original_n1), kNone);
  right_current_.assign(static_cast<std::size_t>(original_n2), kNone);
  for (Index l = 0; l < graph_.left_count(); ++l) left_current_[static_cast<std::size_t>(left_origin(l))] = l;
  for (Index r = 0; r < graph_.right_count(); ++r) right_current_[static_cast<std::size_t>(right_origin(r))] = r;
}

Index DynamicState::find_edge_by_origin(Index left, Index right) const {
  if (left < 0 || right < 0 || left >= static_cast<Index>(left_current_.size()) ||
      right >= static_cast<Index>(right_current_.size())) {
    return kNone;
  }
  const Index l = left_current_[static_cast<std::size_t>(left)];
  const Index r = right_current_[static_cast<std::size_t>(right)];
  if (l == kNone || r == kNone) return kNone;
  return graph_.find_edge(l, r);
}

std::optional<AugmentedPath> find_type_two_path(const Analysis& a, const Edge& ce) {
  const Index t = a.t();
  const Index wide = a.hlr.node_count();
  const Index i = ce.left;
  const Index j = ce.right;
  std::vector<Index> parent(static_cast<std::size_t>(wide), kNone);
  std::vector<char> seen(static_cast<std::size_t>(wide), 0);
  std::vector<Index> queue;

  // BFS over matched nodes from `start`; returns (last matched node, uncovered head).
  auto search = [&](const DirectedView& view, Index start) -> std::optional<std::pair<Index, Index>> {
    std::fill(parent.begin(), parent.end(), kNone);
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(1, start);
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (Index y : view.successors(x)) {
        if (y >= t) return std::pair{x, y};
        const auto uy = static_cast<std::size_t>(y);
        if (seen[uy]) continue;
        seen[uy] = 1;
        parent[uy] = x;
        queue.push_back(y);
      }
    }
    return std::nullopt;
  };

  if (auto hit = search(a.hlr, j)) {
    // (v_i, v'_j), (v_j, v'_x1), ..., (v_xl, v'_y) with y uncovered.
    AugmentedPath p;
    p.right_augmented = true;
    const auto nodes = unwind(parent, hit->first);
    p.indices.push_back(i);
    p.indices.insert(p.indices.end(), nodes.begin(), nodes.end());
    p.edges.push_back(ce);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) p.edges.push_back({nodes[k], nodes[k + 1]});
    p.edges.push_back({hit->first, hit->second});
    return p;
  }
  if (auto hit = search(a.hrl, i)) {
    // (v_y, v'_xl), ..., (v_x1, v'_i), (v_i, v'_j) with y uncovered.
    AugmentedPath p;
    p.right_augmented = false;
    const auto nodes = unwind(parent, hit->first);  // i, x1, ..., xl
    p.edges.push_back({hit->second, hit->first});
    for (std::size_t k = nodes.size() - 1; k > 0; --k) p.edges.push_back({nodes[k], nodes[k - 1]});
    p.edges.push_back(ce);
    p.indices.assign(nodes.rbegin(), nodes.rend());
    p.indices.push_back(j);
    return p;
  }
  return std::nullopt;
}

Matching reconstruct_matching_from_path(const Analysis& a, const AugmentedPath& path) {
  std::vector<char> used(static_cast<std::size_t>(a.t()), 0);
  for (Index x : path.indices) {
    if (x < a.t()) used[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<Edge> pairs = path.edges;
  for (Index x = 0; x < a.t(); ++x) {
    if (!used[static_cast<std::size_t>(x)]) pairs.push_back({x, x});
  }
  return Matching(a.left_count(), a.right_count(), std::move(pairs));
}

DynamicState remove_allowed_edge(const DynamicState& s, const Edge& e) {
  const Index id = locate_allowed(s, e);
  const Analysis& a = s.analysis();
  const Edge ce = a.view.to_canonical(s.graph().edge(id));

  // Maximum matching of G (canonical labels) that contains e.
  std::vector<Edge> with_e;
  switch (a.labels[id]) {
    case EdgeLabel::AllowedTypeI:
      if (ce.left == ce.right) {
        with_e.reserve(static_cast<std::size_t>(a.t()));
        for (Index x = 0; x < a.t(); ++x) with_e.push_back({x, x});
      } else {
        with_e = rotate_along_cycle(a, ce.left, ce.right);
        with_e.push_back(ce);
      }
      break;
    case EdgeLabel::AllowedTypeII: {
      const auto path = find_type_two_path(a, ce);
      if (!path) throw Error(ErrorCode::EdgeNotAllowed, "no augmented path through " + edge_text(e));
      with_e = reconstruct_matching_from_path(a, *path).pairs();
      break;
    }
    case EdgeLabel::AllowedLower: {
      // The covered endpoint's pair gives way to e.
      const Index covered = ce.left < a.t() ? ce.left : ce.right;
      for (Index x = 0; x < a.t(); ++x) {
        if (x != covered) with_e.push_back({x, x});
      }
      with_e.push_back(ce);
      break;
    }
    case EdgeLabel::NotAllowed:
      throw Error(ErrorCode::EdgeNotAllowed, "edge " + edge_text(e) + " is not in any maximum matching");
  }

  const BipartiteGraph& g = s.graph();
  const auto keep_left = [&](Index l) { return l != e.left; };
  const auto keep_right = [&](Index r) { return r != e.right; };

  DynamicState next;
  std::vector<Index> new_left(static_cast<std::size_t>(g.left_count()), kNone);
  std::vector<Index> new_right(static_cast<std::size_t>(g.right_count()), kNone);
  for (Index l = 0; l < g.left_count(); ++l) {
    if (!keep_left(l)) continue;
    new_left[static_cast<std::size_t>(l)] = static_cast<Index>(next.left_origin_.size());
    next.left_origin_.push_back(s.left_origin(l));
  }
  for (Index r = 0; r < g.right_count(); ++r) {
    if (!keep_right(r)) continue;
    new_right[static_cast<std::size_t>(r)] = static_cast<Index>(next.right_origin_.size());
    next.right_origin_.push_back(s.right_origin(r));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (Index k = 0; k < g.edge_count(); ++k) {
    const auto& f = g.edge(k);
    if (!keep_left(f.left) || !keep_right(f.right)) continue;
    edges.push_back({new_left[static_cast<std::size_t>(f.left)], new_right[static_cast<std::size_t>(f.right)]});
    next.edge_origin_.push_back(s.edge_origin(k));
  }
  const Index n1 = static_cast<Index>(next.left_origin_.size());
  const Index n2 = static_cast<Index>(next.right_origin_.size());

  std::vector<Edge> pairs;
  pairs.reserve(with_e.size());
  for (const auto& cp : with_e) {
    if (cp == ce) continue;
    const Edge p = a.view.to_original(cp);
    pairs.push_back({new_left[static_cast<std::size_t>(p.left)], new_right[static_cast<std::size_t>(p.right)]});
  }

  next.graph_ = build_graph(n1, n2, std::move(edges));
  next.matching_ = Matching(n1, n2, std::move(pairs));
  next.analysis_ = analyze(next.graph_, next.matching_);
  next.rebuild_index(static_cast<Index>(s.left_current_.size()), static_cast<Index>(s.right_current_.size()));
  return next;
}

Index max_matching_after_removal_size(const DynamicState& s, const Edge& e) {
  locate_allowed(s, e);
  return s.matching().size() - 1;
}

}  // namespace bpm
