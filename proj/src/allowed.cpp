#include "bpm/allowed.hpp"

#include <tuple>

#include "bpm/matching.hpp"
#include "tarjan.hpp"

namespace bpm {

namespace {

// Arcs inside one SCC of h become type I.
void mark_cycles(const DirectedView& h, const SccLabeling& scc, EdgeClassification& out) {
  for (Index i = 0; i < h.node_count(); ++i) {
    const auto heads = h.successors(i);
    const auto ids = h.arc_edges(i);
    const Index comp = scc.component[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < heads.size(); ++k) {
      if (scc.component[static_cast<std::size_t>(heads[k])] == comp) {
        out.labels[static_cast<std::size_t>(ids[k])] = EdgeLabel::AllowedTypeI;
      }
    }
  }
}

// Labels in original node numbering. `components` receives the SCC of every
// left node in H (uncovered left nodes get singleton components).
EdgeClassification classify_lean(const BipartiteGraph& g, const Matching& m, SccLabeling& components) {
  // H on left nodes: l -> partner(r) for each covered neighbor r of a covered l.
  // Heads are mapped in one pass up front so the DFS does a single random
  // lookup per arc. The self-loop through l's own partner does not affect
  // components.
  const auto offsets = g.left_offsets();
  const auto targets = g.left_targets();
  std::vector<Index> h_heads(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) h_heads[k] = m.right_partner(targets[k]);
  components = detail::tarjan(
      g.left_count(), h_heads.data(),
      [&](Index l) {
        const Index begin = offsets[static_cast<std::size_t>(l)];
        return std::pair{begin, m.left_covered(l) ? offsets[static_cast<std::size_t>(l) + 1] : begin};
      },
      [](Index w) { return w; });
  h_heads = {};

  // Component of each covered node, a right node taking its partner's.
  // A matched edge joins a node to itself, so it compares equal like any
  // edge inside a component.
  auto& left_comp = components.component;
  for (Index l = 0; l < g.left_count(); ++l)
    if (!m.left_covered(l)) left_comp[static_cast<std::size_t>(l)] = kNone;
  std::vector<Index> right_comp(static_cast<std::size_t>(g.right_count()), kNone);
  for (Index r = 0; r < g.right_count(); ++r) {
    const Index l = m.right_partner(r);
    if (l != kNone) right_comp[static_cast<std::size_t>(r)] = left_comp[static_cast<std::size_t>(l)];
  }

  EdgeClassification out;
  out.labels.resize(static_cast<std::size_t>(g.edge_count()));
  for (Index id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    const Index cl = left_comp[static_cast<std::size_t>(e.left)];
    const Index cr = right_comp[static_cast<std::size_t>(e.right)];
    out.labels[static_cast<std::size_t>(id)] = cl == kNone || cr == kNone ? EdgeLabel::AllowedLower
                                               : cl == cr                ? EdgeLabel::AllowedTypeI
                                                                         : EdgeLabel::NotAllowed;
  }
  if (m.size() == g.left_count() && m.size() == g.right_count()) return out;

  // HLR from the uncovered left nodes and HRL from the uncovered right nodes.
  // Every edge leaving a reached node is marked, including edges into nodes
  // already seen. An uncovered head is itself a source, so only partners of
  // covered heads are queued.
  std::vector<char> seen;
  std::vector<Index> queue;
  const auto sweep = [&](Index nodes, auto covered, auto row, auto ids, auto partner) {
    seen.assign(static_cast<std::size_t>(nodes), 0);
    queue.clear();
    for (Index u = 0; u < nodes; ++u) {
      if (covered(u)) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      queue.push_back(u);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto heads = row(queue[head]);
      const auto edge_ids = ids(queue[head]);
      for (std::size_t k = 0; k < heads.size(); ++k) {
        auto& label = out.labels[static_cast<std::size_t>(edge_ids[k])];
        if (label == EdgeLabel::NotAllowed) label = EdgeLabel::AllowedTypeII;
        const Index next = partner(heads[k]);
        if (next != kNone && !seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
  };
  sweep(
      g.left_count(), [&](Index l) { return m.left_covered(l); }, [&](Index l) { return g.right_neighbors(l); },
      [&](Index l) { return g.left_edge_ids(l); }, [&](Index r) { return m.right_partner(r); });
  sweep(
      g.right_count(), [&](Index r) { return m.right_covered(r); }, [&](Index r) { return g.left_neighbors(r); },
      [&](Index r) { return g.right_edge_ids(r); }, [&](Index l) { return m.left_partner(l); });
  return out;
}

}  // namespace

EdgeClassification classify_perfect(const BipartiteGraph& g) {
  const Index t = g.left_count();
  if (g.right_count() != t) throw Error(ErrorCode::NotCanonicalPerfect, "parts differ in size");
  for (Index i = 0; i < t; ++i) {
    if (!g.has_edge(i, i)) {
      throw Error(ErrorCode::NotCanonicalPerfect, "missing matched edge (" + std::to_string(i + 1) + "," +
                                                      std::to_string(i + 1) + ")");
    }
  }
  EdgeClassification out;
  out.labels.assign(static_cast<std::size_t>(g.edge_count()), EdgeLabel::NotAllowed);
  for (Index i = 0; i < t; ++i) out.labels[static_cast<std::size_t>(g.find_edge(i, i))] = EdgeLabel::AllowedTypeI;
  const DirectedView h = make_view(g, Orientation::H, t);
  mark_cycles(h, tarjan_scc(h), out);
  return out;
}

EdgeClassification classify_general(const BipartiteGraph& g, const Matching& m) {
  if (!verify_matching(g, m)) throw Error(ErrorCode::InvalidMatching, "not a matching of the graph");
  SccLabeling components;
  return classify_lean(g, m, components);
}

Analysis analyze(const BipartiteGraph& g, const Matching& m) {
  Analysis a;
  a.view = canonical_labels(g, m);
  SccLabeling components;
  a.labels = classify_lean(g, m, components);

  a.h = make_view(g, a.view, Orientation::H);
  a.hlr = make_view(g, a.view, Orientation::HLR);
  a.hrl = make_view(g, a.view, Orientation::HRL);

  // Components of the matched left nodes, renumbered densely in canonical order.
  const Index t = a.t();
  std::vector<Index> dense(static_cast<std::size_t>(components.count), kNone);
  a.scc.component.resize(static_cast<std::size_t>(t));
  for (Index i = 0; i < t; ++i) {
    auto& c = dense[static_cast<std::size_t>(components.component[static_cast<std::size_t>(a.view.left_inv[static_cast<std::size_t>(i)])])];
    if (c == kNone) c = a.scc.count++;
    a.scc.component[static_cast<std::size_t>(i)] = c;
  }
  return a;
}

std::pair<Matching, EdgeClassification> classify_all(const BipartiteGraph& g) {
  Matching m = hopcroft_karp(g);
  EdgeClassification c = classify_general(g, m);
  return {std::move(m), std::move(c)};
}

}  // namespace bpm
