#pragma once

#include <utility>

#include "bpm/graph.hpp"
#include "bpm/scc.hpp"

namespace bpm {

// Everything computed while classifying a graph against one maximum matching.
// All views live in canonical labels and carry the original edge ids, so
// `labels` applies to the original graph unchanged.
struct Analysis {
  CanonicalView view;
  DirectedView h;    // matched-pair digraph on [0, t)
  DirectedView hlr;  // left-to-right projection
  DirectedView hrl;  // right-to-left projection
  SccLabeling scc;   // components of h
  EdgeClassification labels;

  Index t() const noexcept { return view.t; }
  Index left_count() const noexcept { return static_cast<Index>(view.left_perm.size()); }
  Index right_count() const noexcept { return static_cast<Index>(view.right_perm.size()); }
};

// Graph with the perfect matching {(i, i)}: edge (i, j) is allowed iff i == j
// or i and j share a strongly connected component of H.
// Throws Error{NotCanonicalPerfect} if n1 != n2 or some (i, i) is missing.
EdgeClassification classify_perfect(const BipartiteGraph& g);

// Full O(n + m) classification given a maximum matching of g.
//  1. edges touching an uncovered node are lower, hence allowed;
//  2. among upper edges, those inside an SCC of H (or matched) are type I;
//  3. every arc leaving a node reachable from an uncovered left node in HLR,
//     or from an uncovered right node in HRL, marks its edge; upper edges
//     marked here but not in step 2 are type II.
// m is trusted to be maximum. Throws Error{InvalidMatching} if it is not a
// matching of g at all.
Analysis analyze(const BipartiteGraph& g, const Matching& m);

// Same labels as analyze(g, m).labels. Walks H, HLR and HRL through the
// adjacency of g instead of building them.
EdgeClassification classify_general(const BipartiteGraph& g, const Matching& m);

// Hopcroft-Karp followed by classify_general.
std::pair<Matching, EdgeClassification> classify_all(const BipartiteGraph& g);

}  // namespace bpm
