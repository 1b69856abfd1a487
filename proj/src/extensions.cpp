#include "bpm/extensions.hpp"

#include <string>

#include "bpm/matching.hpp"

namespace bpm {

Extension extend_partial_matching(const BipartiteGraph& g, const Matching& m, const std::vector<Edge>& p) {
  if (!verify_matching(g, m)) throw Error(ErrorCode::InvalidMatching, "not a matching of the graph");

  std::vector<char> left_in_p(static_cast<std::size_t>(g.left_count()), 0);
  std::vector<char> right_in_p(static_cast<std::size_t>(g.right_count()), 0);
  for (const auto& e : p) {
    if (!g.has_edge(e.left, e.right)) {
      throw Error(ErrorCode::EdgeAbsent,
                  "(" + std::to_string(e.left + 1) + "," + std::to_string(e.right + 1) + ") is not an edge");
    }
    auto& l = left_in_p[static_cast<std::size_t>(e.left)];
    auto& r = right_in_p[static_cast<std::size_t>(e.right)];
    if (l || r) {
      throw Error(ErrorCode::NotNonAdjacent,
                  "(" + std::to_string(e.left + 1) + "," + std::to_string(e.right + 1) + ") shares a node");
    }
    l = r = 1;
  }

  Extension out;
  out.k = static_cast<Index>(p.size());
  out.t = m.size();
  std::vector<Edge> pairs = p;
  for (const auto& pair : m.pairs()) {
    if (left_in_p[static_cast<std::size_t>(pair.left)] || right_in_p[static_cast<std::size_t>(pair.right)]) {
      ++out.touched;
    } else {
      pairs.push_back(pair);
      ++out.kept;
    }
  }
  out.matching = Matching(g.left_count(), g.right_count(), std::move(pairs));
  return out;
}

std::optional<Index> is_regular(const BipartiteGraph& g) {
  if (g.node_count() == 0) return 0;
  const Index d = g.left_count() > 0 ? g.left_degree(0) : g.right_degree(0);
  for (Index l = 0; l < g.left_count(); ++l) {
    if (g.left_degree(l) != d) return std::nullopt;
  }
  for (Index r = 0; r < g.right_count(); ++r) {
    if (g.right_degree(r) != d) return std::nullopt;
  }
  return d;
}

std::vector<Matching> decompose_regular(const BipartiteGraph& g, Index d) {
  auto irregular = [&](const char* side, Index node, Index degree) {
    return Error(ErrorCode::NotRegular, std::string(side) + " node " + std::to_string(node + 1) + " has degree " +
                                            std::to_string(degree) + ", expected " + std::to_string(d));
  };
  if (d < 1) throw Error(ErrorCode::NotRegular, "degree must be at least 1");
  for (Index l = 0; l < g.left_count(); ++l) {
    if (g.left_degree(l) != d) throw irregular("left", l, g.left_degree(l));
  }
  for (Index r = 0; r < g.right_count(); ++r) {
    if (g.right_degree(r) != d) throw irregular("right", r, g.right_degree(r));
  }

  // Residual edges carry their id in g.
  std::vector<Index> ids(static_cast<std::size_t>(g.edge_count()));
  for (Index k = 0; k < g.edge_count(); ++k) ids[static_cast<std::size_t>(k)] = k;

  std::vector<Matching> out;
  out.reserve(static_cast<std::size_t>(d));
  for (Index round = 0; round < d; ++round) {
    std::vector<Edge> edges;
    edges.reserve(ids.size());
    for (Index id : ids) edges.push_back(g.edge(id));
    const BipartiteGraph residual = build_graph(g.left_count(), g.right_count(), std::move(edges));
    const Matching m = hopcroft_karp(residual);

    std::vector<char> taken(ids.size(), 0);
    for (const auto& pr : m.pairs()) taken[static_cast<std::size_t>(residual.find_edge(pr.left, pr.right))] = 1;
    std::vector<Index> rest;
    rest.reserve(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (!taken[k]) rest.push_back(ids[k]);
    }
    ids = std::move(rest);
    out.push_back(Matching(g.left_count(), g.right_count(), m.pairs()));
  }
  return out;
}

}  // namespace bpm
