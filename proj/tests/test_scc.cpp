#include <doctest.h>

#include <random>
#include <vector>

#include "bpm/scc.hpp"
#include "support.hpp"

using namespace bpm;

namespace {

using Arc = DirectedView::Arc;

DirectedView digraph(Index n, const std::vector<std::pair<Index, Index>>& arcs) {
  std::vector<Arc> list;
  for (std::size_t k = 0; k < arcs.size(); ++k) list.push_back({arcs[k].first, arcs[k].second, static_cast<Index>(k)});
  return DirectedView(n, Orientation::H, list);
}

// Reachability closure by Floyd-Warshall.
std::vector<std::vector<bool>> closure(Index n, const std::vector<std::pair<Index, Index>>& arcs) {
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (auto [a, b] : arcs) reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (std::size_t k = 0; k < reach.size(); ++k)
    for (std::size_t i = 0; i < reach.size(); ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < reach.size(); ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

}  // namespace

TEST_CASE("tarjan_scc: a directed cycle is one component") {
  const auto s = tarjan_scc(digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(s.count == 1);
  CHECK(s.component[0] == s.component[1]);
  CHECK(s.component[1] == s.component[2]);
}

TEST_CASE("tarjan_scc: a path gives singletons") {
  const auto s = tarjan_scc(digraph(3, {{0, 1}, {1, 2}}));
  CHECK(s.count == 3);
  CHECK(s.component[0] != s.component[1]);
  CHECK(s.component[1] != s.component[2]);
  CHECK(s.component[0] != s.component[2]);
}

TEST_CASE("tarjan_scc: empty and isolated nodes") {
  CHECK(tarjan_scc(digraph(0, {})).count == 0);
  CHECK(tarjan_scc(digraph(4, {})).count == 4);
}

TEST_CASE("tarjan_scc: agrees with the reachability closure on 500 random digraphs") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = 10;
    const double p = 0.05 + 0.3 * static_cast<double>(trial % 7) / 6.0;
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Index, Index>> arcs;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (a != b && coin(rng)) arcs.push_back({a, b});
    const auto reach = closure(n, arcs);
    const auto s = tarjan_scc(digraph(n, arcs));
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        const bool mutual = reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                            reach[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        REQUIRE(mutual == (s.component[static_cast<std::size_t>(a)] == s.component[static_cast<std::size_t>(b)]));
      }
    }
  }
}

TEST_CASE("tarjan_scc: a million-node cycle does not exhaust the stack") {
  const Index n = 1000000;
  std::vector<std::pair<Index, Index>> arcs;
  for (Index i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  const auto s = tarjan_scc(digraph(n, arcs));
  CHECK(s.count == 1);
}

TEST_CASE("make_view: projections of the seven-edge graph") {
  const auto g = test::seven_edge();  // canonical for t = 3
  const auto h = make_view(g, Orientation::H, 3);
  CHECK(h.node_count() == 3);
  // H: (2,3) and (3,1) only; self pairs and the lower node are excluded.
  CHECK(h.arc_count() == 2);
  CHECK(std::vector<Index>(h.successors(1).begin(), h.successors(1).end()) == std::vector<Index>{2});
  CHECK(std::vector<Index>(h.successors(2).begin(), h.successors(2).end()) == std::vector<Index>{0});

  const auto hlr = make_view(g, Orientation::HLR, 3);
  CHECK(hlr.node_count() == 4);
  CHECK(hlr.arc_count() == 7);
  CHECK(std::vector<Index>(hlr.successors(2).begin(), hlr.successors(2).end()) == std::vector<Index>{0, 2, 3});

  const auto hrl = make_view(g, Orientation::HRL, 3);
  CHECK(hrl.arc_count() == 7);
  // u_1 -> u_j iff (v_j, v'_1) in E: j in {1, 3, 4}.
  CHECK(std::vector<Index>(hrl.successors(0).begin(), hrl.successors(0).end()) == std::vector<Index>{0, 2, 3});
  for (Index u = 0; u < hrl.node_count(); ++u) {
    const auto heads = hrl.successors(u);
    const auto ids = hrl.arc_edges(u);
    for (std::size_t k = 0; k < heads.size(); ++k) CHECK(g.edge(ids[k]) == Edge{heads[k], u});
  }
}
