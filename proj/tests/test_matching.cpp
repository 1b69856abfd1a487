#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bpm/generate.hpp"
#include "bpm/matching.hpp"
#include "bpm/oracle.hpp"
#include "support.hpp"

using namespace bpm;
using namespace bpm::test;

namespace {

bool is_maximal(const BipartiteGraph& g, const Matching& m) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return !m.left_covered(e.left) && !m.right_covered(e.right); });
}

}  // namespace

TEST_CASE("greedy_maximal") {
  CHECK(greedy_maximal(build_graph(0, 0, {})).size() == 0);
  const auto single = graph1(1, 1, {{1, 1}});
  CHECK(greedy_maximal(single).pairs() == one_based({{1, 1}}));

  // Every scan order of K_{2,2} saturates it: enumerate both left orders by
  // relabeling and both neighbor orders by mirroring the right side.
  for (int flip_left = 0; flip_left < 2; ++flip_left) {
    for (int flip_right = 0; flip_right < 2; ++flip_right) {
      std::vector<Edge> edges;
      for (Index l = 0; l < 2; ++l)
        for (Index r = 0; r < 2; ++r) edges.push_back({flip_left ? 1 - l : l, flip_right ? 1 - r : r});
      CHECK(greedy_maximal(build_graph(2, 2, edges)).size() == 2);
    }
  }
}

TEST_CASE("greedy_maximal is maximal and valid") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_graph_density(1 + static_cast<Index>(rng() % 10), 1 + static_cast<Index>(rng() % 10), 0.3, rng);
    const auto m = greedy_maximal(g);
    CHECK(verify_matching(g, m));
    CHECK(is_maximal(g, m));
  }
}

TEST_CASE("hopcroft_karp: small fixtures") {
  CHECK(hopcroft_karp(seven_edge()).size() == 3);
  CHECK(hopcroft_karp(complete(3, 3)).size() == 3);
  CHECK(hopcroft_karp(build_graph(0, 0, {})).size() == 0);
  CHECK(hopcroft_karp(build_graph(3, 2, {})).size() == 0);
  // Greedy takes (1,1),(2,2) and leaves 3 stranded; two phases recover it.
  const auto chain = graph1(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 1}});
  CHECK(greedy_maximal(chain).size() == 2);
  CHECK(hopcroft_karp(chain).size() == 3);
}

TEST_CASE("hopcroft_karp: matches the oracle on 1000 random 8x8 graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = random_graph_density(8, 8, 0.5, rng);
    const auto m = hopcroft_karp(g);
    REQUIRE(verify_matching(g, m));
    REQUIRE(m.size() == oracle::brute_force_max_matching(g));
  }
}

TEST_CASE("hopcroft_karp: sampled 5x5 and unbalanced shapes against the oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const Index n1 = 1 + static_cast<Index>(rng() % 5), n2 = 1 + static_cast<Index>(rng() % 5);
    const auto g = from_mask(n1, n2, rng() & ((std::uint64_t{1} << (n1 * n2)) - 1));
    REQUIRE(hopcroft_karp(g).size() == oracle::brute_force_max_matching(g));
  }
}

TEST_CASE("hopcroft_karp: deep augmenting paths do not recurse") {
  // Chain L_i - {R_(i-1), R_i}. L_0 gets the last index, so greedy matches
  // L_i to R_(i-1) and leaves one augmenting path through all 2n nodes.
  const Index n = 200000;
  std::vector<Edge> edges;
  for (Index i = 1; i < n; ++i) {
    edges.push_back({i - 1, i - 1});
    edges.push_back({i - 1, i});
  }
  edges.push_back({n - 1, 0});
  const auto g = build_graph(n, n, std::move(edges));
  CHECK(greedy_maximal(g).size() == n - 1);
  const auto m = hopcroft_karp(g);
  CHECK(m.size() == n);
  CHECK(verify_matching(g, m));
}

TEST_CASE("find_augmenting_path") {
  const auto g = seven_edge();
  CHECK(find_augmenting_path(g, matching1(g, {{1, 1}, {2, 2}, {3, 3}})).empty());
  const auto m = matching1(g, {{3, 1}, {2, 2}});
  const auto path = find_augmenting_path(g, m);
  REQUIRE(!path.empty());
  CHECK(path.size() % 2 == 1);
  // Alternates free / matched and flips into a larger matching.
  std::vector<Edge> flipped;
  for (const auto& p : m.pairs())
    if (std::find(path.begin(), path.end(), p) == path.end()) flipped.push_back(p);
  for (std::size_t k = 0; k < path.size(); k += 2) {
    CHECK_FALSE(m.contains(path[k]));
    flipped.push_back(path[k]);
  }
  for (std::size_t k = 1; k < path.size(); k += 2) CHECK(m.contains(path[k]));
  const Matching bigger(4, 4, flipped);
  CHECK(verify_matching(g, bigger));
  CHECK(bigger.size() == m.size() + 1);
}
