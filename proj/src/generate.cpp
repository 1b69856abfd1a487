#include "bpm/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bpm {

BipartiteGraph random_graph(Index n1, Index n2, std::int64_t m, std::mt19937_64& rng) {
  const auto cells = static_cast<std::uint64_t>(n1) * static_cast<std::uint64_t>(n2);
  if (m < 0 || static_cast<std::uint64_t>(m) > cells) throw std::invalid_argument("too many edges for the node count");

  // Draw keys left * n2 + right, dedupe, top up until m remain.
  std::uniform_int_distribution<std::uint64_t> pick(0, cells == 0 ? 0 : cells - 1);
  std::vector<std::uint64_t> keys;
  keys.reserve(static_cast<std::size_t>(m));
  while (static_cast<std::int64_t>(keys.size()) < m) {
    while (static_cast<std::int64_t>(keys.size()) < m) keys.push_back(pick(rng));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
  std::shuffle(keys.begin(), keys.end(), rng);

  std::vector<Edge> edges;
  edges.reserve(keys.size());
  for (auto k : keys) {
    edges.push_back({static_cast<Index>(k / static_cast<std::uint64_t>(n2)),
                     static_cast<Index>(k % static_cast<std::uint64_t>(n2))});
  }
  return build_graph(n1, n2, std::move(edges));
}

BipartiteGraph random_graph_density(Index n1, Index n2, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Index l = 0; l < n1; ++l) {
    for (Index r = 0; r < n2; ++r) {
      if (coin(rng)) edges.push_back({l, r});
    }
  }
  return build_graph(n1, n2, std::move(edges));
}

BipartiteGraph random_regular(Index n, Index d, std::mt19937_64& rng) {
  if (d < 0 || d > n) throw std::invalid_argument("degree exceeds part size");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (;;) {
    std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    bool ok = true;
    for (Index round = 0; round < d && ok; ++round) {
      ok = false;
      for (int attempt = 0; attempt < 10000 && !ok; ++attempt) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ok = true;
        for (Index l = 0; l < n && ok; ++l) {
          ok = !used[static_cast<std::size_t>(l) * static_cast<std::size_t>(n) + static_cast<std::size_t>(perm[static_cast<std::size_t>(l)])];
        }
      }
      if (!ok) break;
      for (Index l = 0; l < n; ++l) {
        const Index r = perm[static_cast<std::size_t>(l)];
        used[static_cast<std::size_t>(l) * static_cast<std::size_t>(n) + static_cast<std::size_t>(r)] = 1;
        edges.push_back({l, r});
      }
    }
    if (ok) {
      std::shuffle(edges.begin(), edges.end(), rng);
      return build_graph(n, n, std::move(edges));
    }
  }
}

}  // namespace bpm
