#include "bpm/matching.hpp"

#include <algorithm>
#include <limits>

namespace bpm {

namespace {

std::vector<Edge> collect_pairs(const std::vector<Index>& left_match) {
  std::vector<Edge> pairs;
  for (Index l = 0; l < static_cast<Index>(left_match.size()); ++l) {
    if (left_match[static_cast<std::size_t>(l)] != kNone) pairs.push_back({l, left_match[static_cast<std::size_t>(l)]});
  }
  return pairs;
}

}  // namespace

Matching greedy_maximal(const BipartiteGraph& g) {
  std::vector<Index> left_match(static_cast<std::size_t>(g.left_count()), kNone);
  std::vector<char> right_used(static_cast<std::size_t>(g.right_count()), 0);
  for (Index l = 0; l < g.left_count(); ++l) {
    for (Index r : g.right_neighbors(l)) {
      if (!right_used[static_cast<std::size_t>(r)]) {
        right_used[static_cast<std::size_t>(r)] = 1;
        left_match[static_cast<std::size_t>(l)] = r;
        break;
      }
    }
  }
  return Matching(g.left_count(), g.right_count(), collect_pairs(left_match));
}

Matching hopcroft_karp(const BipartiteGraph& g) {
  constexpr Index kInf = std::numeric_limits<Index>::max();
  const auto n1 = static_cast<std::size_t>(g.left_count());
  const auto n2 = static_cast<std::size_t>(g.right_count());

  std::vector<Index> left_match(n1, kNone);
  std::vector<Index> right_match(n2, kNone);
  {
    const Matching warm = greedy_maximal(g);
    for (const auto& p : warm.pairs()) {
      left_match[static_cast<std::size_t>(p.left)] = p.right;
      right_match[static_cast<std::size_t>(p.right)] = p.left;
    }
  }

  std::vector<Index> dist(n1);
  std::vector<Index> queue;
  queue.reserve(n1);
  std::vector<std::size_t> cursor(n1);
  std::vector<Index> stack;

  for (;;) {
    // Layer left nodes by alternating distance from the free ones; stop at the
    // first layer that sees a free right node.
    queue.clear();
    for (std::size_t l = 0; l < n1; ++l) {
      if (left_match[l] == kNone) {
        dist[l] = 0;
        queue.push_back(static_cast<Index>(l));
      } else {
        dist[l] = kInf;
      }
    }
    Index limit = kInf;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index l = queue[head];
      const Index d = dist[static_cast<std::size_t>(l)];
      if (d >= limit) break;
      for (Index r : g.right_neighbors(l)) {
        const Index w = right_match[static_cast<std::size_t>(r)];
        if (w == kNone) {
          limit = d;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = d + 1;
          queue.push_back(w);
        }
      }
    }
    if (limit == kInf) break;

    // Vertex-disjoint shortest augmenting paths, iterative DFS.
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t root = 0; root < n1; ++root) {
      if (left_match[root] != kNone || dist[root] != 0) continue;
      stack.assign(1, static_cast<Index>(root));
      Index free_right = kNone;
      while (!stack.empty() && free_right == kNone) {
        const Index l = stack.back();
        const auto ul = static_cast<std::size_t>(l);
        const auto nbrs = g.right_neighbors(l);
        bool advanced = false;
        while (cursor[ul] < nbrs.size()) {
          const Index r = nbrs[cursor[ul]];
          const Index w = right_match[static_cast<std::size_t>(r)];
          if (w == kNone) {
            if (dist[ul] == limit) {
              free_right = r;
              advanced = true;
              break;
            }
          } else if (dist[static_cast<std::size_t>(w)] == dist[ul] + 1) {
            stack.push_back(w);
            advanced = true;
            break;
          }
          ++cursor[ul];
        }
        if (!advanced) {
          dist[ul] = kInf;
          stack.pop_back();
          if (!stack.empty()) ++cursor[static_cast<std::size_t>(stack.back())];
        }
      }
      if (free_right == kNone) continue;
      // Flip along the stack: each left node takes the right node its cursor points at.
      Index r = free_right;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        const auto ul = static_cast<std::size_t>(*it);
        const Index prev = left_match[ul];
        left_match[ul] = r;
        right_match[static_cast<std::size_t>(r)] = *it;
        dist[ul] = kInf;
        r = prev;
      }
    }
  }
  return Matching(g.left_count(), g.right_count(), collect_pairs(left_match));
}

std::vector<Edge> find_augmenting_path(const BipartiteGraph& g, const Matching& m) {
  const auto n1 = static_cast<std::size_t>(g.left_count());
  // l was reached from parent_left[l] across the free edge to parent_right[l],
  // whose matched partner is l. Roots have kNone.
  std::vector<Index> parent_left(n1, kNone);
  std::vector<Index> parent_right(n1, kNone);
  std::vector<char> seen(n1, 0);
  std::vector<Index> queue;
  for (Index l = 0; l < g.left_count(); ++l) {
    if (!m.left_covered(l)) {
      seen[static_cast<std::size_t>(l)] = 1;
      queue.push_back(l);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index l = queue[head];
    for (Index r : g.right_neighbors(l)) {
      const Index w = m.right_partner(r);
      if (w == kNone) {
        std::vector<Edge> path;
        path.push_back({l, r});
        for (Index cur = l; parent_right[static_cast<std::size_t>(cur)] != kNone;) {
          const Index via = parent_right[static_cast<std::size_t>(cur)];
          const Index from = parent_left[static_cast<std::size_t>(cur)];
          path.push_back({cur, via});
          path.push_back({from, via});
          cur = from;
        }
        return {path.rbegin(), path.rend()};
      }
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent_left[static_cast<std::size_t>(w)] = l;
        parent_right[static_cast<std::size_t>(w)] = r;
        queue.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace bpm
