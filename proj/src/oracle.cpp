#include "bpm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace bpm::oracle {

namespace {

void check_cap(const BipartiteGraph& g, Index cap) {
  if (g.node_count() > cap || g.right_count() > 63) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.node_count()) + " nodes exceeds the oracle cap of " +
                                         std::to_string(cap));
  }
}

// Best size over left nodes [l, n1) with the given rights already used and
// left node `skip_left` / right mask bits excluded.
Index best_from(const BipartiteGraph& g, Index l, std::uint64_t used, Index skip_left) {
  if (l == g.left_count()) return 0;
  Index best = best_from(g, l + 1, used, skip_left);
  if (l == skip_left) return best;
  if (best == g.left_count() - l) return best;
  for (Index r : g.right_neighbors(l)) {
    const std::uint64_t bit = std::uint64_t{1} << r;
    if (used & bit) continue;
    best = std::max(best, 1 + best_from(g, l + 1, used | bit, skip_left));
    if (best == g.left_count() - l) break;
  }
  return best;
}

void enumerate(const BipartiteGraph& g, Index l, std::uint64_t used, Index target, std::vector<Edge>& current,
               std::vector<Matching>& out) {
  const Index size = static_cast<Index>(current.size());
  if (size + (g.left_count() - l) < target) return;
  if (l == g.left_count()) {
    out.emplace_back(g.left_count(), g.right_count(), current);
    return;
  }
  for (Index r : g.right_neighbors(l)) {
    const std::uint64_t bit = std::uint64_t{1} << r;
    if (used & bit) continue;
    current.push_back({l, r});
    enumerate(g, l + 1, used | bit, target, current, out);
    current.pop_back();
  }
  enumerate(g, l + 1, used, target, current, out);
}

}  // namespace

Index brute_force_max_matching(const BipartiteGraph& g, Index cap) {
  check_cap(g, cap);
  return best_from(g, 0, 0, kNone);
}

std::vector<Edge> brute_force_allowed(const BipartiteGraph& g, Index cap) {
  check_cap(g, cap);
  const Index max = best_from(g, 0, 0, kNone);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    // Maximum of G minus both endpoints of e.
    const Index rest = best_from(g, 0, std::uint64_t{1} << e.right, e.left);
    if (rest + 1 == max) out.push_back(e);
  }
  return out;
}

std::vector<Matching> enumerate_maximum_matchings(const BipartiteGraph& g, Index cap) {
  check_cap(g, cap);
  const Index max = best_from(g, 0, 0, kNone);
  std::vector<Matching> out;
  std::vector<Edge> current;
  enumerate(g, 0, 0, max, current, out);
  return out;
}

}  // namespace bpm::oracle
