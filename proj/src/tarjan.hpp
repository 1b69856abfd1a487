#pragma once

#include <utility>
#include <vector>

#include "bpm/scc.hpp"

namespace bpm::detail {

// Iterative strongly connected components over an implicit digraph on [0, n),
// one word of state per node (Pearce's variant of Tarjan's algorithm).
// Successor candidates of v are base[range(v).first .. range(v).second);
// `head` maps a candidate to a node, or to kNone to skip it.
template <class Range, class Head>
SccLabeling tarjan(Index n, const Index* base, Range range, Head head) {
  // rindex: 0 unvisited; DFS index while active; n - 1 - component once done.
  // Active indices stay below every completed value, so a completed node
  // never lowers an active one.
  std::vector<Index> rindex(static_cast<std::size_t>(n), 0);
  std::vector<Index> stack;
  struct Frame {
    Index node;
    Index next;
    Index end;
    bool root;
  };
  std::vector<Frame> work;
  Index index = 1;
  Index component = n - 1;

  const auto enter = [&](Index v) {
    rindex[static_cast<std::size_t>(v)] = index++;
    const auto [begin, end] = range(v);
    work.push_back({v, begin, end, true});
  };

  for (Index root = 0; root < n; ++root) {
    if (rindex[static_cast<std::size_t>(root)] != 0) continue;
    enter(root);

    while (!work.empty()) {
      Frame& f = work.back();
      // Scan successors until an unvisited one is found.
      Index low = rindex[static_cast<std::size_t>(f.node)];
      Index found = kNone;
      while (f.next != f.end) {
        const Index w = head(base[f.next++]);
        if (w == kNone) continue;
        const Index rw = rindex[static_cast<std::size_t>(w)];
        if (rw == 0) {
          found = w;
          break;
        }
        if (rw < low) {
          low = rw;
          f.root = false;
        }
      }
      rindex[static_cast<std::size_t>(f.node)] = low;
      if (found != kNone) {
        enter(found);
        continue;
      }

      const Index v = f.node;
      auto& rv = rindex[static_cast<std::size_t>(v)];
      if (f.root) {
        --index;
        while (!stack.empty() && rv <= rindex[static_cast<std::size_t>(stack.back())]) {
          rindex[static_cast<std::size_t>(stack.back())] = component;
          stack.pop_back();
          --index;
        }
        rv = component--;
      } else {
        stack.push_back(v);
      }
      work.pop_back();
      if (!work.empty()) {
        Frame& parent = work.back();
        auto& rp = rindex[static_cast<std::size_t>(parent.node)];
        if (rv < rp) {
          rp = rv;
          parent.root = false;
        }
      }
    }
  }

  SccLabeling out;
  out.count = n - 1 - component;
  out.component = std::move(rindex);
  for (auto& c : out.component) c = n - 1 - c;
  return out;
}

}  // namespace bpm::detail
