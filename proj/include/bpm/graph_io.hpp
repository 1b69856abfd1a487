#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bpm/graph.hpp"

namespace bpm {

// Contents of a line-oriented graph file:
//
//   c <comment>
//   p bpm <n1> <n2> <m>     exactly one, first non-comment line
//   e <i> <j>               1-based edge, exactly m of them
//   m <i> <j>               optional known matching edge
struct GraphFile {
  BipartiteGraph graph;
  std::optional<Matching> matching;  // present iff at least one `m` line
};

// Throws Error{Parse} with the offending line number, or the build_graph errors.
GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const BipartiteGraph& g, const Matching* m = nullptr);

// `<i> <j> <label>` per edge in input order, then `s allowed <count> matching <t>`.
void write_classification(std::ostream& out, const BipartiteGraph& g, const EdgeClassification& c, Index t);

}  // namespace bpm
