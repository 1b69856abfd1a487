#pragma once

#include <cstdint>
#include <random>

#include "bpm/graph.hpp"

namespace bpm {

// m distinct edges drawn uniformly from the n1 x n2 grid.
// Throws std::invalid_argument if m > n1 * n2.
BipartiteGraph random_graph(Index n1, Index n2, std::int64_t m, std::mt19937_64& rng);

// Each of the n1 * n2 possible edges independently with probability p.
BipartiteGraph random_graph_density(Index n1, Index n2, double p, std::mt19937_64& rng);

// Union of d edge-disjoint random perfect matchings on n + n nodes.
// Throws std::invalid_argument if d > n.
BipartiteGraph random_regular(Index n, Index d, std::mt19937_64& rng);

}  // namespace bpm
