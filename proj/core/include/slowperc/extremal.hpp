#pragma once

#include <cstdint>

#include "slowperc/graph.hpp"

namespace slowperc {

struct MaxTimeResult {
  int n = 0;
  int r = 0;
  std::size_t max_time = 0;
  Graph witness_start;
  std::uint64_t graphs_examined = 0;
};

// Edges of K_n in lexicographic order; bit i of a subset mask selects edge i.
std::vector<EdgePair> lex_edges(int n);
Graph graph_from_mask(int n, const std::vector<EdgePair>& edges, std::uint64_t mask);

// Exact M_r(n): runs the K_r process from every subgraph of K_n (n <= 7). The
// reported witness is the lowest mask reaching the maximum. `jobs` splits the
// mask range across threads; the result does not depend on it.
MaxTimeResult max_running_time(int n, int r, unsigned jobs = 1);

// Lower bound on M_r(n) from `samples` uniformly random subgraphs of K_n drawn
// from a generator seeded with `seed`.
MaxTimeResult max_running_time_sampled(int n, int r, std::uint64_t samples, std::uint64_t seed);

}  // namespace slowperc
