// Reference K_r-bootstrap engine. Shares nothing with PercolationEngine's step
// decision: it works on a plain boolean matrix and counts clique copies directly.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "slowperc/percolation.hpp"

namespace slowperc {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix to_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix a(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) a[u][v] = 1;
  return a;
}

// Number of r-subsets of [n] that are complete in `a`.
std::uint64_t count_cliques(const Matrix& a, int r) {
  const int n = static_cast<int>(a.size());
  if (r > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::uint64_t count = 0;
  while (true) {
    bool complete = true;
    for (int i = 0; i < r && complete; ++i)
      for (int j = i + 1; j < r && complete; ++j)
        complete = a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] != 0;
    if (complete) ++count;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

}  // namespace

PercolationTrace run_oracle(const Graph& start, int r, const Graph& host, std::optional<std::size_t> max_steps) {
  if (r < 3) throw std::invalid_argument("K_r process needs r >= 3, got " + std::to_string(r));
  if (start.vertex_count() != host.vertex_count())
    throw std::invalid_argument("start graph and host graph have different vertex counts");
  if (!start.is_subgraph_of(host)) throw std::invalid_argument("start graph is not a subgraph of the host");

  const std::size_t n = start.vertex_count();
  const std::size_t limit = max_steps.value_or(n * (n - (n > 0)) / 2 + 1);
  Matrix cur = to_matrix(start);
  const Matrix hst = to_matrix(host);

  auto next = [&] {
    std::vector<EdgePair> batch;
    const std::uint64_t before = count_cliques(cur, r);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!hst[u][v] || cur[u][v]) continue;
        Matrix with = cur;
        with[u][v] = with[v][u] = 1;
        if (count_cliques(with, r) > before) batch.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    return batch;
  };

  PercolationTrace trace;
  bool stable = false;
  while (trace.steps.size() < limit) {
    auto batch = next();
    if (batch.empty()) {
      stable = true;
      break;
    }
    for (const auto& e : batch) cur[e.u][e.v] = cur[e.v][e.u] = 1;
    trace.steps.push_back(std::move(batch));
  }
  if (!stable) trace.truncated = !next().empty();
  trace.running_time = trace.steps.size();
  std::size_t edges = 0;
  bool all = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      edges += cur[u][v] ? 1 : 0;
      all = all && (cur[u][v] == hst[u][v]);
    }
  trace.final_edge_count = edges;
  trace.percolated = all;
  return trace;
}

}  // namespace slowperc
