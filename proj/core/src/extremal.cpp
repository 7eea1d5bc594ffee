#include "slowperc/extremal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "slowperc/percolation.hpp"

namespace slowperc {

std::vector<EdgePair> lex_edges(int n) {
  std::vector<EdgePair> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return out;
}

Graph graph_from_mask(int n, const std::vector<EdgePair>& edges, std::uint64_t mask) {
  Graph g(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((mask >> i) & 1U) g.add_edge(edges[i]);
  return g;
}

namespace {

struct Best {
  std::size_t time = 0;
  std::uint64_t mask = 0;
};

void check_params(int n, int r) {
  if (r < 3) throw std::invalid_argument("M_r(n) needs r >= 3");
  if (n < 1) throw std::invalid_argument("M_r(n) needs n >= 1");
}

}  // namespace

MaxTimeResult max_running_time(int n, int r, unsigned jobs) {
  check_params(n, r);
  if (n > 7) throw std::invalid_argument("exhaustive search supports n <= 7 (2^21 starting graphs)");
  const auto edges = lex_edges(n);
  const Graph host = Graph::complete(static_cast<std::size_t>(n));
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(total)));

  std::vector<Best> partial(jobs);
  auto work = [&](unsigned id) {
    const std::uint64_t lo = total * id / jobs;
    const std::uint64_t hi = total * (id + 1) / jobs;
    Best best{0, lo};
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const auto trace = run(graph_from_mask(n, edges, mask), r, host);
      if (trace.running_time > best.time) best = {trace.running_time, mask};
    }
    partial[id] = best;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  // Ranges are ascending, so a strict comparison keeps the lowest mask.
  Best best = partial[0];
  for (const auto& p : partial)
    if (p.time > best.time) best = p;

  MaxTimeResult res;
  res.n = n;
  res.r = r;
  res.max_time = best.time;
  res.witness_start = graph_from_mask(n, edges, best.mask);
  res.graphs_examined = total;
  return res;
}

MaxTimeResult max_running_time_sampled(int n, int r, std::uint64_t samples, std::uint64_t seed) {
  check_params(n, r);
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const Graph host = Graph::complete(static_cast<std::size_t>(n));
  const auto edges = lex_edges(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  MaxTimeResult res;
  res.n = n;
  res.r = r;
  res.witness_start = Graph(static_cast<std::size_t>(n));
  bool first = true;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : edges)
      if (coin(rng)) g.add_edge(e);
    const auto trace = run(g, r, host);
    if (first || trace.running_time > res.max_time) {
      res.max_time = trace.running_time;
      res.witness_start = std::move(g);
      first = false;
    }
  }
  res.graphs_examined = samples;
  return res;
}

}  // namespace slowperc
