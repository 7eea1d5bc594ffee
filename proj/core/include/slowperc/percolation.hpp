#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "slowperc/graph.hpp"

namespace slowperc {

// Full history of a K_r-bootstrap run. steps[t] is the batch of edges infected
// at step t+1, sorted by (u, v).
struct PercolationTrace {
  std::vector<std::vector<EdgePair>> steps;
  std::size_t running_time = 0;
  bool percolated = false;
  // max_steps was exhausted while the process was still adding edges.
  bool truncated = false;
  std::size_t final_edge_count = 0;

  friend bool operator==(const PercolationTrace&, const PercolationTrace&) = default;
};

struct RunOptions {
  // Defaults to C(n,2)+1, which no run can reach.
  std::optional<std::size_t> max_steps;
  // Re-examine only the pairs whose common neighbourhood changed in the last
  // batch. Output is identical to a full scan.
  bool incremental = true;
};

// Host edges uv missing from `current` whose common neighbourhood in `current`
// contains an (r-2)-clique, i.e. adding uv creates a new K_r.
std::vector<EdgePair> step_kr(const Graph& current, int r, const Graph& host);

PercolationTrace run(const Graph& start, int r, const Graph& host, const RunOptions& options = {});

// Independent reference engine: an edge is infected iff adding it raises the
// number of K_r copies counted from scratch. Exponential; meant for n <= 12.
PercolationTrace run_oracle(const Graph& start, int r, const Graph& host,
                            std::optional<std::size_t> max_steps = std::nullopt);

// Applies every batch of the trace to `start`.
Graph replay(const Graph& start, const PercolationTrace& trace);

std::size_t default_max_steps(std::size_t vertex_count);

// Stateful stepper used by run(); exposed so callers can drive the process one
// batch at a time.
class PercolationEngine {
 public:
  // `host` is referenced, not copied, and must outlive the engine.
  PercolationEngine(Graph start, int r, const Graph& host);
  PercolationEngine(Graph start, int r, Graph&& host) = delete;
  PercolationEngine(const PercolationEngine&) = delete;
  PercolationEngine& operator=(const PercolationEngine&) = delete;

  const Graph& current() const { return current_; }

  // Computes the next batch without applying it. In incremental mode only the
  // pairs touched by the previously applied batch are examined.
  std::vector<EdgePair> next_batch(bool incremental);
  void apply(const std::vector<EdgePair>& batch);

 private:
  bool completes_clique(Vertex u, Vertex v);
  std::vector<EdgePair> full_scan();
  std::vector<EdgePair> scan_dirty();

  Graph current_;
  const Graph* host_;
  int r_;
  CliqueFinder finder_;
  std::vector<Word> common_;
  std::vector<Word> reach_;
  std::vector<EdgePair> pending_;
  std::vector<EdgePair> last_batch_;
  // Every pair outside the neighbourhood of last_batch_ is known ineligible.
  bool synced_ = false;
};

}  // namespace slowperc
