#include "slowperc/percolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slowperc {

namespace {

void check_inputs(const Graph& start, int r, const Graph& host) {
  if (r < 3) throw std::invalid_argument("K_r process needs r >= 3, got " + std::to_string(r));
  if (start.vertex_count() != host.vertex_count())
    throw std::invalid_argument("start graph and host graph have different vertex counts");
  if (!start.is_subgraph_of(host)) throw std::invalid_argument("start graph is not a subgraph of the host");
}

}  // namespace

std::size_t default_max_steps(std::size_t vertex_count) { return vertex_count * (vertex_count - (vertex_count > 0)) / 2 + 1; }

PercolationEngine::PercolationEngine(Graph start, int r, const Graph& host)
    : current_(std::move(start)),
      host_(&host),
      r_(r),
      finder_(current_),
      common_(current_.words_per_row()),
      reach_(current_.words_per_row()) {
  check_inputs(current_, r, host);
}

bool PercolationEngine::completes_clique(Vertex u, Vertex v) {
  const auto need = static_cast<std::size_t>(r_ - 2);
  if (bits::and_into(common_, current_.row(u), current_.row(v)) < need) return false;
  return finder_.exists(common_, r_ - 2);
}

std::vector<EdgePair> PercolationEngine::full_scan() {
  std::vector<EdgePair> batch;
  const auto n = static_cast<Vertex>(current_.vertex_count());
  for (Vertex u = 0; u + 1 < n; ++u) {
    // v must share a neighbour with u, so only the 2-hop ball is scanned.
    std::fill(reach_.begin(), reach_.end(), Word{0});
    bool any = false;
    bits::for_each(current_.row(u), [&](Vertex w) {
      auto rw = current_.row(w);
      for (std::size_t k = 0; k < reach_.size(); ++k) reach_[k] |= rw[k];
      any = true;
    });
    if (!any) continue;
    auto hu = host_->row(u);
    auto cu = current_.row(u);
    for (std::size_t k = 0; k < reach_.size(); ++k) reach_[k] &= hu[k] & ~cu[k];
    bits::clear_through(reach_, u);
    bits::for_each(std::span<const Word>(reach_), [&](Vertex v) {
      if (completes_clique(u, v)) batch.emplace_back(u, v);
    });
  }
  return batch;
}

std::vector<EdgePair> PercolationEngine::scan_dirty() {
  std::vector<EdgePair> dirty;
  auto push = [&](Vertex a, Vertex b) {
    if (a != b && host_->has_edge(a, b) && !current_.has_edge(a, b)) dirty.emplace_back(a, b);
  };
  std::vector<Word> shared(current_.words_per_row());
  for (const auto& e : last_batch_) {
    // u or v gained a neighbour: pairs (u, w) with w ~ v, and symmetrically.
    bits::for_each(current_.row(e.v), [&](Vertex w) { push(e.u, w); });
    bits::for_each(current_.row(e.u), [&](Vertex w) { push(e.v, w); });
    // uv may complete an (r-2)-clique inside the common neighbourhood of a pair
    // that sees both u and v.
    if (r_ - 2 >= 2) {
      bits::and_into(shared, current_.row(e.u), current_.row(e.v));
      const auto members = [&] {
        std::vector<Vertex> m;
        bits::for_each(std::span<const Word>(shared), [&](Vertex x) { m.push_back(x); });
        return m;
      }();
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) push(members[i], members[j]);
    }
  }
  std::sort(dirty.begin(), dirty.end());
  dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());

  std::vector<EdgePair> batch;
  for (const auto& p : dirty)
    if (completes_clique(p.u, p.v)) batch.push_back(p);
  return batch;
}

std::vector<EdgePair> PercolationEngine::next_batch(bool incremental) {
  pending_ = (incremental && synced_) ? scan_dirty() : full_scan();
  return pending_;
}

void PercolationEngine::apply(const std::vector<EdgePair>& batch) {
  for (const auto& e : batch) {
    if (!host_->has_edge(e)) throw std::invalid_argument("batch edge is not a host edge");
    current_.add_edge(e);
  }
  synced_ = (batch == pending_);
  last_batch_ = batch;
  pending_.clear();
}

std::vector<EdgePair> step_kr(const Graph& current, int r, const Graph& host) {
  PercolationEngine engine(current, r, host);
  return engine.next_batch(false);
}

PercolationTrace run(const Graph& start, int r, const Graph& host, const RunOptions& options) {
  PercolationEngine engine(start, r, host);
  const std::size_t max_steps = options.max_steps.value_or(default_max_steps(start.vertex_count()));
  PercolationTrace trace;
  bool stable = false;
  while (trace.steps.size() < max_steps) {
    auto batch = engine.next_batch(options.incremental);
    if (batch.empty()) {
      stable = true;
      break;
    }
    engine.apply(batch);
    trace.steps.push_back(std::move(batch));
  }
  if (!stable) trace.truncated = !engine.next_batch(options.incremental).empty();
  trace.running_time = trace.steps.size();
  trace.final_edge_count = engine.current().edge_count();
  trace.percolated = engine.current() == host;
  return trace;
}

Graph replay(const Graph& start, const PercolationTrace& trace) {
  Graph g = start;
  for (const auto& batch : trace.steps)
    for (const auto& e : batch) g.add_edge(e);
  return g;
}

}  // namespace slowperc
