#include "slowperc/graph.hpp"

#include <stdexcept>
#include <string>

namespace slowperc {

EdgePair::EdgePair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
  if (a == b) throw std::invalid_argument("edge pair endpoints must be distinct: " + std::to_string(a));
}

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_(bits::words_for(vertex_count)), data_(vertex_count * words_, 0) {}

Graph Graph::complete(std::size_t vertex_count) {
  Graph g(vertex_count);
  for (Vertex u = 0; u < vertex_count; ++u)
    for (Vertex v = u + 1; v < vertex_count; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const EdgePair> edges) {
  Graph g(vertex_count);
  for (const auto& e : edges) g.add_edge(e);
  return g;
}

void Graph::check_vertex(Vertex u) const {
  if (u >= n_)
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range for graph on " + std::to_string(n_) +
                            " vertices");
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_edge(u, v)) return false;
  bits::set(mutable_row(u), v);
  bits::set(mutable_row(v), u);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return false;
  bits::reset(mutable_row(u), v);
  bits::reset(mutable_row(v), u);
  --m_;
  return true;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  bits::for_each(row(u), [&](Vertex v) { out.push_back(v); });
  return out;
}

std::vector<EdgePair> Graph::edges() const {
  std::vector<EdgePair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    bits::for_each(row(u), [&](Vertex v) {
      if (v > u) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] & ~other.data_[i]) return false;
  return true;
}

Graph cone(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n + 1);
  for (const auto& e : g.edges()) out.add_edge(e);
  const auto apex = static_cast<Vertex>(n);
  for (Vertex u = 0; u < n; ++u) out.add_edge(u, apex);
  return out;
}

std::vector<std::vector<Vertex>> cliques_in_subset(const Graph& g, const VertexSet& candidates, int k) {
  if (k < 0) throw std::invalid_argument("clique size must be non-negative");
  if (candidates.universe() != g.vertex_count())
    throw std::invalid_argument("candidate set universe does not match graph");
  std::vector<std::vector<Vertex>> out;
  CliqueFinder finder(g);
  finder.enumerate(candidates.words(), k, [&](const std::vector<Vertex>& c) { out.push_back(c); });
  return out;
}

std::span<Word> CliqueFinder::scratch(std::size_t depth) {
  if (scratch_.size() <= depth) scratch_.resize(depth + 1);
  auto& s = scratch_[depth];
  s.resize(g_->words_per_row());
  return s;
}

bool CliqueFinder::exists(std::span<const Word> candidates, int k) {
  if (k <= 0) return true;
  return exists_rec(candidates, k, 0);
}

bool CliqueFinder::exists_rec(std::span<const Word> cand, int k, std::size_t depth) {
  if (k == 1) return bits::any(cand);
  if (bits::popcount(cand) < static_cast<std::size_t>(k)) return false;
  bool found = false;
  bits::for_each(cand, [&](Vertex v) {
    auto next = scratch(depth);
    const std::size_t c = bits::and_into(next, cand, g_->row(v));
    if (c < static_cast<std::size_t>(k - 1)) return true;
    bits::clear_through(next, v);
    if (exists_rec(next, k - 1, depth + 1)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace slowperc
