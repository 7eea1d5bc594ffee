#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "slowperc/bitset.hpp"

namespace slowperc {

// Unordered pair of distinct vertices, stored with u < v.
struct EdgePair {
  Vertex u = 0;
  Vertex v = 1;

  EdgePair() = default;
  EdgePair(Vertex a, Vertex b);

  bool contains(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Undirected simple graph on vertices 0..n-1 as a dense bit-matrix. Row u is the
// neighbourhood of u. Symmetry and loop-freeness are maintained by add/remove.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  static Graph complete(std::size_t vertex_count);
  static Graph from_edges(std::size_t vertex_count, std::span<const EdgePair> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  bool has_edge(Vertex u, Vertex v) const { return bits::test(row(u), v); }
  bool has_edge(const EdgePair& e) const { return has_edge(e.u, e.v); }
  // Return true if the edge was absent.
  bool add_edge(Vertex u, Vertex v);
  bool add_edge(const EdgePair& e) { return add_edge(e.u, e.v); }
  bool remove_edge(Vertex u, Vertex v);
  bool remove_edge(const EdgePair& e) { return remove_edge(e.u, e.v); }

  std::span<const Word> row(Vertex u) const { return {data_.data() + u * words_, words_}; }
  std::size_t degree(Vertex u) const { return bits::popcount(row(u)); }
  std::vector<Vertex> neighbors(Vertex u) const;

  // Edges sorted by (u, v).
  std::vector<EdgePair> edges() const;

  // Every edge of *this is an edge of other (same vertex count required).
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::span<Word> mutable_row(Vertex u) { return {data_.data() + u * words_, words_}; }
  void check_vertex(Vertex u) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> data_;
};

// Graph on n+1 vertices; the new vertex n is joined to every original vertex.
Graph cone(const Graph& g);

// Every k-subset of `candidates` spanning a clique in g, in lexicographic order.
std::vector<std::vector<Vertex>> cliques_in_subset(const Graph& g, const VertexSet& candidates, int k);

// Depth-first clique search restricted to a candidate bit-vector. Keeps per-depth
// scratch rows so repeated queries on the same graph do not allocate.
class CliqueFinder {
 public:
  explicit CliqueFinder(const Graph& g) : g_(&g) {}

  // True if `candidates` contains a k-clique of g.
  bool exists(std::span<const Word> candidates, int k);

  // Calls visit(clique) for every k-clique inside `candidates`, vertices
  // ascending, cliques in lexicographic order. If visit returns bool, false
  // stops the enumeration.
  template <typename F>
  void enumerate(std::span<const Word> candidates, int k, F&& visit) {
    if (k < 0) return;
    std::vector<Vertex> stack;
    stack.reserve(static_cast<std::size_t>(k));
    enumerate_rec(candidates, k, 0, stack, visit);
  }

 private:
  std::span<Word> scratch(std::size_t depth);

  bool exists_rec(std::span<const Word> cand, int k, std::size_t depth);

  template <typename F>
  bool enumerate_rec(std::span<const Word> cand, int k, std::size_t depth, std::vector<Vertex>& stack, F& visit) {
    if (k == 0) {
      if constexpr (std::is_same_v<decltype(visit(std::as_const(stack))), bool>) {
        return visit(std::as_const(stack));
      } else {
        visit(std::as_const(stack));
        return true;
      }
    }
    if (bits::popcount(cand) < static_cast<std::size_t>(k)) return true;
    bool keep_going = true;
    bits::for_each(cand, [&](Vertex v) {
      auto next = scratch(depth);
      bits::and_into(next, cand, g_->row(v));
      bits::clear_through(next, v);
      stack.push_back(v);
      keep_going = enumerate_rec(next, k - 1, depth + 1, stack, visit);
      stack.pop_back();
      return keep_going;
    });
    return keep_going;
  }

  const Graph* g_;
  std::vector<std::vector<Word>> scratch_;
};

}  // namespace slowperc
