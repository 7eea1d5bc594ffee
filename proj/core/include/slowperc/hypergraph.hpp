#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slowperc/graph.hpp"

namespace slowperc {

enum class VertexClass { X, Y, Z, W, U };

// Structured name of a construction vertex, e.g. x_3 or the 5th vertex of U_2.
struct VertexLabel {
  VertexClass cls = VertexClass::X;
  int group = 0;  // k for U_k, otherwise 0
  int index = 0;

  // "X", "Y", "Z", "W" or "U<k>".
  std::string class_name() const;
  static VertexLabel parse(const std::string& class_name, int index);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// r-uniform hypergraph. Each edge is kept sorted; the edge list keeps insertion
// order, which is the ordering e_1..e_m the process analysis depends on.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  UniformHypergraph(std::size_t vertex_count, int uniformity);

  std::size_t vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Validates size and range; returns the index of the new edge.
  std::size_t add_edge(std::vector<Vertex> vertices);
  std::span<const Vertex> edge(std::size_t i) const { return edges_[i]; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  bool edge_contains(std::size_t i, Vertex v) const;

  void set_label(Vertex v, VertexLabel label);
  std::optional<VertexLabel> label(Vertex v) const;
  const std::map<Vertex, VertexLabel>& labels() const { return labels_; }

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  std::size_t n_ = 0;
  int r_ = 2;
  std::vector<std::vector<Vertex>> edges_;
  std::map<Vertex, VertexLabel> labels_;
};

// uv is an edge iff {u,v} lies inside some hyperedge.
Graph two_skeleton(const UniformHypergraph& h);

// Vertex -> indices of the hyperedges containing it, ascending.
std::vector<std::vector<std::size_t>> incidence_lists(const UniformHypergraph& h);

// Lookup from a sorted vertex set to the first hyperedge equal to it.
class EdgeIndex {
 public:
  explicit EdgeIndex(const UniformHypergraph& h);
  std::optional<std::size_t> find(std::span<const Vertex> sorted_vertices) const;

 private:
  std::map<std::vector<Vertex>, std::size_t> index_;
};

}  // namespace slowperc
