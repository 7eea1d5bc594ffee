#include "slowperc/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace slowperc {

std::string VertexLabel::class_name() const {
  switch (cls) {
    case VertexClass::X: return "X";
    case VertexClass::Y: return "Y";
    case VertexClass::Z: return "Z";
    case VertexClass::W: return "W";
    case VertexClass::U: return "U" + std::to_string(group);
  }
  return "?";
}

VertexLabel VertexLabel::parse(const std::string& name, int index) {
  if (name.empty()) throw std::invalid_argument("empty vertex class");
  VertexLabel l;
  l.index = index;
  switch (name[0]) {
    case 'X': l.cls = VertexClass::X; break;
    case 'Y': l.cls = VertexClass::Y; break;
    case 'Z': l.cls = VertexClass::Z; break;
    case 'W': l.cls = VertexClass::W; break;
    case 'U':
      l.cls = VertexClass::U;
      if (name.size() < 2) throw std::invalid_argument("U class needs a group number");
      l.group = std::stoi(name.substr(1));
      return l;
    default: throw std::invalid_argument("unknown vertex class: " + name);
  }
  if (name.size() != 1) throw std::invalid_argument("unknown vertex class: " + name);
  return l;
}

UniformHypergraph::UniformHypergraph(std::size_t vertex_count, int uniformity) : n_(vertex_count), r_(uniformity) {
  if (uniformity < 2) throw std::invalid_argument("hypergraph uniformity must be at least 2");
}

std::size_t UniformHypergraph::add_edge(std::vector<Vertex> vertices) {
  if (vertices.size() != static_cast<std::size_t>(r_))
    throw std::invalid_argument("hyperedge has " + std::to_string(vertices.size()) + " vertices, expected " +
                                std::to_string(r_));
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("hyperedge vertices must be distinct");
  if (vertices.back() >= n_) throw std::out_of_range("hyperedge vertex " + std::to_string(vertices.back()) +
                                                     " out of range");
  edges_.push_back(std::move(vertices));
  return edges_.size() - 1;
}

bool UniformHypergraph::edge_contains(std::size_t i, Vertex v) const {
  return std::binary_search(edges_[i].begin(), edges_[i].end(), v);
}

void UniformHypergraph::set_label(Vertex v, VertexLabel label) {
  if (v >= n_) throw std::out_of_range("label for vertex out of range");
  labels_[v] = label;
}

std::optional<VertexLabel> UniformHypergraph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Graph two_skeleton(const UniformHypergraph& h) {
  Graph g(h.vertex_count());
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) g.add_edge(e[a], e[b]);
  return g;
}

std::vector<std::vector<std::size_t>> incidence_lists(const UniformHypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (Vertex v : h.edge(i)) inc[v].push_back(i);
  return inc;
}

EdgeIndex::EdgeIndex(const UniformHypergraph& h) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) index_.emplace(h.edges()[i], i);
}

std::optional<std::size_t> EdgeIndex::find(std::span<const Vertex> sorted_vertices) const {
  auto it = index_.find(std::vector<Vertex>(sorted_vertices.begin(), sorted_vertices.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace slowperc
