#include "slowperc/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "slowperc/verify.hpp"

namespace slowperc {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

Graph starting_graph(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs) {
  Graph g = two_skeleton(h);
  for (const auto& f : f_pairs) {
    if (f.v >= g.vertex_count() || !g.has_edge(f))
      throw std::logic_error("f-pair {" + std::to_string(f.u) + "," + std::to_string(f.v) +
                             "} is not an edge of the 2-skeleton");
    g.remove_edge(f);
  }
  return g;
}

Graph starting_graph(const ConstructionOutput& c) { return starting_graph(c.hypergraph, c.f_pairs); }

ConstructionOutput assemble(UniformHypergraph h, std::vector<EdgePair> f_pairs, ConstructionMeta meta) {
  if (f_pairs.size() != h.edge_count())
    throw std::logic_error("construction has " + std::to_string(h.edge_count()) + " edges but " +
                           std::to_string(f_pairs.size()) + " f-pairs");
  for (std::size_t i = 0; i < f_pairs.size(); ++i)
    if (!h.edge_contains(i, f_pairs[i].u) || !h.edge_contains(i, f_pairs[i].v))
      throw std::logic_error("f-pair " + std::to_string(i) + " is not inside its hyperedge");
  ConstructionOutput out;
  out.skeleton = two_skeleton(h);
  out.start = starting_graph(h, f_pairs);
  out.hypergraph = std::move(h);
  out.f_pairs = std::move(f_pairs);
  out.meta = std::move(meta);
  return out;
}

ConstructionOutput build_h6(std::int64_t n) {
  if (n < 10) throw std::invalid_argument("build_h6 needs n >= 10, got " + std::to_string(n));
  const std::int64_t l = n + 20;
  const std::int64_t m = n * n / 100;
  auto x = [&](std::int64_t i) { return static_cast<Vertex>(i % n); };
  auto z = [&](std::int64_t i) { return static_cast<Vertex>(n + i % l); };
  auto y = [&](std::int64_t i) { return static_cast<Vertex>(n + l + i % n); };
  auto w = [&](std::int64_t i) { return static_cast<Vertex>(2 * n + l + i % l); };

  UniformHypergraph h(static_cast<std::size_t>(4 * n + 40), 6);
  for (std::int64_t i = 0; i < n; ++i) {
    h.set_label(x(i), {VertexClass::X, 0, static_cast<int>(i)});
    h.set_label(y(i), {VertexClass::Y, 0, static_cast<int>(i)});
  }
  for (std::int64_t i = 0; i < l; ++i) {
    h.set_label(z(i), {VertexClass::Z, 0, static_cast<int>(i)});
    h.set_label(w(i), {VertexClass::W, 0, static_cast<int>(i)});
  }

  std::vector<EdgePair> f;
  f.reserve(static_cast<std::size_t>(m));
  for (std::int64_t t = 0; t < m; ++t) {
    h.add_edge({x(t), x(t + 1), y(t + 1), z(t), z(t + 1), w(t + 1)});
    f.emplace_back(x(t + 1), z(t + 1));
  }
  return assemble(std::move(h), std::move(f), {"h6", {{"n", std::to_string(n)}}});
}

ConstructionOutput build_chain(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("build_chain needs m >= 1, got " + std::to_string(m));
  UniformHypergraph h(static_cast<std::size_t>(3 * m + 2), 5);
  for (std::int64_t i = 0; i < 3 * m + 2; ++i)
    h.set_label(static_cast<Vertex>(i), {VertexClass::W, 0, static_cast<int>(i + 1)});
  std::vector<EdgePair> f;
  // e_i (1-based) = {w_{3i-2}, ..., w_{3i+2}} = ids 3i-3 .. 3i+1.
  for (std::int64_t i = 1; i <= m; ++i) {
    std::vector<Vertex> e;
    for (std::int64_t k = 3 * i - 3; k <= 3 * i + 1; ++k) e.push_back(static_cast<Vertex>(k));
    h.add_edge(std::move(e));
    f.emplace_back(static_cast<Vertex>(3 * i), static_cast<Vertex>(3 * i + 1));
  }
  return assemble(std::move(h), std::move(f), {"chain", {{"m", std::to_string(m)}}});
}

namespace {

void label_xyz(UniformHypergraph& h, const XyzLayout& lay) {
  for (std::int64_t i = 0; i <= lay.n; ++i) {
    h.set_label(lay.x(i), {VertexClass::X, 0, static_cast<int>(i)});
    h.set_label(lay.y(i), {VertexClass::Y, 0, static_cast<int>(i)});
    h.set_label(lay.z(i), {VertexClass::Z, 0, static_cast<int>(i)});
  }
}

std::vector<Vertex> chain_edge(const XyzLayout& lay, std::int64_t i, std::int64_t b) {
  return {lay.x(i), lay.x(i + 1), lay.y(i + b), lay.z(i + 2 * b), lay.z(i + 2 * b + 1)};
}

// f^j_b = {x_j, z_{j+2b}}
EdgePair endpoint_pair(const XyzLayout& lay, std::int64_t j, std::int64_t b) {
  return {lay.x(j), lay.z(j + 2 * b)};
}

void check_hb_range(std::int64_t n, std::int64_t b) {
  if (b < 1 || n - 2 * b - 1 < 0)
    throw std::invalid_argument("chain offset b=" + std::to_string(b) + " out of range for n=" + std::to_string(n));
}

}  // namespace

UniformHypergraph build_hb(std::int64_t n, std::int64_t b) {
  check_hb_range(n, b);
  XyzLayout lay{n};
  UniformHypergraph h(lay.base_vertices(), 5);
  label_xyz(h, lay);
  for (std::int64_t i = 0; i <= n - 2 * b - 1; ++i) h.add_edge(chain_edge(lay, i, b));
  return h;
}

UniformHypergraph build_hB(std::int64_t n, const ApSet& B) {
  XyzLayout lay{n};
  UniformHypergraph h(lay.base_vertices(), 5);
  label_xyz(h, lay);
  for (auto b : B.elements) {
    if (b > n / 2 - 1) throw std::invalid_argument("B must lie within [floor(n/2)-1]; got " + std::to_string(b));
    check_hb_range(n, b);
    for (std::int64_t i = 0; i <= n - 2 * b - 1; ++i) h.add_edge(chain_edge(lay, i, b));
  }
  return h;
}

ConstructionOutput build_hB_output(std::int64_t n, const ApSet& B) {
  UniformHypergraph h = build_hB(n, B);
  XyzLayout lay{n};
  std::vector<EdgePair> f;
  for (auto b : B.elements)
    for (std::int64_t i = 0; i <= n - 2 * b - 1; ++i) f.push_back(endpoint_pair(lay, i + 1, b));
  return assemble(std::move(h), std::move(f), {"hB", {{"n", std::to_string(n)}, {"B", join(B.elements)}}});
}

HprimeResult build_hprime_detailed(std::int64_t n, const ApSet& B) {
  if (B.elements.empty()) throw std::invalid_argument("hprime needs a non-empty B");
  std::vector<std::int64_t> reduced;
  for (auto b : B.elements) {
    if (b % 10 != 0) throw std::invalid_argument("hprime needs B = 10*B'; " + std::to_string(b) + " is not a multiple of 10");
    if (b < 1 || b > n / 4)
      throw std::invalid_argument("hprime needs B within [floor(n/4)] = [" + std::to_string(n / 4) + "]; got " +
                                  std::to_string(b));
    reduced.push_back(b / 10);
  }
  const ApSet reduced_set(reduced.back(), reduced);
  if (const auto rep = check_ap_free(reduced_set); !rep.passed)
    throw std::invalid_argument("hprime needs B/10 to be 3-AP-free; " + rep.witness->to_line());

  const XyzLayout lay{n};
  HprimeResult result;
  std::set<Vertex> blocked;
  auto is_free = [&](const EdgePair& p) { return !blocked.count(p.u) && !blocked.count(p.v); };

  for (auto b : B.elements) {
    const std::int64_t last = n - 2 * b;
    HprimeSegment seg{b, 0, last};
    if (!result.segments.empty()) {
      seg.s = 0;
      while (seg.s <= last && !is_free(endpoint_pair(lay, seg.s, b))) ++seg.s;
      seg.l = last;
      while (seg.l >= 0 && !is_free(endpoint_pair(lay, seg.l, b))) --seg.l;
    }
    if (seg.l - seg.s < 1) {
      result.skipped.push_back(b);
      continue;
    }
    for (const auto& p : {endpoint_pair(lay, seg.s, b), endpoint_pair(lay, seg.l, b)}) {
      blocked.insert(p.u);
      blocked.insert(p.v);
    }
    result.segments.push_back(seg);
  }

  if (result.segments.empty()) throw std::invalid_argument("hprime: no chain segment survived pruning");
  const std::size_t gadgets = result.segments.size() - 1;
  UniformHypergraph h(lay.base_vertices() + 7 * gadgets, 5);
  label_xyz(h, lay);
  std::vector<EdgePair> f;

  for (std::size_t j = 0; j < result.segments.size(); ++j) {
    const auto& seg = result.segments[j];
    for (std::int64_t i = seg.s; i < seg.l; ++i) {
      h.add_edge(chain_edge(lay, i, seg.b));
      f.push_back(endpoint_pair(lay, i + 1, seg.b));
    }
    if (j + 1 == result.segments.size()) break;

    // Turning gadget: a length-3 chain on f^{l_j} (x, z), U_{j+1}, f^{s_{j+1}} (x, z).
    const auto& next = result.segments[j + 1];
    const EdgePair from = endpoint_pair(lay, seg.l, seg.b);
    const EdgePair to = endpoint_pair(lay, next.s, next.b);
    std::vector<Vertex> u(7);
    for (std::size_t k = 0; k < 7; ++k) {
      u[k] = static_cast<Vertex>(lay.base_vertices() + 7 * j + k);
      h.set_label(u[k], {VertexClass::U, static_cast<int>(j + 1), static_cast<int>(k)});
    }
    h.add_edge({from.u, from.v, u[0], u[1], u[2]});
    f.emplace_back(u[1], u[2]);
    h.add_edge({u[1], u[2], u[3], u[4], u[5]});
    f.emplace_back(u[4], u[5]);
    h.add_edge({u[4], u[5], u[6], to.u, to.v});
    f.push_back(to);
  }

  // Counting guarantees for this construction.
  const auto size_b = static_cast<double>(B.size());
  const double edge_floor = static_cast<double>(n) * size_b / 2.0 - 8.0 * size_b * size_b;
  if (static_cast<double>(h.edge_count()) < edge_floor)
    throw std::logic_error("hprime has " + std::to_string(h.edge_count()) + " edges, below n|B|/2 - 8|B|^2");
  if (h.vertex_count() > static_cast<std::size_t>(3 * n + 3 + 7 * (static_cast<std::int64_t>(B.size()) - 1)))
    throw std::logic_error("hprime vertex count exceeds 3n+3+7(|B|-1)");

  result.output = assemble(std::move(h), std::move(f), {"hprime", {{"n", std::to_string(n)}, {"B", join(B.elements)}}});
  return result;
}

ConstructionOutput build_hprime(std::int64_t n, const ApSet& B) { return build_hprime_detailed(n, B).output; }

Graph minimal_percolating(std::int64_t n, int r) {
  if (r < 3 || r > n) throw std::invalid_argument("minimal_percolating needs 3 <= r <= n");
  Graph g = Graph::complete(static_cast<std::size_t>(n));
  const auto first_removed = static_cast<Vertex>(r - 2);
  for (Vertex u = first_removed; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.remove_edge(u, v);
  return g;
}

}  // namespace slowperc
