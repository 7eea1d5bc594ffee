#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slowperc/apset.hpp"
#include "slowperc/graph.hpp"
#include "slowperc/hypergraph.hpp"

namespace slowperc {

struct ConstructionMeta {
  std::string name;
  std::map<std::string, std::string> params;
};

// A hypergraph with ordered edges e_0..e_{m-1}, one designated pair f_i per edge,
// the 2-skeleton, and the starting graph (skeleton minus every f_i).
struct ConstructionOutput {
  UniformHypergraph hypergraph;
  std::vector<EdgePair> f_pairs;
  Graph skeleton;
  Graph start;
  ConstructionMeta meta;

  std::size_t m() const { return hypergraph.edge_count(); }
};

// Skeleton minus the f-pairs. Throws if some f_i is not a skeleton edge.
Graph starting_graph(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs);
Graph starting_graph(const ConstructionOutput& c);

// Fills skeleton and start; checks |f| = |E| and f_i within e_i.
ConstructionOutput assemble(UniformHypergraph h, std::vector<EdgePair> f_pairs, ConstructionMeta meta);

// 6-uniform construction on X, Z, Y, W (|X| = |Y| = n, |Z| = |W| = n + 20) with
// floor(n^2/100) edges e_t = {x_t, x_{t+1}, y_{t+1}, z_t, z_{t+1}, w_{t+1}}
// (X and Y indices mod n, Z and W mod n+20) and f_t = {x_{t+1}, z_{t+1}}.
// Vertex ids: X, then Z, then Y, then W. Requires n >= 10.
ConstructionOutput build_h6(std::int64_t n);

// Chain of m 5-edges on w_1..w_{3m+2} (ids 0..3m+1); consecutive edges share
// two vertices, which are the f-pairs; the last f-pair is {w_{3m+1}, w_{3m+2}}.
ConstructionOutput build_chain(std::int64_t m);

// Ids of x_i, y_i, z_i in the X|Y|Z layout shared by build_hb / build_hB /
// build_hprime (each block has n+1 vertices).
struct XyzLayout {
  std::int64_t n;
  Vertex x(std::int64_t i) const { return static_cast<Vertex>(i); }
  Vertex y(std::int64_t i) const { return static_cast<Vertex>(n + 1 + i); }
  Vertex z(std::int64_t i) const { return static_cast<Vertex>(2 * (n + 1) + i); }
  std::size_t base_vertices() const { return static_cast<std::size_t>(3 * (n + 1)); }
};

// Chain E_{i,b} = {x_i, x_{i+1}, y_{i+b}, z_{i+2b}, z_{i+2b+1}}, 0 <= i <= n-2b-1.
UniformHypergraph build_hb(std::int64_t n, std::int64_t b);

// Union of build_hb(n, b) over b in B, grouped by b ascending. B within [floor(n/2)-1].
UniformHypergraph build_hB(std::int64_t n, const ApSet& B);

// build_hB with per-chain consecutive-intersection f-pairs. The pair condition
// generally fails at chain boundaries; useful as a contrast to build_hprime.
ConstructionOutput build_hB_output(std::int64_t n, const ApSet& B);

// Pruned chains joined by 3-edge turning gadgets on fresh 7-vertex sets so that
// the whole edge list is one chain-like sequence. B must be 10 * (3-AP-free set)
// and lie within [floor(n/4)].
struct HprimeSegment {
  std::int64_t b = 0;
  std::int64_t s = 0;  // first chain index kept
  std::int64_t l = 0;  // chain edges s..l-1 are kept
};

struct HprimeResult {
  ConstructionOutput output;
  std::vector<HprimeSegment> segments;
  std::vector<std::int64_t> skipped;  // b values with no feasible (s, l)
};

HprimeResult build_hprime_detailed(std::int64_t n, const ApSet& B);
ConstructionOutput build_hprime(std::int64_t n, const ApSet& B);

// K_n minus the clique on its last n-r+2 vertices. 3 <= r <= n.
Graph minimal_percolating(std::int64_t n, int r);

}  // namespace slowperc
