#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <set>

#include "slowperc/constructions.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

namespace slowperc {
namespace {

using Edge = std::vector<Vertex>;

Edge sorted(Edge e) {
  std::sort(e.begin(), e.end());
  return e;
}

std::size_t overlap(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t c = 0;
  for (auto v : a) c += std::count(b.begin(), b.end(), v);
  return c;
}

// h6 ids: X = [0, n), Z = [n, n + l), Y = [n + l, 2n + l), W = [2n + l, 2n + 2l).
struct H6Ids {
  Vertex n, l;
  Vertex x(Vertex i) const { return i; }
  Vertex z(Vertex i) const { return n + i; }
  Vertex y(Vertex i) const { return n + l + i; }
  Vertex w(Vertex i) const { return 2 * n + l + i; }
};

TEST(H6, SmallestCase) {
  const auto c = build_h6(10);
  const H6Ids id{10, 30};
  EXPECT_EQ(c.hypergraph.vertex_count(), 80U);
  ASSERT_EQ(c.m(), 1U);
  EXPECT_EQ(c.hypergraph.edges()[0], sorted({id.x(0), id.x(1), id.y(1), id.z(0), id.z(1), id.w(1)}));
  EXPECT_EQ(c.f_pairs[0], EdgePair(id.x(1), id.z(1)));
  EXPECT_EQ(c.hypergraph.label(id.w(1))->cls, VertexClass::W);
}

TEST(H6, FiftyVertices) {
  const auto c = build_h6(50);
  const H6Ids id{50, 70};
  EXPECT_EQ(c.hypergraph.vertex_count(), 240U);
  ASSERT_EQ(c.m(), 25U);
  EXPECT_EQ(c.hypergraph.edges()[1], sorted({id.x(1), id.x(2), id.y(2), id.z(1), id.z(2), id.w(2)}));
  EXPECT_TRUE(check_pair_condition(c.hypergraph, c.f_pairs).passed);
}

TEST(H6, EdgesPairwiseDistinct) {
  for (std::int64_t n = 10; n <= 60; ++n) {
    const auto c = build_h6(n);
    ASSERT_EQ(c.m(), static_cast<std::size_t>(n * n / 100));
    const std::set<Edge> uniq(c.hypergraph.edges().begin(), c.hypergraph.edges().end());
    EXPECT_EQ(uniq.size(), c.m()) << "n=" << n;
  }
}

TEST(H6, XYSideIsTrianglesAroundCycle) {
  // At n = 100 there are exactly n edges, so every t mod n occurs once.
  const std::int64_t n = 100;
  const auto c = build_h6(n);
  const H6Ids id{100, 120};
  Graph expect(c.skeleton.vertex_count());
  for (Vertex t = 0; t < n; ++t) {
    const Vertex s = (t + 1) % n;
    expect.add_edge(id.x(t), id.x(s));
    expect.add_edge(id.x(t), id.y(s));
    expect.add_edge(id.x(s), id.y(s));
  }
  Graph got(c.skeleton.vertex_count());
  for (const auto& e : c.skeleton.edges()) {
    const bool xy_u = e.u < n || (e.u >= id.y(0) && e.u < id.w(0));
    const bool xy_v = e.v < n || (e.v >= id.y(0) && e.v < id.w(0));
    if (xy_u && xy_v) got.add_edge(e);
  }
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got.edge_count(), 3U * n);
}

TEST(H6, RejectsSmallN) { EXPECT_THROW(build_h6(9), std::invalid_argument); }

TEST(Chain, SingleEdge) {
  const auto c = build_chain(1);
  EXPECT_EQ(c.hypergraph.vertex_count(), 5U);
  ASSERT_EQ(c.m(), 1U);
  EXPECT_EQ(c.f_pairs[0], EdgePair(3, 4));
  Graph k5minus = Graph::complete(5);
  k5minus.remove_edge(3, 4);
  EXPECT_EQ(c.start, k5minus);
}

TEST(Chain, ThreeEdges) {
  const auto c = build_chain(3);
  EXPECT_EQ(c.hypergraph.vertex_count(), 11U);
  const std::vector<Edge> want{{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}, {6, 7, 8, 9, 10}};
  EXPECT_EQ(c.hypergraph.edges(), want);
  EXPECT_EQ(overlap(c.hypergraph.edge(0), c.hypergraph.edge(1)), 2U);
  EXPECT_EQ(overlap(c.hypergraph.edge(1), c.hypergraph.edge(2)), 2U);
  EXPECT_EQ(overlap(c.hypergraph.edge(0), c.hypergraph.edge(2)), 0U);
}

TEST(Chain, RejectsEmpty) { EXPECT_THROW(build_chain(0), std::invalid_argument); }

TEST(Hb, EdgeCountAndFirstEdge) {
  const auto h = build_hb(100, 10);
  const XyzLayout L{100};
  EXPECT_EQ(h.edge_count(), 80U);
  EXPECT_EQ(h.edges()[0], sorted({L.x(0), L.x(1), L.y(10), L.z(20), L.z(21)}));
}

TEST(Hb, ChainIntersections) {
  const std::int64_t n = 60, b = 7;
  const auto h = build_hb(n, b);
  const XyzLayout L{n};
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
      const auto a = h.edge(i), c = h.edge(j);
      if (j == i + 1) {
        Edge shared;
        std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(shared));
        EXPECT_EQ(shared, sorted({L.x(static_cast<std::int64_t>(i) + 1), L.z(static_cast<std::int64_t>(i) + 2 * b + 1)}));
      } else {
        EXPECT_EQ(overlap(a, c), 0U);
      }
    }
}

TEST(Hb, RejectsBadOffsets) {
  EXPECT_THROW(build_hb(10, 0), std::invalid_argument);
  EXPECT_THROW(build_hb(10, 6), std::invalid_argument);
}

TEST(HB, SingletonIsHb) { EXPECT_EQ(build_hB(100, ApSet(100, {10})).edges(), build_hb(100, 10).edges()); }

TEST(HB, TwoChainsAreDisjoint) {
  const auto h = build_hB(100, ApSet(100, {10, 20}));
  EXPECT_EQ(h.edge_count(), 140U);
  const std::set<Edge> uniq(h.edges().begin(), h.edges().end());
  EXPECT_EQ(uniq.size(), 140U);
  const auto h10 = build_hb(100, 10).edges();
  const auto h20 = build_hb(100, 20).edges();
  EXPECT_TRUE(std::equal(h10.begin(), h10.end(), h.edges().begin()));
  EXPECT_TRUE(std::equal(h20.begin(), h20.end(), h.edges().begin() + 80));
}

TEST(HB, OutputPairsFollowEachChain) {
  const auto c = build_hB_output(100, ApSet(100, {10, 20}));
  ASSERT_EQ(c.f_pairs.size(), 140U);
  for (std::size_t i = 0; i < c.m(); ++i) {
    EXPECT_TRUE(c.hypergraph.edge_contains(i, c.f_pairs[i].u));
    EXPECT_TRUE(c.hypergraph.edge_contains(i, c.f_pairs[i].v));
  }
}

TEST(Hprime, TwoOffsetsWorkedExample) {
  const XyzLayout L{100};
  const auto r = build_hprime_detailed(100, ApSet(100, {10, 20}));
  ASSERT_EQ(r.segments.size(), 2U);
  EXPECT_EQ(r.segments[0].b, 10);
  EXPECT_EQ(r.segments[0].s, 0);
  EXPECT_EQ(r.segments[0].l, 80);
  EXPECT_EQ(r.segments[1].b, 20);
  EXPECT_EQ(r.segments[1].s, 1);
  EXPECT_EQ(r.segments[1].l, 59);
  EXPECT_TRUE(r.skipped.empty());
  EXPECT_EQ(r.output.m(), 141U);
  EXPECT_EQ(r.output.hypergraph.vertex_count(), L.base_vertices() + 7);
  // The last pair is the far endpoint of the last kept chain.
  EXPECT_EQ(r.output.f_pairs.back(), EdgePair(L.x(59), L.z(59 + 40)));
}

TEST(Hprime, SingleOffsetIsTheFullChain) {
  const std::int64_t n = 100, b = 10;
  const XyzLayout L{n};
  const auto c = build_hprime(n, ApSet(n, {b}));
  EXPECT_EQ(c.hypergraph.edges(), build_hb(n, b).edges());
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(c.m()); ++i)
    EXPECT_EQ(c.f_pairs[static_cast<std::size_t>(i)], EdgePair(L.x(i + 1), L.z(i + 2 * b + 1)));
}

TEST(Hprime, EndpointPairsAndGadgetsDisjoint) {
  const std::int64_t n = 400;
  const XyzLayout L{n};
  const auto r = build_hprime_detailed(n, ApSet(40, {1, 2, 4, 5}).scaled(10));
  std::vector<Vertex> used;
  for (const auto& s : r.segments) {
    for (auto i : {s.s, s.l}) {
      used.push_back(L.x(i));
      used.push_back(L.z(i + 2 * s.b));
    }
  }
  for (const auto& [v, label] : r.output.hypergraph.labels())
    if (label.cls == VertexClass::U) used.push_back(v);
  EXPECT_EQ(used.size(), 4 * r.segments.size() + 7 * (r.segments.size() - 1));
  const std::set<Vertex> uniq(used.begin(), used.end());
  EXPECT_EQ(uniq.size(), used.size());
  const auto k = static_cast<std::int64_t>(r.segments.size());
  EXPECT_GE(static_cast<std::int64_t>(r.output.m()), n * k / 2 - 8 * k * k);
}

TEST(Hprime, Preconditions) {
  EXPECT_THROW(build_hprime(100, ApSet(100, {15})), std::invalid_argument);          // not a multiple of 10
  EXPECT_THROW(build_hprime(100, ApSet(100, {10, 20, 30})), std::invalid_argument);  // 1,2,3 is a progression
  EXPECT_THROW(build_hprime(100, ApSet(100, {30})), std::invalid_argument);          // beyond n/4
  EXPECT_THROW(build_hprime(100, ApSet(100, {})), std::invalid_argument);
}

TEST(StartingGraph, H6Counts) {
  const auto c = build_h6(50);
  EXPECT_EQ(c.start.edge_count(), c.skeleton.edge_count() - 25);
  EXPECT_EQ(starting_graph(c), c.start);
}

TEST(StartingGraph, H6SmallestIsK6MinusEdge) {
  const auto c = build_h6(10);
  const H6Ids id{10, 30};
  EXPECT_EQ(c.start.edge_count(), 14U);
  EXPECT_FALSE(c.start.has_edge(id.x(1), id.z(1)));
  EXPECT_TRUE(c.skeleton.has_edge(id.x(1), id.z(1)));
}

TEST(StartingGraph, RejectsNonSkeletonPair) {
  UniformHypergraph h(6, 3);
  h.add_edge({0, 1, 2});
  EXPECT_THROW(starting_graph(h, {EdgePair(0, 5)}), std::logic_error);
}

TEST(Minimal, SizesAndSpeed) {
  Graph k5minus = Graph::complete(5);
  k5minus.remove_edge(3, 4);
  EXPECT_EQ(minimal_percolating(5, 5), k5minus);
  EXPECT_EQ(minimal_percolating(7, 4).edge_count(), 11U);
  EXPECT_EQ(run(minimal_percolating(6, 4), 4, Graph::complete(6)).running_time, 1U);
  EXPECT_THROW(minimal_percolating(4, 5), std::invalid_argument);
  EXPECT_THROW(minimal_percolating(5, 2), std::invalid_argument);
}

TEST(Minimal, SizeFormula) {
  for (std::int64_t n = 3; n <= 12; ++n)
    for (int r = 3; r <= n; ++r) {
      const auto k = n - r + 2;
      EXPECT_EQ(static_cast<std::int64_t>(minimal_percolating(n, r).edge_count()), n * (n - 1) / 2 - k * (k - 1) / 2);
    }
}

}  // namespace
}  // namespace slowperc
