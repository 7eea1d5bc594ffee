#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "slowperc/constructions.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

namespace slowperc {
namespace {

using Values = std::vector<std::int64_t>;

UniformHypergraph two_overlapping_five_edges() {
  UniformHypergraph h(8, 5);
  h.add_edge({1, 2, 3, 4, 5});
  h.add_edge({3, 4, 5, 6, 7});
  return h;
}

ConstructionOutput tampered_chain() {
  auto c = build_chain(3);
  c.f_pairs[0] = EdgePair(0, 1);
  return c;
}

TEST(InducedFree, ChainAndH6Pass) {
  EXPECT_TRUE(check_induced_free(build_chain(3).hypergraph, 5).passed);
  EXPECT_TRUE(check_induced_free(build_h6(20).hypergraph, 6).passed);
}

TEST(InducedFree, OverlappingEdgesFail) {
  const auto h = two_overlapping_five_edges();
  const auto rep = check_induced_free(h, 5, {.collect_all = true});
  ASSERT_FALSE(rep.passed);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->kind, WitnessKind::VertexSet);
  EXPECT_TRUE(witness_is_valid(h, 5, *rep.witness));
  // Every r-set made of one vertex from each side plus the shared triple
  // misses only the cross pair.
  const std::vector<Values> want{{1, 3, 4, 5, 6}, {1, 3, 4, 5, 7}, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 7}};
  std::vector<Values> got;
  for (const auto& w : rep.all_witnesses) {
    EXPECT_TRUE(witness_is_valid(h, 5, w));
    got.push_back(w.values);
  }
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(*rep.witness, rep.all_witnesses.front());
}

TEST(InducedFree, WitnessLine) {
  const auto rep = check_induced_free(two_overlapping_five_edges(), 5);
  EXPECT_EQ(rep.witness->to_line(), "WITNESS vertex-set 1 3 4 5 6");
}

TEST(InducedFree, AgreesWithNaiveScan) {
  std::mt19937_64 rng(314);
  int failures = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + rng() % 9;
    const int r = 3 + static_cast<int>(rng() % 3);
    if (static_cast<std::size_t>(r) > n) continue;
    UniformHypergraph h(n, r);
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < m; ++i) {
      std::vector<Vertex> pool(n);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(r));
      h.add_edge(pool);
    }
    const auto rep = check_induced_free(h, r);
    ASSERT_EQ(rep.passed, testing::naive_induced_free(h, r)) << "trial " << trial;
    if (!rep.passed) {
      ++failures;
      ASSERT_TRUE(witness_is_valid(h, r, *rep.witness));
    }
  }
  EXPECT_GT(failures, 20);  // the generator exercises both outcomes
}

TEST(PairCondition, Passes) {
  const auto c = build_chain(3);
  EXPECT_TRUE(check_pair_condition(c.hypergraph, c.f_pairs).passed);
  const auto h = build_h6(50);
  EXPECT_TRUE(check_pair_condition(h.hypergraph, h.f_pairs).passed);
}

TEST(PairCondition, TamperedChainFails) {
  const auto c = tampered_chain();
  const auto rep = check_pair_condition(c.hypergraph, c.f_pairs);
  ASSERT_FALSE(rep.passed);
  EXPECT_EQ(rep.witness->kind, WitnessKind::IndexPair);
  EXPECT_EQ(rep.witness->values, (Values{0, 1}));
  EXPECT_TRUE(witness_is_valid(c.hypergraph, c.f_pairs, *rep.witness));
}

TEST(PairCondition, ChainBoundariesOfUnionFail) {
  const auto c = build_hB_output(100, ApSet(100, {10, 20}));
  const auto rep = check_pair_condition(c.hypergraph, c.f_pairs);
  ASSERT_FALSE(rep.passed);
  EXPECT_EQ(rep.witness->values, (Values{79, 80}));
  EXPECT_TRUE(witness_is_valid(c.hypergraph, c.f_pairs, *rep.witness));
}

TEST(PairCondition, RandomTamperingYieldsValidWitnesses) {
  std::mt19937_64 rng(8);
  const auto base = build_chain(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = base.f_pairs;
    const std::size_t i = rng() % f.size();
    const auto e = base.hypergraph.edge(rng() % base.m());
    const auto a = e[rng() % 5], b = e[rng() % 5];
    if (a == b) continue;
    f[i] = EdgePair(a, b);
    const auto rep = check_pair_condition(base.hypergraph, f);
    if (!rep.passed) {
      ASSERT_TRUE(witness_is_valid(base.hypergraph, f, *rep.witness));
    }
    // A witness that does not describe a violation must be rejected.
    if (rep.passed) {
      ASSERT_FALSE(witness_is_valid(base.hypergraph, f, Witness{WitnessKind::IndexPair, {0, 0}}));
    }
  }
}

TEST(PairCondition, SizeMismatchRejected) {
  const auto c = build_chain(3);
  auto f = c.f_pairs;
  f.pop_back();
  EXPECT_THROW(check_pair_condition(c.hypergraph, f), std::invalid_argument);
}

TEST(ResidueLemma, PassesFromTen) {
  for (std::int64_t n : {10, 11, 20, 30, 50}) EXPECT_TRUE(check_residue_lemma(n).passed) << n;
  EXPECT_THROW(check_residue_lemma(9), std::invalid_argument);
}

TEST(ResidueLemma, WitnessValidator) {
  // d = 10 is 0 mod 10 but 10 mod 30, so no s2 with |s2| <= 2 matches.
  EXPECT_FALSE(residue_witness_is_valid(10, Witness{WitnessKind::ResidueTriple, {10, 0, 0}}));
  EXPECT_FALSE(residue_witness_is_valid(10, Witness{WitnessKind::ResidueTriple, {1, 1, 1}}));
}

TEST(VerifyConstruction, KnownGood) {
  for (const auto& [c, r] : std::vector<std::pair<ConstructionOutput, int>>{
           {build_h6(30), 6}, {build_chain(10), 5}, {build_hprime(100, ApSet(100, {10, 20})), 5}}) {
    const auto rep = verify_construction(c, r);
    EXPECT_TRUE(rep.passed) << c.meta.name;
    EXPECT_EQ(rep.stats.at("cond_i"), 1U);
    EXPECT_EQ(rep.stats.at("cond_ii"), 1U);
  }
}

TEST(VerifyConstruction, PassingConstructionsReplayTheirPairs) {
  std::vector<std::pair<ConstructionOutput, int>> cases;
  for (std::int64_t m = 1; m <= 12; ++m) cases.emplace_back(build_chain(m), 5);
  for (std::int64_t n : {10, 25, 40}) cases.emplace_back(build_h6(n), 6);
  for (const auto& B : {ApSet(100, {10}), ApSet(100, {20}), ApSet(100, {10, 20})})
    cases.emplace_back(build_hprime(100, B), 5);
  cases.emplace_back(build_hprime(200, ApSet(20, {1, 2, 4, 5}).scaled(10)), 5);
  for (const auto& [c, r] : cases) {
    ASSERT_TRUE(verify_construction(c, r).passed) << c.meta.name;
    const auto t = run(c.start, r, Graph::complete(c.start.vertex_count()));
    ASSERT_GE(t.steps.size(), c.m());
    for (std::size_t i = 0; i < c.m(); ++i)
      ASSERT_EQ(t.steps[i], std::vector<EdgePair>{c.f_pairs[i]}) << c.meta.name << " step " << i + 1;
  }
}

TEST(VerifyConstruction, ReportsFailingCondition) {
  const auto rep = verify_construction(tampered_chain(), 5);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.stats.at("cond_i"), 1U);
  EXPECT_EQ(rep.stats.at("cond_ii"), 0U);
  EXPECT_EQ(rep.witness->kind, WitnessKind::IndexPair);
}

}  // namespace
}  // namespace slowperc
