#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slowperc/apset.hpp"
#include "slowperc/constructions.hpp"
#include "slowperc/hypergraph.hpp"

namespace slowperc {

enum class WitnessKind {
  VertexSet,      // r vertices spanning K_r or K_r^- that no hyperedge covers
  IndexPair,      // (i, j): containment of f_i in e_j disagrees with the chain rule
  Progression,    // (a, b, c) with 2b = a + c
  ResidueTriple,  // (d, s1, s2) satisfying both congruences with d != s1 or s1 != s2
};

struct Witness {
  WitnessKind kind = WitnessKind::VertexSet;
  std::vector<std::int64_t> values;

  std::string kind_name() const;
  // "WITNESS <kind> <values...>"
  std::string to_line() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  bool passed = true;
  std::optional<Witness> witness;
  // Populated only when all failures were requested.
  std::vector<Witness> all_witnesses;
  std::map<std::string, std::uint64_t> stats;
};

struct CheckOptions {
  bool collect_all = false;
};

// Every r-set of the 2-skeleton spanning at least C(r,2)-1 edges must be a
// hyperedge. Candidates come from each pair {u,v} plus an (r-2)-clique inside
// their common skeleton neighbourhood.
VerificationReport check_induced_free(const UniformHypergraph& h, int r, const CheckOptions& options = {});

// f_i is inside e_j exactly when j == i for the last index, or j in {i, i+1}
// otherwise (0-based indices). The first violating (i, j) is reported.
VerificationReport check_pair_condition(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs);

VerificationReport check_ap_free(const ApSet& s);

// Brute-forces the residue lemma for l = n + 20: whenever |d| <= n^2/100,
// |s1|, |s2| <= 2, d = s1 (mod n) and d = s2 (mod l), then d = s1 = s2.
VerificationReport check_residue_lemma(std::int64_t n);

// Conjunction of check_induced_free(c.hypergraph, r) and check_pair_condition.
// Stats carry both sub-reports ("induced.*", "pairs.*") plus cond_i / cond_ii
// as 0/1; the witness is the first failing sub-report's.
VerificationReport verify_construction(const ConstructionOutput& c, int r);

// Re-checks a witness against the raw definitions, independently of the checker
// that produced it. True when the witness really demonstrates a violation.
bool witness_is_valid(const UniformHypergraph& h, int r, const Witness& w);
bool witness_is_valid(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs, const Witness& w);
bool witness_is_valid(const ApSet& s, const Witness& w);
bool residue_witness_is_valid(std::int64_t n, const Witness& w);

}  // namespace slowperc
