#include "slowperc/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slowperc {

std::string Witness::kind_name() const {
  switch (kind) {
    case WitnessKind::VertexSet: return "vertex-set";
    case WitnessKind::IndexPair: return "index-pair";
    case WitnessKind::Progression: return "progression";
    case WitnessKind::ResidueTriple: return "residue";
  }
  return "unknown";
}

std::string Witness::to_line() const {
  std::ostringstream os;
  os << "WITNESS " << kind_name();
  for (auto v : values) os << ' ' << v;
  return os.str();
}

VerificationReport check_induced_free(const UniformHypergraph& h, int r, const CheckOptions& options) {
  if (r < 3) throw std::invalid_argument("induced-freeness check needs r >= 3");
  if (h.uniformity() != r)
    throw std::invalid_argument("hypergraph is " + std::to_string(h.uniformity()) + "-uniform, checked with r=" +
                                std::to_string(r));
  const Graph g = two_skeleton(h);
  const EdgeIndex index(h);
  CliqueFinder finder(g);
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  std::vector<Word> reach(words), common(words);
  std::set<std::vector<Vertex>> failures;

  VerificationReport rep;
  std::uint64_t pairs = 0, candidates = 0;
  bool stop = false;
  std::vector<Vertex> set;

  for (Vertex u = 0; u + 1 < n && !stop; ++u) {
    std::fill(reach.begin(), reach.end(), Word{0});
    bits::for_each(g.row(u), [&](Vertex w) {
      auto rw = g.row(w);
      for (std::size_t k = 0; k < words; ++k) reach[k] |= rw[k];
    });
    bits::clear_through(reach, u);
    bits::for_each(std::span<const Word>(reach), [&](Vertex v) {
      ++pairs;
      bits::and_into(common, g.row(u), g.row(v));
      finder.enumerate(common, r - 2, [&](const std::vector<Vertex>& clique) {
        ++candidates;
        set.assign(clique.begin(), clique.end());
        set.push_back(u);
        set.push_back(v);
        std::sort(set.begin(), set.end());
        if (index.find(set)) return true;
        if (!rep.witness) {
          rep.passed = false;
          rep.witness = Witness{WitnessKind::VertexSet, {set.begin(), set.end()}};
        }
        if (!options.collect_all) {
          stop = true;
          return false;
        }
        failures.insert(set);
        return true;
      });
      return !stop;
    });
  }
  for (const auto& f : failures) rep.all_witnesses.push_back({WitnessKind::VertexSet, {f.begin(), f.end()}});
  rep.stats["pairs_examined"] = pairs;
  rep.stats["candidate_sets"] = candidates;
  return rep;
}

VerificationReport check_pair_condition(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs) {
  const std::size_t m = h.edge_count();
  if (f_pairs.size() != m)
    throw std::invalid_argument("pair condition needs one f-pair per edge: " + std::to_string(f_pairs.size()) +
                                " pairs, " + std::to_string(m) + " edges");
  const auto inc = incidence_lists(h);
  VerificationReport rep;
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < m && rep.passed; ++i) {
    const auto& f = f_pairs[i];
    std::vector<std::size_t> actual;
    if (f.v < h.vertex_count())
      std::set_intersection(inc[f.u].begin(), inc[f.u].end(), inc[f.v].begin(), inc[f.v].end(),
                            std::back_inserter(actual));
    std::vector<std::size_t> expected{i};
    if (i + 1 < m) expected.push_back(i + 1);
    std::vector<std::size_t> diff;
    std::set_symmetric_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                                  std::back_inserter(diff));
    ++checked;
    if (!diff.empty()) {
      rep.passed = false;
      rep.witness = Witness{WitnessKind::IndexPair,
                            {static_cast<std::int64_t>(i), static_cast<std::int64_t>(diff.front())}};
    }
  }
  rep.stats["pairs_checked"] = checked;
  return rep;
}

VerificationReport check_ap_free(const ApSet& s) {
  const auto& xs = s.elements;
  VerificationReport rep;
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < xs.size() && rep.passed; ++i)
    for (std::size_t k = i + 2; k < xs.size(); ++k) {
      ++examined;
      const std::int64_t sum = xs[i] + xs[k];
      if (sum % 2 != 0) continue;
      const std::int64_t mid = sum / 2;
      if (std::binary_search(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             xs.begin() + static_cast<std::ptrdiff_t>(k), mid)) {
        rep.passed = false;
        rep.witness = Witness{WitnessKind::Progression, {xs[i], mid, xs[k]}};
        break;
      }
    }
  rep.stats["pairs_examined"] = examined;
  return rep;
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

VerificationReport check_residue_lemma(std::int64_t n) {
  if (n < 10) throw std::invalid_argument("residue lemma needs n >= 10, got " + std::to_string(n));
  const std::int64_t l = n + 20;
  const std::int64_t bound = n * n / 100;
  VerificationReport rep;
  std::uint64_t examined = 0;
  for (std::int64_t d = -bound; d <= bound && rep.passed; ++d)
    for (std::int64_t s1 = -2; s1 <= 2 && rep.passed; ++s1)
      for (std::int64_t s2 = -2; s2 <= 2; ++s2) {
        ++examined;
        if (floor_mod(d - s1, n) != 0 || floor_mod(d - s2, l) != 0) continue;
        if (d == s1 && s1 == s2) continue;
        rep.passed = false;
        rep.witness = Witness{WitnessKind::ResidueTriple, {d, s1, s2}};
        break;
      }
  rep.stats["triples_examined"] = examined;
  return rep;
}

VerificationReport verify_construction(const ConstructionOutput& c, int r) {
  const auto induced = check_induced_free(c.hypergraph, r);
  const auto pairs = check_pair_condition(c.hypergraph, c.f_pairs);
  VerificationReport rep;
  rep.passed = induced.passed && pairs.passed;
  rep.witness = !induced.passed ? induced.witness : pairs.witness;
  for (const auto& [k, v] : induced.stats) rep.stats["induced." + k] = v;
  for (const auto& [k, v] : pairs.stats) rep.stats["pairs." + k] = v;
  rep.stats["cond_i"] = induced.passed ? 1 : 0;
  rep.stats["cond_ii"] = pairs.passed ? 1 : 0;
  return rep;
}

// The witness checks below re-derive everything from hyperedge lists directly.

namespace {

bool pair_in_some_edge(const UniformHypergraph& h, std::int64_t a, std::int64_t b) {
  for (const auto& e : h.edges()) {
    const bool has_a = std::find(e.begin(), e.end(), static_cast<Vertex>(a)) != e.end();
    const bool has_b = std::find(e.begin(), e.end(), static_cast<Vertex>(b)) != e.end();
    if (has_a && has_b) return true;
  }
  return false;
}

bool subset_of_edge(const EdgePair& f, const std::vector<Vertex>& e) {
  return std::find(e.begin(), e.end(), f.u) != e.end() && std::find(e.begin(), e.end(), f.v) != e.end();
}

}  // namespace

bool witness_is_valid(const UniformHypergraph& h, int r, const Witness& w) {
  if (w.kind != WitnessKind::VertexSet || w.values.size() != static_cast<std::size_t>(r)) return false;
  std::vector<std::int64_t> vs = w.values;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  for (auto v : vs)
    if (v < 0 || static_cast<std::size_t>(v) >= h.vertex_count()) return false;
  std::size_t present = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) present += pair_in_some_edge(h, vs[i], vs[j]) ? 1 : 0;
  const std::size_t all = vs.size() * (vs.size() - 1) / 2;
  if (present + 1 < all) return false;
  for (const auto& e : h.edges()) {
    std::vector<std::int64_t> ev(e.begin(), e.end());
    std::sort(ev.begin(), ev.end());
    if (ev == vs) return false;
  }
  return true;
}

bool witness_is_valid(const UniformHypergraph& h, const std::vector<EdgePair>& f_pairs, const Witness& w) {
  if (w.kind != WitnessKind::IndexPair || w.values.size() != 2) return false;
  const auto i = w.values[0], j = w.values[1];
  const auto m = static_cast<std::int64_t>(h.edge_count());
  if (i < 0 || j < 0 || i >= m || j >= m || f_pairs.size() != h.edge_count()) return false;
  const bool contained = subset_of_edge(f_pairs[static_cast<std::size_t>(i)], h.edges()[static_cast<std::size_t>(j)]);
  const bool allowed = (i == m - 1 && j == i) || (i < m - 1 && (j == i || j == i + 1));
  return contained != allowed;
}

bool witness_is_valid(const ApSet& s, const Witness& w) {
  if (w.kind != WitnessKind::Progression || w.values.size() != 3) return false;
  const auto a = w.values[0], b = w.values[1], c = w.values[2];
  auto in = [&](std::int64_t x) { return std::find(s.elements.begin(), s.elements.end(), x) != s.elements.end(); };
  return a < b && b < c && 2 * b == a + c && in(a) && in(b) && in(c);
}

bool residue_witness_is_valid(std::int64_t n, const Witness& w) {
  if (w.kind != WitnessKind::ResidueTriple || w.values.size() != 3) return false;
  const auto d = w.values[0], s1 = w.values[1], s2 = w.values[2];
  const std::int64_t l = n + 20;
  if (100 * (d < 0 ? -d : d) > n * n || s1 < -2 || s1 > 2 || s2 < -2 || s2 > 2) return false;
  if ((d - s1) % n != 0 || (d - s2) % l != 0) return false;
  return !(d == s1 && s1 == s2);
}

}  // namespace slowperc
