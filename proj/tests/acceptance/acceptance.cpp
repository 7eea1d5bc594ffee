// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. `--long` adds the n = 7 exhaustive search.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "slowperc/apset.hpp"
#include "slowperc/constructions.hpp"
#include "slowperc/extremal.hpp"
#include "slowperc/io.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

using namespace slowperc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string str(std::size_t x) { return std::to_string(x); }

// Trace of the h6 starting graph inside the complete host, shared by AC2/AC3.
PercolationTrace h6_trace(const ConstructionOutput& c) {
  return run(c.start, 6, Graph::complete(c.start.vertex_count()));
}

// The first m batches are exactly {f_0}, {f_1}, ...
bool replays_pairs(const PercolationTrace& t, const std::vector<EdgePair>& f, std::string& why) {
  if (t.steps.size() < f.size()) {
    why = "only " + str(t.steps.size()) + " steps for " + str(f.size()) + " pairs";
    return false;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (t.steps[i].size() != 1 || t.steps[i][0] != f[i]) {
      why = "step " + str(i + 1) + " is not the singleton f-pair";
      return false;
    }
  }
  return true;
}

Outcome ac1(bool long_run) {
  Outcome o;
  std::ostringstream d;
  auto expect = [&](int n, int r, std::size_t want) {
    const auto res = max_running_time(n, r, jobs());
    d << "M" << r << "(" << n << ")=" << res.max_time << ' ';
    if (res.max_time != want) o.fail("M" + std::to_string(r) + "(" + std::to_string(n) + ") = " + str(res.max_time) +
                                     ", expected " + str(want));
  };
  for (int n = 4; n <= 6; ++n) expect(n, 4, static_cast<std::size_t>(n - 3));
  for (int n = 3; n <= 6; ++n) expect(n, 3, static_cast<std::size_t>(std::ceil(std::log2(n - 1))));
  if (long_run) {
    expect(7, 4, 4);
    expect(7, 3, 3);
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac2() {
  Outcome o;
  std::ostringstream d;
  for (std::int64_t n : {10, 20, 30, 40, 50}) {
    const auto c = build_h6(n);
    const auto rep = verify_construction(c, 6);
    if (!rep.passed) o.fail("h6(" + std::to_string(n) + ") fails verification: " + rep.witness->to_line());
    const auto m = static_cast<std::size_t>(n * n / 100);
    const auto t = h6_trace(c);
    std::string why;
    if (c.m() != m) o.fail("h6(" + std::to_string(n) + ") has " + str(c.m()) + " edges");
    if (!replays_pairs(t, c.f_pairs, why)) o.fail("h6(" + std::to_string(n) + "): " + why);
    if (t.running_time < m) o.fail("h6(" + std::to_string(n) + ") ran " + str(t.running_time) + " < " + str(m));
    d << "n=" << n << ":" << t.running_time << ">=" << m << ' ';
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac3() {
  Outcome o;
  for (std::int64_t n : {10, 20}) {
    const auto c = build_h6(n);
    const auto plain = h6_trace(c);
    const auto coned = run(cone(c.start), 7, cone(Graph::complete(c.start.vertex_count())));
    if (coned.steps != plain.steps || coned.running_time != plain.running_time || coned.percolated != plain.percolated)
      o.fail("cone trace differs at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "cone traces identical for n=10,20";
  return o;
}

Outcome ac4() {
  Outcome o;
  const std::int64_t n = 400;
  const auto B = ApSet(n / 10, {1, 2, 4, 5}).scaled(10);
  const auto c = build_hprime(n, B);
  const auto rep = verify_construction(c, 5);
  if (!rep.passed) o.fail("hprime fails verification: " + rep.witness->to_line());
  if (c.m() < 672) o.fail("hprime has m=" + str(c.m()) + " < 672");
  const auto t = run(c.start, 5, Graph::complete(c.start.vertex_count()));
  std::string why;
  if (!replays_pairs(t, c.f_pairs, why)) o.fail(why);
  if (o.pass)
    o.detail = "m=" + str(c.m()) + " vertices=" + str(c.start.vertex_count()) + " steps=" + str(t.running_time);
  return o;
}

Outcome ac5() {
  Outcome o;
  std::ostringstream d;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{6, 4}, {7, 4}, {7, 5}, {8, 5}}) {
    const Graph host = Graph::complete(static_cast<std::size_t>(n));
    const Graph g = minimal_percolating(n, r);
    const auto t = run(g, r, host);
    if (t.running_time != 1 || !t.percolated)
      o.fail("minimal(" + std::to_string(n) + "," + std::to_string(r) + ") ran " + str(t.running_time) + " steps");
    // Recorded only: percolation after deleting one more edge.
    std::size_t still = 0, total = 0;
    for (const auto& e : g.edges()) {
      Graph h = g;
      h.remove_edge(e);
      still += run(h, r, host).percolated;
      ++total;
    }
    d << "(" << n << "," << r << "):" << still << "/" << total << " deletions still percolate ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + rng() % 6;
    const int r = 3 + static_cast<int>(rng() % 3);
    const Graph host = Graph::complete(n);
    const Graph start = testing::random_graph(n, density(rng), rng);
    if (trace_to_json(run(start, r, host)) != trace_to_json(run_oracle(start, r, host))) {
      o.fail("instance " + std::to_string(i) + " differs");
      break;
    }
  }
  if (o.pass) o.detail = "1000 instances identical";
  return o;
}

Outcome ac7() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const auto s = ap_max_exhaustive(n);
    if (static_cast<int>(s.size()) != testing::brute_force_r3(n)) o.fail("r3(" + std::to_string(n) + ") mismatch");
  }
  for (std::int64_t n : {9, 100, 6561}) {
    if (!check_ap_free(ap_digits3(n)).passed) o.fail("ap_digits3(" + std::to_string(n) + ") has a progression");
    if (!check_ap_free(ap_behrend(n)).passed) o.fail("ap_behrend(" + std::to_string(n) + ") has a progression");
  }
  const auto big = ap_behrend(6561).size();
  if (big < 256) o.fail("|ap_behrend(6561)| = " + str(big));
  for (std::int64_t n : {10, 20, 30, 50})
    if (!check_residue_lemma(n).passed) o.fail("residue lemma fails at n=" + std::to_string(n));
  if (o.pass) o.detail = "|ap_behrend(6561)|=" + str(big);
  return o;
}

Outcome ac8() {
  Outcome o;
  UniformHypergraph h(8, 5);
  h.add_edge({1, 2, 3, 4, 5});
  h.add_edge({3, 4, 5, 6, 7});
  const auto ind = check_induced_free(h, 5);
  if (ind.passed || !ind.witness || !witness_is_valid(h, 5, *ind.witness)) o.fail("induced-free control");

  auto chain = build_chain(3);
  chain.f_pairs[0] = EdgePair(0, 1);
  const auto pairs = check_pair_condition(chain.hypergraph, chain.f_pairs);
  if (pairs.passed || !pairs.witness || !witness_is_valid(chain.hypergraph, chain.f_pairs, *pairs.witness))
    o.fail("pair-condition control");

  const ApSet s(5, {1, 3, 5});
  const auto ap = check_ap_free(s);
  if (ap.passed || !ap.witness || !witness_is_valid(s, *ap.witness)) o.fail("3-AP control");
  if (o.pass)
    o.detail = ind.witness->to_line() + "; " + pairs.witness->to_line() + "; " + ap.witness->to_line();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--long]\n";
      return 2;
    }
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 exact small M_r", [&] { return ac1(long_run); }},
      {"AC2 r=6 pipeline", ac2},
      {"AC3 cone reduction", ac3},
      {"AC4 r=5 pipeline", ac4},
      {"AC5 minimal percolating set", ac5},
      {"AC6 engine equivalence", ac6},
      {"AC7 3-AP machinery", ac7},
      {"AC8 negative controls", ac8},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s) " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed;
}
