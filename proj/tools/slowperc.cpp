// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "slowperc/apset.hpp"
#include "slowperc/constructions.hpp"
#include "slowperc/experiment.hpp"
#include "slowperc/extremal.hpp"
#include "slowperc/io.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

namespace fs = std::filesystem;
using namespace slowperc;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;

int report(const VerificationReport& rep, const std::string& what) {
  if (rep.passed) {
    std::cout << "PASS " << what << '\n';
    return kOk;
  }
  if (rep.all_witnesses.empty()) {
    std::cout << rep.witness->to_line() << '\n';
  } else {
    for (const auto& w : rep.all_witnesses) std::cout << w.to_line() << '\n';
  }
  std::cout << "FAIL " << what << '\n';
  return kVerifyFailed;
}

ApSet make_b(std::int64_t n, const std::vector<std::int64_t>& explicit_b, const std::string& source) {
  ExperimentConfig cfg;
  if (!explicit_b.empty()) {
    cfg.b_source = BSource::Explicit;
    cfg.explicit_b = explicit_b;
  } else if (source == "behrend") {
    cfg.b_source = BSource::Behrend;
  } else if (source == "exhaustive") {
    cfg.b_source = BSource::Exhaustive;
  } else {
    cfg.b_source = BSource::Digits3;
  }
  return resolve_b(cfg, n);
}

struct ConstructArgs {
  std::string family;
  std::int64_t n = 0;
  int r = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> B;
  std::string b_source = "digits3";
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  const std::string prefix = a.out.empty() ? a.family : a.out;
  if (a.family == "minimal") {
    if (!a.r) throw std::invalid_argument("--family minimal needs --r");
    const Graph g = minimal_percolating(a.n, a.r);
    save_graph(prefix + ".start", g);
    std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    return kOk;
  }
  ConstructionOutput c;
  if (a.family == "h6") {
    c = build_h6(a.n);
  } else if (a.family == "chain") {
    c = build_chain(a.n);
  } else if (a.family == "hb") {
    if (a.b < 1) throw std::invalid_argument("--family hb needs --b");
    c = build_hB_output(a.n, ApSet(a.n, {a.b}));
  } else if (a.family == "hB") {
    c = build_hB_output(a.n, make_b(a.n, a.B, a.b_source));
  } else {
    c = build_hprime(a.n, make_b(a.n, a.B, a.b_source));
  }
  save_hypergraph(prefix + ".hyper", c.hypergraph);
  save_pairs(prefix + ".fpairs", c.f_pairs);
  save_graph(prefix + ".skeleton", c.skeleton);
  save_graph(prefix + ".start", c.start);
  std::cout << "vertices=" << c.hypergraph.vertex_count() << " hyperedges=" << c.m()
            << " skeleton_edges=" << c.skeleton.edge_count() << " start_edges=" << c.start.edge_count() << '\n';
  return kOk;
}

struct SimulateArgs {
  std::string graph;
  int r = 0;
  std::string host = "complete";
  std::string trace;
  std::optional<std::size_t> max_steps;
  bool full_scan = false;
};

int cmd_simulate(const SimulateArgs& a) {
  const Graph start = load_graph(a.graph);
  const Graph host = a.host == "complete" ? Graph::complete(start.vertex_count()) : load_graph(a.host);
  const auto t = run(start, a.r, host, {a.max_steps, !a.full_scan});
  if (!a.trace.empty()) save_trace(a.trace, t);
  std::cout << "steps=" << t.running_time << " percolated=" << (t.percolated ? "true" : "false")
            << " truncated=" << (t.truncated ? "true" : "false") << '\n';
  return kOk;
}

struct MaxtimeArgs {
  int n = 0;
  int r = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

int cmd_maxtime(const MaxtimeArgs& a) {
  MaxTimeResult res;
  if (a.samples) {
    if (!a.seed) throw std::invalid_argument("--samples needs --seed");
    res = max_running_time_sampled(a.n, a.r, *a.samples, *a.seed);
    std::cout << "M_" << a.r << "(" << a.n << ") >= " << res.max_time << " (" << res.graphs_examined
              << " samples, seed " << *a.seed << ")\n";
  } else {
    res = max_running_time(a.n, a.r, a.jobs);
    std::cout << "M_" << a.r << "(" << a.n << ") = " << res.max_time << '\n';
  }
  write_graph(std::cout, res.witness_start);
  return kOk;
}

int cmd_experiment(const std::string& path, std::optional<unsigned> jobs, const std::string& output) {
  auto cfg = ExperimentConfig::load(path);
  if (jobs) cfg.jobs = *jobs;
  if (!output.empty()) cfg.output = output;
  const auto s = run_experiment(cfg);
  for (const auto& e : s.errors) std::cerr << "error: " << e << '\n';
  for (const auto& k : s.flagged) std::cerr << "flagged: steps < m with both conditions verified: " << k << '\n';
  std::cout << "rows_written=" << s.written << " rows_skipped=" << s.skipped << " errors=" << s.errors.size()
            << " flagged=" << s.flagged.size() << " output=" << cfg.output.string() << '\n';
  return s.errors.empty() && s.flagged.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K_r-bootstrap percolation toolkit"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a construction and write its files");
  construct->add_option("--family", ca.family)
      ->required()
      ->check(CLI::IsMember({"h6", "chain", "hb", "hB", "hprime", "minimal"}));
  construct->add_option("--n,--m", ca.n, "size parameter (chain length for chain)")->required();
  construct->add_option("--r", ca.r, "clique size (minimal)");
  construct->add_option("--b", ca.b, "offset (hb)");
  construct->add_option("--B", ca.B, "explicit B values (hB, hprime)")->delimiter(',');
  construct->add_option("--B-source", ca.b_source, "generated B when --B is absent")
      ->check(CLI::IsMember({"digits3", "behrend", "exhaustive"}));
  construct->add_option("--out", ca.out, "output prefix (default: family name)");

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "run the K_r-process from a starting graph");
  simulate->add_option("--graph", sa.graph)->required()->check(CLI::ExistingFile);
  simulate->add_option("--r", sa.r)->required();
  simulate->add_option("--host", sa.host, "'complete' or a graph file");
  simulate->add_option("--trace", sa.trace, "write the trace as JSON");
  simulate->add_option("--max-steps", sa.max_steps);
  simulate->add_flag("--full-scan", sa.full_scan, "rescan every pair each step");

  auto* verify = app.add_subcommand("verify", "check a structural property");
  verify->require_subcommand(1);
  std::string hyper_path, pairs_path, apset_path;
  int vr = 0;
  bool all = false;
  std::int64_t residue_n = 0;
  auto* v_ind = verify->add_subcommand("induced-free", "2-skeleton K_r / K_r^- copies lie inside hyperedges");
  v_ind->add_option("--hyper", hyper_path)->required()->check(CLI::ExistingFile);
  v_ind->add_option("--r", vr, "default: the hypergraph's uniformity");
  v_ind->add_flag("--all", all, "list every failing vertex set");
  auto* v_pairs = verify->add_subcommand("pairs", "f_i lies in e_i and e_{i+1} only");
  v_pairs->add_option("--hyper", hyper_path)->required()->check(CLI::ExistingFile);
  v_pairs->add_option("--fpairs", pairs_path)->required()->check(CLI::ExistingFile);
  auto* v_ap = verify->add_subcommand("apfree", "no three-term arithmetic progression");
  v_ap->add_option("--apset", apset_path)->required()->check(CLI::ExistingFile);
  auto* v_res = verify->add_subcommand("residue", "brute-force the residue lemma");
  v_res->add_option("--n", residue_n)->required();

  std::int64_t ap_n = 0;
  std::string ap_method = "behrend", ap_out;
  auto* apset = app.add_subcommand("apset", "generate a 3-AP-free subset of [n]");
  apset->add_option("--n", ap_n)->required();
  apset->add_option("--method", ap_method)->check(CLI::IsMember({"digits3", "behrend", "exhaustive"}));
  apset->add_option("--out", ap_out, "output file (default: stdout)");

  MaxtimeArgs ma;
  auto* maxtime = app.add_subcommand("maxtime", "maximum running time over starting graphs on n vertices");
  maxtime->add_option("--n", ma.n)->required();
  maxtime->add_option("--r", ma.r)->required();
  maxtime->add_option("--samples", ma.samples, "sample random graphs instead of enumerating");
  maxtime->add_option("--seed", ma.seed, "required with --samples");
  maxtime->add_option("--jobs", ma.jobs)->check(CLI::PositiveNumber);

  std::string config_path, exp_output;
  std::optional<unsigned> exp_jobs;
  auto* experiment = app.add_subcommand("experiment", "run a parameter sweep from a config file");
  experiment->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  experiment->add_option("--jobs", exp_jobs)->check(CLI::PositiveNumber);
  experiment->add_option("--output", exp_output, "override the config's output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*simulate) return cmd_simulate(sa);
    if (*v_ind) {
      const auto h = load_hypergraph(hyper_path);
      return report(check_induced_free(h, vr ? vr : h.uniformity(), {all}), "induced-free");
    }
    if (*v_pairs) return report(check_pair_condition(load_hypergraph(hyper_path), load_pairs(pairs_path)), "pairs");
    if (*v_ap) return report(check_ap_free(load_apset(apset_path)), "apfree");
    if (*v_res) return report(check_residue_lemma(residue_n), "residue");
    if (*apset) {
      const ApSet s = ap_method == "digits3" ? ap_digits3(ap_n)
                      : ap_method == "exhaustive" ? ap_max_exhaustive(ap_n)
                                                  : ap_behrend(ap_n);
      if (ap_out.empty()) {
        write_apset(std::cout, s);
      } else {
        save_apset(ap_out, s);
        std::cout << "n=" << s.n << " size=" << s.size() << '\n';
      }
      return kOk;
    }
    if (*maxtime) return cmd_maxtime(ma);
    if (*experiment) return cmd_experiment(config_path, exp_jobs, exp_output);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}
