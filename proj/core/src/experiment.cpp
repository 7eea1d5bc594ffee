#include "slowperc/experiment.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slowperc/constructions.hpp"
#include "slowperc/percolation.hpp"
#include "slowperc/verify.hpp"

namespace slowperc {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const auto x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': expected an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" + v + "'");
}

const std::set<std::string> kFamilies{"h6", "chain", "hb", "hB", "hprime", "minimal", "cone-of"};

int natural_r(const std::string& family) {
  if (family == "h6") return 6;
  if (family == "chain" || family == "hb" || family == "hB" || family == "hprime") return 5;
  return 0;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  bool have_family = false;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "family") {
      cfg.family = val;
      have_family = true;
    } else if (key == "base") {
      cfg.base = val;
    } else if (key == "n") {
      for (const auto& x : split(val, ','))
        if (!x.empty()) cfg.ns.push_back(to_int(key, x));
    } else if (key == "r") {
      cfg.r = static_cast<int>(to_int(key, val));
    } else if (key == "b") {
      cfg.b = to_int(key, val);
    } else if (key == "B_source") {
      if (val == "behrend") cfg.b_source = BSource::Behrend;
      else if (val == "digits3") cfg.b_source = BSource::Digits3;
      else if (val == "exhaustive") cfg.b_source = BSource::Exhaustive;
      else if (val == "explicit") cfg.b_source = BSource::Explicit;
      else throw std::invalid_argument("unknown B_source '" + val + "'");
    } else if (key == "B") {
      for (const auto& x : split(val, ','))
        if (!x.empty()) cfg.explicit_b.push_back(to_int(key, x));
      cfg.b_source = BSource::Explicit;
    } else if (key == "max_steps") {
      cfg.max_steps = static_cast<std::size_t>(to_int(key, val));
    } else if (key == "incremental") {
      cfg.incremental = to_bool(key, val);
    } else if (key == "output") {
      cfg.output = val;
    } else if (key == "jobs") {
      cfg.jobs = static_cast<unsigned>(std::max<std::int64_t>(1, to_int(key, val)));
    } else {
      throw std::invalid_argument("unknown config key '" + key + "' on line " + std::to_string(lineno));
    }
  }
  if (!have_family || !kFamilies.count(cfg.family)) throw std::invalid_argument("config needs a valid family");
  if (cfg.family == "cone-of" && (cfg.base.empty() || cfg.base == "cone-of" || !kFamilies.count(cfg.base)))
    throw std::invalid_argument("cone-of needs a base family");
  if (cfg.ns.empty()) throw std::invalid_argument("config needs at least one n");
  if (cfg.family == "hb" && cfg.b < 1) throw std::invalid_argument("family hb needs b >= 1");
  const std::string eff = cfg.family == "cone-of" ? cfg.base : cfg.family;
  if (eff == "minimal" && !cfg.r) throw std::invalid_argument("family minimal needs r");
  if (cfg.b_source == BSource::Explicit && (eff == "hB" || eff == "hprime") && cfg.explicit_b.empty())
    throw std::invalid_argument("explicit B_source needs B values");
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw std::invalid_argument("cannot open config " + p.string());
  return parse(f);
}

std::string ResultRow::key() const {
  std::ostringstream os;
  os << family << ',' << n << ',' << r << ',' << b_size;
  return os.str();
}

std::string ResultRow::to_csv() const {
  auto tf = [](bool x) { return x ? "true" : "false"; };
  std::ostringstream os;
  os << family << ',' << n << ',' << r << ',' << b_size << ',' << vertices << ',' << start_edges << ',' << m << ','
     << steps << ',' << tf(percolated) << ',' << tf(cond_i) << ',' << tf(cond_ii) << ',' << wall_ms;
  return os.str();
}

ResultRow ResultRow::from_csv(const std::string& line) {
  const auto f = split(line, ',');
  if (f.size() != 12) throw std::invalid_argument("result row needs 12 fields: '" + line + "'");
  auto b = [&](const std::string& s) { return to_bool("csv", s); };
  ResultRow r;
  r.family = f[0];
  r.n = to_int("n", f[1]);
  r.r = static_cast<int>(to_int("r", f[2]));
  r.b_size = static_cast<std::size_t>(to_int("B_size", f[3]));
  r.vertices = static_cast<std::size_t>(to_int("vertices", f[4]));
  r.start_edges = static_cast<std::size_t>(to_int("start_edges", f[5]));
  r.m = static_cast<std::size_t>(to_int("m", f[6]));
  r.steps = static_cast<std::size_t>(to_int("steps", f[7]));
  r.percolated = b(f[8]);
  r.cond_i = b(f[9]);
  r.cond_ii = b(f[10]);
  r.wall_ms = to_int("wall_ms", f[11]);
  return r;
}

ApSet resolve_b(const ExperimentConfig& cfg, std::int64_t n) {
  if (cfg.b_source == BSource::Explicit) {
    std::int64_t top = 1;
    for (auto x : cfg.explicit_b) top = std::max(top, x);
    return ApSet(std::max(n, top), cfg.explicit_b);
  }
  const std::int64_t inner = n / 40;
  if (inner < 1) throw std::invalid_argument("n=" + std::to_string(n) + " too small for a generated B (need n >= 40)");
  ApSet base;
  switch (cfg.b_source) {
    case BSource::Behrend: base = ap_behrend(inner); break;
    case BSource::Digits3: base = ap_digits3(inner); break;
    case BSource::Exhaustive: base = ap_max_exhaustive(std::min<std::int64_t>(inner, 25)); break;
    case BSource::Explicit: break;
  }
  return base.scaled(10);
}

namespace {

// r of the base (un-coned) process. For cone-of, a configured r names the
// coned process, one more than the base.
int base_r(const ExperimentConfig& cfg) {
  const bool coned = cfg.family == "cone-of";
  const std::string fam = coned ? cfg.base : cfg.family;
  if (coned && cfg.r) return *cfg.r - 1;
  return cfg.r.value_or(natural_r(fam));
}

std::size_t planned_b_size(const ExperimentConfig& cfg, std::int64_t n) {
  const std::string fam = cfg.family == "cone-of" ? cfg.base : cfg.family;
  if (fam == "hb") return 1;
  if (fam == "hB" || fam == "hprime") return resolve_b(cfg, n).size();
  return 0;
}

}  // namespace

std::string point_key(const ExperimentConfig& cfg, std::int64_t n) {
  ResultRow row;
  row.family = cfg.family;
  row.n = n;
  row.r = base_r(cfg) + (cfg.family == "cone-of" ? 1 : 0);
  row.b_size = planned_b_size(cfg, n);
  return row.key();
}

ResultRow run_point(const ExperimentConfig& cfg, std::int64_t n) {
  const auto t0 = std::chrono::steady_clock::now();
  const bool coned = cfg.family == "cone-of";
  const std::string fam = coned ? cfg.base : cfg.family;

  ResultRow row;
  row.family = cfg.family;
  row.n = n;

  Graph start;
  int r = base_r(cfg);
  if (fam == "minimal") {
    start = minimal_percolating(n, r);
  } else {
    ConstructionOutput c;
    if (fam == "h6") {
      c = build_h6(n);
    } else if (fam == "chain") {
      c = build_chain(n);
    } else if (fam == "hb") {
      c = build_hB_output(n, ApSet(n, {cfg.b}));
      row.b_size = 1;
    } else {
      const ApSet B = resolve_b(cfg, n);
      row.b_size = B.size();
      c = fam == "hB" ? build_hB_output(n, B) : build_hprime(n, B);
    }
    const auto rep = verify_construction(c, r);
    row.cond_i = rep.stats.at("cond_i") != 0;
    row.cond_ii = rep.stats.at("cond_ii") != 0;
    row.m = c.m();
    start = std::move(c.start);
  }

  Graph host = Graph::complete(start.vertex_count());
  if (coned) {
    start = cone(start);
    host = cone(host);
    ++r;
  }
  row.r = r;
  row.vertices = start.vertex_count();
  row.start_edges = start.edge_count();
  const auto trace = run(start, r, host, {cfg.max_steps, cfg.incremental});
  row.steps = trace.running_time;
  row.percolated = trace.percolated;
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  std::set<std::string> done;
  const bool exists = std::filesystem::exists(cfg.output) && std::filesystem::file_size(cfg.output) > 0;
  if (exists) {
    std::ifstream in(cfg.output);
    std::string line;
    std::getline(in, line);
    if (trim(line) != kCsvHeader) throw std::invalid_argument("existing results file has an unexpected header");
    while (std::getline(in, line))
      if (!trim(line).empty()) done.insert(ResultRow::from_csv(trim(line)).key());
  }
  std::ofstream out(cfg.output, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + cfg.output.string());
  if (!exists) out << kCsvHeader << '\n' << std::flush;

  ExperimentSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.ns.size(); i = next++) {
      const auto n = cfg.ns[i];
      try {
        {
          const auto key = point_key(cfg, n);
          std::lock_guard lock(mu);
          if (!done.insert(key).second) {
            ++summary.skipped;
            continue;
          }
        }
        const ResultRow row = run_point(cfg, n);
        std::lock_guard lock(mu);
        if (!row.satisfies_lower_bound()) summary.flagged.push_back(row.key());
        out << row.to_csv() << '\n' << std::flush;
        ++summary.written;
      } catch (const std::exception& ex) {
        std::lock_guard lock(mu);
        summary.errors.push_back(cfg.family + " n=" + std::to_string(n) + ": " + ex.what());
      }
    }
  };
  const unsigned jobs = std::max(1U, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return summary;
}

}  // namespace slowperc
