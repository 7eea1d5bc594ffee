#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slowperc/apset.hpp"

namespace slowperc {

enum class BSource { Behrend, Digits3, Exhaustive, Explicit };

// Flat "key = value" config; list-valued keys may repeat or hold comma lists.
//
//   family      h6 | chain | hb | hB | hprime | minimal | cone-of
//   base        family wrapped by cone-of
//   n           one or more sizes (chain: the chain length)
//   r           clique size; defaults to the family's natural r
//   b           chain offset for hb
//   B_source    behrend | digits3 | exhaustive | explicit
//   B           explicit B values
//   max_steps   engine step cap
//   incremental true | false
//   output      CSV path
//   jobs        worker threads
struct ExperimentConfig {
  std::string family;
  std::string base;
  std::vector<std::int64_t> ns;
  std::optional<int> r;
  std::int64_t b = 0;
  BSource b_source = BSource::Digits3;
  std::vector<std::int64_t> explicit_b;
  std::optional<std::size_t> max_steps;
  bool incremental = true;
  std::filesystem::path output = "results.csv";
  unsigned jobs = 1;

  static ExperimentConfig parse(std::istream& is);
  static ExperimentConfig load(const std::filesystem::path& p);
};

struct ResultRow {
  std::string family;
  std::int64_t n = 0;
  int r = 0;
  std::size_t b_size = 0;
  std::size_t vertices = 0;
  std::size_t start_edges = 0;
  std::size_t m = 0;
  std::size_t steps = 0;
  bool percolated = false;
  bool cond_i = false;
  bool cond_ii = false;
  std::int64_t wall_ms = 0;

  // steps >= m must hold whenever both conditions verified.
  bool satisfies_lower_bound() const { return !(cond_i && cond_ii) || steps >= m; }
  std::string key() const;
  std::string to_csv() const;
  static ResultRow from_csv(const std::string& line);
};

inline constexpr const char* kCsvHeader =
    "family,n,r,B_size,vertices,start_edges,m,steps,percolated,cond_i,cond_ii,wall_ms";

// B for the X|Y|Z families: explicit values as given, otherwise
// 10 * source(floor(n/40)), which keeps B within [floor(n/4)].
ApSet resolve_b(const ExperimentConfig& cfg, std::int64_t n);

// Resume key (family, n, r, |B|) of a parameter point, computed without running it.
std::string point_key(const ExperimentConfig& cfg, std::int64_t n);

// Builds, verifies and simulates one parameter point.
ResultRow run_point(const ExperimentConfig& cfg, std::int64_t n);

struct ExperimentSummary {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::vector<std::string> errors;   // one entry per failed parameter point
  std::vector<std::string> flagged;  // keys of rows violating steps >= m
};

// Appends one row per parameter point to cfg.output, skipping keys already
// present in the file.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

}  // namespace slowperc
