#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "slowperc/apset.hpp"
#include "slowperc/graph.hpp"
#include "slowperc/hypergraph.hpp"
#include "slowperc/percolation.hpp"

namespace slowperc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph text format:
//   n m
//   u v      (m lines, u < v, ascending)
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

// Hypergraph text format:
//   n r m
//   v_1 ... v_r      (m lines in edge order, each ascending)
//   # label <id> <class> <index>   (optional, any number)
void write_hypergraph(std::ostream& os, const UniformHypergraph& h);
UniformHypergraph read_hypergraph(std::istream& is);

// One "u v" line per f-pair, in edge order.
void write_pairs(std::ostream& os, const std::vector<EdgePair>& pairs);
std::vector<EdgePair> read_pairs(std::istream& is);

// "n k" then k elements, one per line, ascending.
void write_apset(std::ostream& os, const ApSet& s);
ApSet read_apset(std::istream& is);

// JSON object with running_time, percolated, truncated, final_edge_count and
// steps (list of batches of [u, v] pairs, sorted by (u, v)).
std::string trace_to_json(const PercolationTrace& t);
PercolationTrace trace_from_json(const std::string& text);

// File wrappers; throw ParseError on malformed content and std::runtime_error
// when the file cannot be opened.
void save_graph(const std::filesystem::path& p, const Graph& g);
Graph load_graph(const std::filesystem::path& p);
void save_hypergraph(const std::filesystem::path& p, const UniformHypergraph& h);
UniformHypergraph load_hypergraph(const std::filesystem::path& p);
void save_pairs(const std::filesystem::path& p, const std::vector<EdgePair>& pairs);
std::vector<EdgePair> load_pairs(const std::filesystem::path& p);
void save_apset(const std::filesystem::path& p, const ApSet& s);
ApSet load_apset(const std::filesystem::path& p);
void save_trace(const std::filesystem::path& p, const PercolationTrace& t);
PercolationTrace load_trace(const std::filesystem::path& p);

}  // namespace slowperc
