#include "slowperc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace slowperc {

namespace {

// Reads the next non-empty line that is not a comment; false at EOF.
bool next_data_line(std::istream& is, std::string& line, std::vector<std::string>* comments = nullptr) {
  while (std::getline(is, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      if (comments) comments->push_back(line.substr(pos));
      continue;
    }
    return true;
  }
  return false;
}

template <typename... T>
void parse_fields(const std::string& line, const char* what, T&... out) {
  std::istringstream ls(line);
  ((ls >> out), ...);
  std::string extra;
  if (!ls || (ls >> extra)) throw ParseError(std::string("malformed ") + what + " line: '" + line + "'");
}

template <typename T>
std::vector<T> parse_list(const std::string& line, const char* what, std::size_t expected) {
  std::istringstream ls(line);
  std::vector<T> out;
  T x;
  while (ls >> x) out.push_back(x);
  if (!ls.eof() || out.size() != expected) throw ParseError(std::string("malformed ") + what + " line: '" + line + "'");
  return out;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw std::runtime_error("cannot open " + p.string());
  return f;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  if (!next_data_line(is, line)) throw ParseError("empty graph file");
  long long n = 0, m = 0;
  parse_fields(line, "graph header", n, m);
  if (n < 0 || m < 0) throw ParseError("negative counts in graph header");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(is, line)) throw ParseError("graph file ends after " + std::to_string(i) + " of " +
                                                    std::to_string(m) + " edges");
    long long u = 0, v = 0;
    parse_fields(line, "edge", u, v);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("invalid edge '" + line + "'");
    if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw ParseError("duplicate edge '" + line + "'");
  }
  if (next_data_line(is, line)) throw ParseError("trailing data in graph file: '" + line + "'");
  return g;
}

void write_hypergraph(std::ostream& os, const UniformHypergraph& h) {
  os << h.vertex_count() << ' ' << h.uniformity() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
  for (const auto& [v, l] : h.labels()) os << "# label " << v << ' ' << l.class_name() << ' ' << l.index << '\n';
}

UniformHypergraph read_hypergraph(std::istream& is) {
  std::string line;
  std::vector<std::string> comments;
  if (!next_data_line(is, line, &comments)) throw ParseError("empty hypergraph file");
  long long n = 0, r = 0, m = 0;
  parse_fields(line, "hypergraph header", n, r, m);
  if (n < 0 || m < 0 || r < 2) throw ParseError("invalid hypergraph header '" + line + "'");
  UniformHypergraph h(static_cast<std::size_t>(n), static_cast<int>(r));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(is, line, &comments)) throw ParseError("hypergraph file ends early");
    const auto ids = parse_list<long long>(line, "hyperedge", static_cast<std::size_t>(r));
    std::vector<Vertex> e;
    for (auto id : ids) {
      if (id < 0 || id >= n) throw ParseError("hyperedge vertex out of range: '" + line + "'");
      e.push_back(static_cast<Vertex>(id));
    }
    try {
      h.add_edge(std::move(e));
    } catch (const std::exception& ex) {
      throw ParseError(std::string("bad hyperedge: ") + ex.what());
    }
  }
  if (next_data_line(is, line, &comments)) throw ParseError("trailing data in hypergraph file: '" + line + "'");
  for (const auto& c : comments) {
    std::istringstream cs(c);
    std::string hash, tag, cls;
    long long id = 0, index = 0;
    cs >> hash >> tag;
    if (tag != "label") continue;
    if (!(cs >> id >> cls >> index) || id < 0 || id >= n) throw ParseError("malformed label line: '" + c + "'");
    try {
      h.set_label(static_cast<Vertex>(id), VertexLabel::parse(cls, static_cast<int>(index)));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("malformed label line: ") + ex.what());
    }
  }
  return h;
}

void write_pairs(std::ostream& os, const std::vector<EdgePair>& pairs) {
  for (const auto& p : pairs) os << p.u << ' ' << p.v << '\n';
}

std::vector<EdgePair> read_pairs(std::istream& is) {
  std::vector<EdgePair> out;
  std::string line;
  while (next_data_line(is, line)) {
    long long u = 0, v = 0;
    parse_fields(line, "f-pair", u, v);
    if (u < 0 || v < 0 || u == v) throw ParseError("invalid f-pair '" + line + "'");
    out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

void write_apset(std::ostream& os, const ApSet& s) {
  os << s.n << ' ' << s.size() << '\n';
  for (auto e : s.elements) os << e << '\n';
}

ApSet read_apset(std::istream& is) {
  std::string line;
  if (!next_data_line(is, line)) throw ParseError("empty AP set file");
  long long n = 0, k = 0;
  parse_fields(line, "AP set header", n, k);
  if (n < 0 || k < 0) throw ParseError("negative counts in AP set header");
  std::vector<std::int64_t> xs;
  for (long long i = 0; i < k; ++i) {
    if (!next_data_line(is, line)) throw ParseError("AP set file ends early");
    long long x = 0;
    parse_fields(line, "AP set element", x);
    xs.push_back(x);
  }
  if (!std::is_sorted(xs.begin(), xs.end())) throw ParseError("AP set elements must be ascending");
  try {
    return ApSet(n, std::move(xs));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

std::string trace_to_json(const PercolationTrace& t) {
  nlohmann::ordered_json j;
  j["running_time"] = t.running_time;
  j["percolated"] = t.percolated;
  j["truncated"] = t.truncated;
  j["final_edge_count"] = t.final_edge_count;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& batch : t.steps) {
    auto b = nlohmann::ordered_json::array();
    for (const auto& e : batch) b.push_back({e.u, e.v});
    steps.push_back(std::move(b));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

PercolationTrace trace_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    PercolationTrace t;
    t.running_time = j.at("running_time").get<std::size_t>();
    t.percolated = j.at("percolated").get<bool>();
    t.truncated = j.at("truncated").get<bool>();
    t.final_edge_count = j.value("final_edge_count", std::size_t{0});
    for (const auto& batch : j.at("steps")) {
      std::vector<EdgePair> b;
      for (const auto& e : batch) b.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      t.steps.push_back(std::move(b));
    }
    if (t.steps.size() != t.running_time) throw ParseError("running_time does not match the number of steps");
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed trace: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("malformed trace: ") + ex.what());
  }
}

void save_graph(const std::filesystem::path& p, const Graph& g) {
  auto f = open_out(p);
  write_graph(f, g);
}
Graph load_graph(const std::filesystem::path& p) {
  auto f = open_in(p);
  return read_graph(f);
}
void save_hypergraph(const std::filesystem::path& p, const UniformHypergraph& h) {
  auto f = open_out(p);
  write_hypergraph(f, h);
}
UniformHypergraph load_hypergraph(const std::filesystem::path& p) {
  auto f = open_in(p);
  return read_hypergraph(f);
}
void save_pairs(const std::filesystem::path& p, const std::vector<EdgePair>& pairs) {
  auto f = open_out(p);
  write_pairs(f, pairs);
}
std::vector<EdgePair> load_pairs(const std::filesystem::path& p) {
  auto f = open_in(p);
  return read_pairs(f);
}
void save_apset(const std::filesystem::path& p, const ApSet& s) {
  auto f = open_out(p);
  write_apset(f, s);
}
ApSet load_apset(const std::filesystem::path& p) {
  auto f = open_in(p);
  return read_apset(f);
}
void save_trace(const std::filesystem::path& p, const PercolationTrace& t) {
  auto f = open_out(p);
  f << trace_to_json(t) << '\n';
}
PercolationTrace load_trace(const std::filesystem::path& p) {
  auto f = open_in(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return trace_from_json(ss.str());
}

}  // namespace slowperc
