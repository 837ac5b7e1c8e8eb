#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ftpres/graph.hpp"

namespace ftpres {

using PairSet = std::vector<std::pair<Vertex, Vertex>>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos) return true;
  }
  return false;
}

inline std::vector<long long> parse_ints(const std::string& source, int line_no,
                                         const std::string& line,
                                         std::size_t expect) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long v;
  while (ss >> v) out.push_back(v);
  std::string trailing;
  if (ss.clear(), ss >> trailing)
    throw ParseError(source, line_no, "trailing junk: '" + trailing + "'");
  if (out.size() != expect)
    throw ParseError(source, line_no,
                     "expected " + std::to_string(expect) + " integers");
  return out;
}

}  // namespace detail

// Graph file: first line "n m", then m lines "tail head" (0-based vertex
// ids). Rejects out-of-range ids, self-loops and duplicates with the
// offending line number.
inline DiGraph parse_graph(std::istream& in, const std::string& source = "<graph>") {
  std::string line;
  int line_no = 0;
  if (!detail::next_data_line(in, line, line_no))
    throw ParseError(source, line_no + 1, "missing header line 'n m'");
  auto header = detail::parse_ints(source, line_no, line, 2);
  long long n = header[0], m = header[1];
  if (n < 0 || m < 0)
    throw ParseError(source, line_no, "negative count in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, line_no))
      throw ParseError(source, line_no + 1, "unexpected end of file");
    auto f = detail::parse_ints(source, line_no, line, 2);
    if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n)
      throw ParseError(source, line_no, "vertex id out of range");
    if (f[0] == f[1]) throw ParseError(source, line_no, "self-loop");
    Vertex tail = static_cast<Vertex>(f[0]), head = static_cast<Vertex>(f[1]);
    if (!seen.insert({tail, head}).second)
      throw ParseError(source, line_no, "duplicate edge");
    edges.push_back({tail, head});
  }
  if (detail::next_data_line(in, line, line_no))
    throw ParseError(source, line_no, "extra content after edge list");
  return DiGraph(static_cast<int>(n), std::move(edges));
}

inline void write_graph(std::ostream& out, const DiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

// Pair file: one "s t" line per pair, order preserved.
inline PairSet parse_pairs(std::istream& in, int n,
                           const std::string& source = "<pairs>") {
  PairSet pairs;
  std::string line;
  int line_no = 0;
  while (detail::next_data_line(in, line, line_no)) {
    auto f = detail::parse_ints(source, line_no, line, 2);
    if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n)
      throw ParseError(source, line_no, "vertex id out of range");
    pairs.emplace_back(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
  }
  return pairs;
}

inline void write_pairs(std::ostream& out, const PairSet& pairs) {
  for (const auto& [s, t] : pairs) out << s << ' ' << t << '\n';
}

// Subgraph file: first line the retained-edge count, then one line
// "edge_id tail head" per retained edge (ascending id). Endpoints are
// redundant but keep the file self-describing; they are validated against
// the parent on load.
inline Subgraph parse_subgraph(std::istream& in, const DiGraph& parent,
                               const std::string& source = "<subgraph>") {
  std::string line;
  int line_no = 0;
  if (!detail::next_data_line(in, line, line_no))
    throw ParseError(source, line_no + 1, "missing edge-count header");
  auto header = detail::parse_ints(source, line_no, line, 1);
  long long count = header[0];
  if (count < 0) throw ParseError(source, line_no, "negative edge count");

  std::vector<char> mask(static_cast<std::size_t>(parent.edge_count()), 0);
  for (long long i = 0; i < count; ++i) {
    if (!detail::next_data_line(in, line, line_no))
      throw ParseError(source, line_no + 1, "unexpected end of file");
    auto f = detail::parse_ints(source, line_no, line, 3);
    if (f[0] < 0 || f[0] >= parent.edge_count())
      throw ParseError(source, line_no, "edge id out of range");
    EdgeId e = static_cast<EdgeId>(f[0]);
    const Edge& ed = parent.edge(e);
    if (ed.tail != f[1] || ed.head != f[2])
      throw ParseError(source, line_no, "edge endpoints do not match parent");
    if (mask[static_cast<std::size_t>(e)])
      throw ParseError(source, line_no, "duplicate edge id");
    mask[static_cast<std::size_t>(e)] = 1;
  }
  return Subgraph(parent, std::move(mask));
}

inline void write_subgraph(std::ostream& out, const Subgraph& h) {
  out << h.edge_count() << '\n';
  for (EdgeId e : h.edge_ids()) {
    const Edge& ed = h.parent().edge(e);
    out << e << ' ' << ed.tail << ' ' << ed.head << '\n';
  }
}

inline DiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in, path);
}

inline PairSet load_pairs(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pair file: " + path);
  return parse_pairs(in, n, path);
}

inline Subgraph load_subgraph(const std::string& path, const DiGraph& parent) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open subgraph file: " + path);
  return parse_subgraph(in, parent, path);
}

inline void save_text(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
}

}  // namespace ftpres
