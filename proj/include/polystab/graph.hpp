#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/matrix.hpp"

namespace polystab {

// Simple undirected graph on vertices 0..n-1.  No self-loops, no multi-edges.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_)
      throw FormatError("edge endpoint out of range: " + std::to_string(u) +
                        "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    edges_.insert({u, v});
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
  }

  // Neighbor bitmasks, defined for n <= 64; the exact clique solver works
  // on these.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw SizeCapExceeded("bitmask adjacency needs n <= 64");
    std::vector<std::uint64_t> adj(n_, 0);
    for (const auto& [u, v] : edges_) {
      adj[u] |= std::uint64_t(1) << v;
      adj[v] |= std::uint64_t(1) << u;
    }
    return adj;
  }

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// DIMACS edge format: optional 'c' comment lines, one 'p edge N M' problem
// line, then 'e u v' lines with 1-based endpoints.  Parsing is strict about
// directives but ignores the advertised edge count (real-world files get it
// wrong after deduplication).
inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_problem = false;
  Graph g(0);
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "c") continue;
    if (tok == "p") {
      if (have_problem)
        throw FormatError("duplicate problem line at line " +
                          std::to_string(lineno));
      std::string fmt;
      long n = -1, m = -1;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0)
        throw FormatError("bad problem line at line " + std::to_string(lineno));
      g = Graph(static_cast<std::size_t>(n));
      have_problem = true;
      continue;
    }
    if (tok == "e") {
      if (!have_problem)
        throw FormatError("edge before problem line at line " +
                          std::to_string(lineno));
      long u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1)
        throw FormatError("bad edge line at line " + std::to_string(lineno));
      if (static_cast<std::size_t>(u) > g.n() ||
          static_cast<std::size_t>(v) > g.n())
        throw FormatError("edge endpoint out of range at line " +
                          std::to_string(lineno));
      if (u == v)
        throw SelfLoopError("self-loop at line " + std::to_string(lineno));
      g.add_edge(static_cast<std::size_t>(u) - 1,
                 static_cast<std::size_t>(v) - 1);
      continue;
    }
    throw FormatError("unknown directive '" + tok + "' at line " +
                      std::to_string(lineno));
  }
  if (!have_problem) throw FormatError("missing problem line");
  return g;
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges())
    out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

// 0/1 adjacency matrix over the rationals.
inline RatMatrix adjacency_matrix(const Graph& g) {
  RatMatrix a(g.n(), g.n());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = Rat(1);
    a(v, u) = Rat(1);
  }
  return a;
}

}  // namespace polystab
