#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/graph.hpp"
#include "polystab/rational.hpp"

namespace polystab {

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending vertex indices
};

namespace detail {

using Mask = std::uint64_t;

// Branch-and-bound clique feasibility with a greedy-coloring bound.  The
// single primitive "does `cand` contain a clique of size `need`" drives both
// the optimum search and the lexicographic witness reconstruction.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g)
      : n_(g.n()), adj_(g.adjacency_masks()) {}

  bool exists(Mask cand, std::size_t need) const {
    if (need == 0) return true;
    if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
    if (color_bound(cand) < need) return false;
    const int v = std::countr_zero(cand);
    if (exists(cand & adj_[static_cast<std::size_t>(v)], need - 1))
      return true;
    return exists(cand & ~(Mask(1) << v), need);
  }

  // Greedy sequential coloring; the color count bounds the clique number
  // of the induced subgraph from above.
  std::size_t color_bound(Mask cand) const {
    std::vector<Mask> classes;
    for (Mask rest = cand; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      bool placed = false;
      for (auto& cls : classes) {
        if ((cls & adj_[static_cast<std::size_t>(v)]) == 0) {
          cls |= Mask(1) << v;
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back(Mask(1) << v);
    }
    return classes.size();
  }

  std::size_t greedy_lower(Mask cand) const {
    std::size_t size = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      ++size;
      cand &= adj_[static_cast<std::size_t>(v)];
    }
    return size;
  }

  Mask full() const { return n_ == 64 ? ~Mask(0) : (Mask(1) << n_) - 1; }
  Mask neighbors(std::size_t v) const { return adj_[v]; }
  Mask above(std::size_t v) const {  // vertices strictly greater than v
    if (v + 1 >= 64) return 0;
    return full() & ~((Mask(1) << (v + 1)) - 1);
  }

 private:
  std::size_t n_;
  std::vector<Mask> adj_;
};

}  // namespace detail

// Exact maximum clique with the lexicographically smallest witness (compare
// the ascending vertex sequences).  Exponential-time branch and bound with a
// coloring bound; the cap guards against accidental large inputs.
inline CliqueResult max_clique_exact(const Graph& g, std::size_t cap = 32) {
  if (g.n() > cap)
    throw SizeCapExceeded("clique search capped at n = " + std::to_string(cap));
  if (g.n() == 0) return {};
  const detail::CliqueSolver solver(g);
  const detail::Mask full = solver.full();

  std::size_t omega = solver.greedy_lower(full);
  while (solver.exists(full, omega + 1)) ++omega;

  // Witness: repeatedly take the smallest vertex that still completes a
  // clique of the required size among larger vertices.
  CliqueResult out;
  out.size = omega;
  detail::Mask cand = full;
  std::size_t need = omega;
  std::size_t from = 0;
  while (need > 0) {
    for (std::size_t v = from; v < g.n(); ++v) {
      if (!(cand & (detail::Mask(1) << v))) continue;
      const detail::Mask rest =
          cand & solver.neighbors(v) & solver.above(v);
      if (solver.exists(rest, need - 1)) {
        out.witness.push_back(v);
        cand = rest;
        from = v + 1;
        --need;
        break;
      }
    }
  }
  return out;
}

// Exhaustive reference: every vertex subset, n <= 16.  Kept as the oracle
// the branch-and-bound solver is tested against.
inline CliqueResult max_clique_bruteforce(const Graph& g) {
  if (g.n() > 16) throw SizeCapExceeded("brute force capped at n = 16");
  if (g.n() == 0) return {};
  const auto adj = g.adjacency_masks();
  const std::uint32_t total = std::uint32_t(1) << g.n();
  CliqueResult best;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best.size) continue;
    bool clique = true;
    for (std::uint32_t rest = mask; rest && clique;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint64_t others = std::uint64_t(mask) & ~(std::uint64_t(1) << v);
      clique = (others & ~adj[static_cast<std::size_t>(v)]) == 0;
    }
    if (!clique) continue;
    std::vector<std::size_t> verts;
    for (std::uint32_t rest = mask; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      verts.push_back(static_cast<std::size_t>(v));
    }
    if (size > best.size || (size == best.size && verts < best.witness))
      best = {size, verts};
  }
  return best;
}

// Quadratic form optimum over the simplex for the adjacency matrix:
// max p^T A p = 1 - 1/omega (Motzkin-Straus).
inline Rat motzkin_straus_value(const Graph& g, std::size_t cap = 32) {
  if (g.n() == 0)
    throw std::invalid_argument("Motzkin-Straus value needs n >= 1");
  const std::size_t omega = max_clique_exact(g, cap).size;
  return Rat(1) - Rat(1, static_cast<long>(omega));
}

}  // namespace polystab
