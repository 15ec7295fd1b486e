#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "polystab/exact_solve.hpp"
#include "polystab/graph.hpp"
#include "polystab/ladder.hpp"
#include "polystab/matrix.hpp"
#include "polystab/polytope.hpp"
#include "polystab/qt.hpp"
#include "polystab/rng.hpp"

namespace polystab {

// Matrix polytope whose singular convex combinations are exactly the
// quadratic threshold witnesses: X_i = [[M^-1, e_i], [e_i^T, 1]].  With
// weights p the combination is X(p) = [[M^-1, p], [p^T, 1]], and by the
// Schur complement det X(p) = det(M^-1) (1 - p^T M p).
inline PolytopeInstance build_nonsingularity_gadget(const QtInstance& q) {
  const std::size_t n = q.n;
  PolytopeInstance inst;
  inst.dim = n + 1;
  inst.kind = PolytopeKind::NonsingularityGadget;
  inst.provenance = q.provenance;
  inst.matrices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix x(n + 1, n + 1);
    x.set_block(0, 0, q.minv);
    x(i, n) = Rat(1);
    x(n, i) = Rat(1);
    x(n, n) = Rat(1);
    inst.matrices.push_back(std::move(x));
  }
  return inst;
}

// Companion embedding B_i = [[0, A_i^T], [-A_i, -I]].  Every convex
// combination satisfies B(p) + B(p)^T = diag(0, -2I) <= 0, so trajectories
// never grow; B(p) is Hurwitz exactly when A(p) is nonsingular (the
// spectrum solves lambda^2 + lambda + s^2 = 0 over singular values s of
// A(p), and Re(lambda) = 0 forces s = 0).
inline PolytopeInstance build_stability_gadget(const PolytopeInstance& inner) {
  inner.validate();
  const std::size_t d = inner.dim;
  PolytopeInstance out;
  out.dim = 2 * d;
  out.kind = PolytopeKind::StabilityGadget;
  out.provenance = inner.provenance;
  out.matrices.reserve(inner.matrices.size());
  for (const auto& a : inner.matrices) {
    RatMatrix b(2 * d, 2 * d);
    b.set_block(0, d, a.transpose());
    b.set_block(d, 0, Rat(-1) * a);
    for (std::size_t i = 0; i < d; ++i) b(d + i, d + i) = Rat(-1);
    out.matrices.push_back(std::move(b));
  }
  return out;
}

// Clique number recovery through any sound quadratic threshold oracle:
// scan the ladder from the top; the largest accepted threshold 1 - 1/j
// gives omega = j, and no acceptance means the graph is edgeless.
inline std::size_t recover_clique_number(
    const Graph& g,
    const std::function<bool(const QtInstance&)>& qt_oracle) {
  if (g.n() == 0) return 0;
  const ThresholdLadder ladder = ThresholdLadder::for_size(g.n());
  for (std::size_t j = g.n(); j >= 2; --j) {
    const Rat& tau = ladder.elements[j - 1];
    if (qt_oracle(build_qt_instance(g, tau))) return j;
  }
  return 1;
}

// Randomized exact check of the determinantal identity behind the
// nonsingularity gadget: for random rational simplex points p (plus all
// vertices), det X(p) * det M == 1 - p^T M p with zero tolerance.
inline bool check_determinantal_identity(const Graph& g, const Rat& tau,
                                         std::size_t trials,
                                         std::uint64_t seed) {
  const QtInstance q = build_qt_instance(g, tau);
  const PolytopeInstance gadget = build_nonsingularity_gadget(q);
  const RatMatrix m = mat_inverse(q.minv);
  const Rat det_m = mat_determinant(m);
  Rng rng(seed);
  std::vector<std::vector<Rat>> points;
  for (std::size_t i = 0; i < q.n; ++i) {
    std::vector<Rat> e(q.n, Rat(0));
    e[i] = Rat(1);
    points.push_back(std::move(e));
  }
  for (std::size_t t = 0; t < trials; ++t)
    points.push_back(rng.simplex_rat(q.n));
  for (const auto& p : points) {
    const std::vector<Rat> mp = m * p;
    Rat quad(0);
    for (std::size_t i = 0; i < q.n; ++i) quad += p[i] * mp[i];
    if (mat_determinant(gadget.at(p)) * det_m != Rat(1) - quad) return false;
  }
  return true;
}

}  // namespace polystab
