#pragma once

#include <cstddef>
#include <vector>

#include "polystab/exact_solve.hpp"
#include "polystab/matrix.hpp"
#include "polystab/polytope.hpp"
#include "polystab/simplex.hpp"

namespace polystab {

// Caratheodory support reduction: rewrite a convex combination of k > n^2+1
// vertex matrices as one using at most n^2+1 of them, preserving the value
// Sum w_i A_i exactly.  Matrices live in an n^2-dimensional affine space, so
// whenever more than n^2+1 weights are active there is an affine dependence
// among the active vertices; sliding along it until a weight hits zero
// shrinks the support by at least one per round.
inline SimplexPoint caratheodory_reduce(const PolytopeInstance& inst,
                                        const SimplexPoint& weights) {
  inst.validate();
  if (weights.dim() != inst.matrices.size())
    throw DimensionMismatch("weight count != vertex count");
  if (!weights.valid()) throw FormatError("weights are not a simplex point");

  const std::size_t n = inst.dim;
  const std::size_t target = n * n + 1;
  std::vector<Rat> w = weights.w;

  for (;;) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) active.push_back(i);
    if (active.size() <= target) break;

    // Affine dependence: columns vec(A_i) for active i, plus an all-ones
    // row so the kernel direction has zero coordinate sum.
    RatMatrix v(n * n + 1, active.size());
    for (std::size_t c = 0; c < active.size(); ++c) {
      const RatMatrix& a = inst.matrices[active[c]];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i * n + j, c) = a(i, j);
      v(n * n, c) = Rat(1);
    }
    auto gamma = kernel_vector(v);
    if (!gamma)  // impossible: more columns than rows
      throw std::logic_error("no affine dependence among active vertices");

    bool has_positive = false;
    for (const auto& x : *gamma) has_positive |= x.sgn() > 0;
    if (!has_positive)
      for (auto& x : *gamma) x = -x;

    // Largest step keeping all weights nonnegative; the argmin weight
    // lands exactly on zero.
    bool first = true;
    Rat tstar(0);
    for (std::size_t c = 0; c < active.size(); ++c) {
      if ((*gamma)[c].sgn() <= 0) continue;
      const Rat bound = w[active[c]] / (*gamma)[c];
      if (first || bound < tstar) {
        tstar = bound;
        first = false;
      }
    }
    for (std::size_t c = 0; c < active.size(); ++c)
      w[active[c]] -= tstar * (*gamma)[c];
  }
  return SimplexPoint::checked(std::move(w));
}

}  // namespace polystab
