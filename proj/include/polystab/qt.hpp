#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "polystab/exact_solve.hpp"
#include "polystab/graph.hpp"
#include "polystab/matrix.hpp"
#include "polystab/polytope.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Quadratic threshold instance: the question "is there a simplex point p
// with p^T M p = 1" where M is handed over through its inverse.  Keeping
// the inverse as the instance data makes the downstream matrix-polytope
// gadget a plain block assembly.
struct QtInstance {
  std::size_t n = 0;
  RatMatrix minv;  // inverse of the quadratic form matrix
  std::optional<Provenance> provenance;
};

// Smallest i in 1..n+1 for which A + I/(n^2 + i) is invertible.  At most n
// of the n+1 candidate shifts can hit an eigenvalue of -A, so the search
// always succeeds.  Returns the index and the perturbed matrix.
inline std::pair<std::size_t, RatMatrix> select_perturbation(
    const RatMatrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw DimensionMismatch("perturbation needs a nonempty square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 1; i <= n + 1; ++i) {
    RatMatrix m = a;
    const Rat shift(1, static_cast<long>(n * n + i));
    for (std::size_t d = 0; d < n; ++d) m(d, d) += shift;
    if (!mat_determinant(m).is_zero()) return {i, std::move(m)};
  }
  throw std::logic_error("no invertible perturbation in n+1 candidates");
}

// Build the quadratic threshold instance for graph G at threshold tau > 0:
// M = (A + I/(n^2 + i*)) / tau, stored as its inverse.  A simplex point p
// satisfies p^T M p = 1 exactly when p^T (A + I/(n^2+i*)) p = tau, so the
// instance answer read against the threshold ladder recovers the clique
// number of G.
inline QtInstance build_qt_instance(const Graph& g, const Rat& tau) {
  if (g.n() == 0) throw std::invalid_argument("instance needs n >= 1");
  if (tau.sgn() <= 0) throw std::invalid_argument("threshold must be > 0");
  auto [istar, perturbed] = select_perturbation(adjacency_matrix(g));
  QtInstance q;
  q.n = g.n();
  q.minv = tau * mat_inverse(perturbed);
  q.provenance = Provenance{write_dimacs(g), tau, istar};
  return q;
}

}  // namespace polystab
