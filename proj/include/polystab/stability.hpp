#pragma once

#include <cstddef>
#include <vector>

#include "polystab/charpoly.hpp"
#include "polystab/exact_solve.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Hurwitz matrix of a monic polynomial given by ascending coefficients:
// H(i, j) = a_{2(j+1) - (i+1)} in descending-coefficient indexing
// (a_0 = leading = 1), entries with out-of-range index are zero.
inline RatMatrix hurwitz_matrix(const CharPoly& p) {
  const std::size_t n = p.degree();
  // descending coefficients: d[k] = coefficient of lambda^{n-k}
  std::vector<Rat> d(n + 1);
  for (std::size_t k = 0; k <= n; ++k) d[k] = p.coeffs[n - k];
  RatMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long idx = 2 * static_cast<long>(j + 1) - static_cast<long>(i + 1);
      if (idx >= 0 && idx <= static_cast<long>(n))
        h(i, j) = d[static_cast<std::size_t>(idx)];
    }
  return h;
}

// Leading principal minors of the Hurwitz matrix, sizes 1..n.
inline std::vector<Rat> hurwitz_minors(const CharPoly& p) {
  const RatMatrix h = hurwitz_matrix(p);
  std::vector<Rat> out;
  out.reserve(h.rows());
  for (std::size_t k = 1; k <= h.rows(); ++k)
    out.push_back(mat_determinant(h.block(0, 0, k, k)));
  return out;
}

// Routh-Hurwitz criterion on the exact characteristic polynomial: all
// eigenvalues lie in the open left half-plane iff every leading principal
// minor of the Hurwitz matrix is strictly positive.  Positivity of all
// coefficients is a cheap necessary condition checked first.
inline bool is_hurwitz(const RatMatrix& a) {
  const CharPoly p = char_poly(a);
  const std::size_t n = p.degree();
  if (n == 0) return true;  // empty matrix, vacuously stable
  for (std::size_t k = 0; k < n; ++k)
    if (p.coeffs[k].sgn() <= 0) return false;
  const RatMatrix h = hurwitz_matrix(p);
  for (std::size_t k = 1; k <= n; ++k)
    if (mat_determinant(h.block(0, 0, k, k)).sgn() <= 0) return false;
  return true;
}

// For symmetric S: S is negative semidefinite iff det(lambda*I - S) has all
// coefficients >= 0.  (All roots are real; a monic real-rooted polynomial
// has no positive root iff its coefficients are nonnegative.)
inline bool is_negative_semidefinite(const RatMatrix& s) {
  if (!s.is_symmetric())
    throw DimensionMismatch("semidefiniteness test needs a symmetric matrix");
  const CharPoly p = char_poly(s);
  for (const Rat& c : p.coeffs)
    if (c.sgn() < 0) return false;
  return true;
}

}  // namespace polystab
