#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Characteristic polynomial det(lambda*I - A), stored by ascending degree.
// Monic by construction: coeffs[n] == 1 for an n x n input.
struct CharPoly {
  std::vector<Rat> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }

  std::complex<double> eval(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = acc * z + std::complex<double>(coeffs[i].to_double(), 0.0);
    return acc;
  }
};

// Faddeev-LeVerrier iteration: M_1 = A, c_1 = -tr(M_1),
// M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.  Exact over rationals;
// the divisions by k are exact in the trace formula.
inline CharPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("char_poly of non-square");
  const std::size_t n = a.rows();
  CharPoly p;
  p.coeffs.assign(n + 1, Rat(0));
  p.coeffs[n] = Rat(1);
  if (n == 0) return p;
  RatMatrix m = a;
  Rat c = -m.trace();
  p.coeffs[n - 1] = c;
  for (std::size_t k = 2; k <= n; ++k) {
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c;
    m = a * shifted;
    c = -m.trace() / Rat(static_cast<long>(k));
    p.coeffs[n - k] = c;
  }
  return p;
}

}  // namespace polystab
