#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace polystab {

namespace detail {

// Clear denominators row by row: W[i] = l_i * [A[i] | R[i]] with l_i the
// (positive) lcm of the row's denominators.  Bareiss elimination then stays
// in integers, which keeps intermediate operands small (fraction-free
// single-step elimination, Bareiss 1968).
struct ScaledRows {
  std::vector<std::vector<mpz_class>> w;  // n x (cols_a + cols_r)
  std::vector<mpz_class> rowscale;        // l_i > 0
};

inline ScaledRows scale_rows(const RatMatrix& a, const RatMatrix* rhs) {
  const std::size_t n = a.rows();
  const std::size_t ca = a.cols();
  const std::size_t cr = rhs ? rhs->cols() : 0;
  ScaledRows out;
  out.w.assign(n, std::vector<mpz_class>(ca + cr));
  out.rowscale.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < ca; ++j) l = lcm(l, a(i, j).den());
    for (std::size_t j = 0; j < cr; ++j) l = lcm(l, (*rhs)(i, j).den());
    out.rowscale[i] = l;
    auto scaled = [&](const Rat& x) {
      return mpz_class(x.num() * (l / x.den()));
    };
    for (std::size_t j = 0; j < ca; ++j) out.w[i][j] = scaled(a(i, j));
    for (std::size_t j = 0; j < cr; ++j) out.w[i][ca + j] = scaled((*rhs)(i, j));
  }
  return out;
}

// Fraction-free forward elimination on the first `pivcols` columns.
// Returns false if a structurally zero pivot column was hit (the leading
// square block is singular).  `sign` accumulates row-swap parity.
inline bool bareiss_forward(std::vector<std::vector<mpz_class>>& w,
                            std::size_t pivcols, int& sign) {
  const std::size_t n = w.size();
  const std::size_t cols = n ? w[0].size() : 0;
  mpz_class prev = 1;
  sign = 1;
  for (std::size_t k = 0; k < pivcols && k + 1 <= n; ++k) {
    std::size_t piv = k;
    while (piv < n && w[piv][k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k) {
      std::swap(w[piv], w[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_class t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[i][j] = std::move(t);
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return true;
}

}  // namespace detail

// Exact determinant via fraction-free elimination on the row-scaled
// integer matrix.
inline Rat mat_determinant(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = a.rows();
  if (n == 0) return Rat(1);
  auto sc = detail::scale_rows(a, nullptr);
  int sign = 1;
  if (!detail::bareiss_forward(sc.w, n, sign)) return Rat(0);
  mpz_class denom = 1;
  for (const auto& l : sc.rowscale) denom *= l;
  mpz_class det = sc.w[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rat(det, denom);
}

namespace detail {

// Forward-eliminate [A | R] and back-substitute each right-hand column.
// Empty result means the square system is singular.
inline std::optional<RatMatrix> solve_columns(const RatMatrix& a,
                                              const RatMatrix& rhs) {
  const std::size_t n = a.rows();
  auto sc = scale_rows(a, &rhs);
  int sign = 1;
  if (!bareiss_forward(sc.w, n, sign)) return std::nullopt;
  RatMatrix x(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rat acc(sc.w[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j)
        acc -= Rat(sc.w[ii][j]) * x(j, c);
      x(ii, c) = acc / Rat(sc.w[ii][ii]);
    }
  }
  return x;
}

}  // namespace detail

// Exact inverse; throws SingularMatrix.
inline RatMatrix mat_inverse(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square");
  auto x = detail::solve_columns(a, RatMatrix::identity(a.rows()));
  if (!x) throw SingularMatrix("matrix is singular");
  return *x;
}

// Solve A x = b for a square system; empty optional when A is singular.
// Cheap enough to use as a feasibility probe in enumeration loops.
inline std::optional<std::vector<Rat>> try_solve_square(
    const RatMatrix& a, const std::vector<Rat>& b) {
  if (!a.is_square() || a.rows() != b.size())
    throw DimensionMismatch("solve shapes");
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto x = detail::solve_columns(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Rat> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (*x)(i, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Generic elimination over an exact field (Rat or Surd).  Plain Gauss-Jordan
// with exact division; used where scalars live in a quadratic extension and
// the integer-scaling trick above does not apply.

template <class T>
struct RowReduction {
  Matrix<T> mat;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class T>
RowReduction<T> row_reduce(Matrix<T> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  RowReduction<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == T(0)) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const T inv_piv = T(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv_piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == T(0)) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(a);
  return out;
}

// One nonzero kernel vector, or empty optional for full column rank.
// Deterministic: frees the lowest-index non-pivot column.
template <class T>
std::optional<std::vector<T>> kernel_vector(const Matrix<T>& a) {
  auto rr = row_reduce(a);
  const std::size_t cols = a.cols();
  if (rr.rank() == cols) return std::nullopt;
  std::size_t free_col = 0;
  {
    std::size_t k = 0;
    while (free_col < cols && k < rr.pivot_cols.size() &&
           rr.pivot_cols[k] == free_col) {
      ++free_col;
      ++k;
    }
  }
  std::vector<T> x(cols, T(0));
  x[free_col] = T(1);
  for (std::size_t r = 0; r < rr.rank(); ++r)
    x[rr.pivot_cols[r]] = -rr.mat(r, free_col);
  return x;
}

// Determinant over a generic field (division-full Gauss).
template <class T>
T det_field(Matrix<T> a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == T(0)) ++piv;
    if (piv == n) return T(0);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
      det = -det;
    }
    det = det * a(k, k);
    const T inv_piv = T(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == T(0)) continue;
      const T f = a(i, k) * inv_piv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// Solve A x = b exactly.  Default mode requires a square nonsingular A
// (SingularMatrix otherwise).  With allow_non_unique, any consistent system
// of any shape yields a particular solution (free variables pinned to zero);
// inconsistent systems throw InconsistentSystem in both modes.
inline std::vector<Rat> solve_linear(const RatMatrix& a,
                                     const std::vector<Rat>& b,
                                     bool allow_non_unique = false) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve shapes");
  if (!allow_non_unique) {
    if (!a.is_square())
      throw SingularMatrix("non-square system without allow_non_unique");
    auto x = try_solve_square(a, b);
    if (x) return *x;
    // Fall through to echelon form to distinguish singular-consistent
    // from inconsistent.
  }
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  auto rr = row_reduce(aug);
  for (auto c : rr.pivot_cols)
    if (c == a.cols()) throw InconsistentSystem("no solution exists");
  if (!allow_non_unique) throw SingularMatrix("singular square system");
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < rr.rank(); ++r)
    x[rr.pivot_cols[r]] = rr.mat(r, a.cols());
  return x;
}

}  // namespace polystab
