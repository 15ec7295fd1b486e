#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/exact_solve.hpp"
#include "polystab/matrix.hpp"
#include "polystab/qt.hpp"
#include "polystab/rational.hpp"
#include "polystab/simplex.hpp"

namespace polystab {

struct QuadraticExtremum {
  Rat value;
  SimplexPoint point;
  std::vector<std::size_t> support;  // indices with positive coordinate
};

struct QuadraticExtrema {
  QuadraticExtremum max;
  QuadraticExtremum min;
};

// Exact extrema of p^T Q p over the probability simplex by face enumeration.
// On the face supported by F the stationarity system is
//     [ 2 Q_F  -1 ] [p]   [0]
//     [ 1^T     0 ] [l] = [1],
// solved exactly; faces with a singular system are skipped, which loses
// nothing: a singular system means the form is constant along a direction
// inside the face, so the same value is attained on a proper subface that
// is enumerated separately.  Faces are visited by ascending support bitmask
// and an incumbent is replaced only on strict improvement, so the reported
// optimum sits on the first (smallest-bitmask) face attaining it.  For the
// perturbed adjacency forms this makes the argpoint's support a clique.
//
// Cost is Theta(2^n) exact solves; the cap keeps accidental large calls out.
inline QuadraticExtrema simplex_quadratic_extrema_exact(const RatMatrix& q,
                                                        std::size_t cap = 20) {
  if (!q.is_square() || q.rows() == 0)
    throw DimensionMismatch("quadratic form needs a nonempty square matrix");
  const std::size_t n = q.rows();
  if (n > cap)
    throw SizeCapExceeded("face enumeration capped at n = " +
                          std::to_string(cap));

  // The optimizer only sees the symmetric part; p^T Q p = p^T Qs p.
  RatMatrix qs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      qs(i, j) = (q(i, j) + q(j, i)) / Rat(2);

  bool have_max = false, have_min = false;
  QuadraticExtremum best_max, best_min;

  std::vector<std::size_t> idx;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) idx.push_back(i);
    const std::size_t m = idx.size();

    RatMatrix kkt(m + 1, m + 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c)
        kkt(r, c) = Rat(2) * qs(idx[r], idx[c]);
      kkt(r, m) = Rat(-1);
      kkt(m, r) = Rat(1);
    }
    std::vector<Rat> rhs(m + 1, Rat(0));
    rhs[m] = Rat(1);
    auto sol = try_solve_square(kkt, rhs);
    if (!sol) continue;

    bool feasible = true;
    for (std::size_t r = 0; r < m && feasible; ++r)
      feasible = (*sol)[r].sgn() >= 0;
    if (!feasible) continue;

    std::vector<Rat> p(n, Rat(0));
    for (std::size_t r = 0; r < m; ++r) p[idx[r]] = (*sol)[r];
    const std::vector<Rat> qp = qs * p;
    Rat value(0);
    for (std::size_t i = 0; i < n; ++i) value += p[i] * qp[i];

    if (!have_max || value > best_max.value) {
      best_max = {value, SimplexPoint{p}, SimplexPoint{p}.support()};
      have_max = true;
    }
    if (!have_min || value < best_min.value) {
      best_min = {value, SimplexPoint{p}, SimplexPoint{p}.support()};
      have_min = true;
    }
  }
  // Vertices always produce nonsingular stationarity systems, so at least
  // those n candidates were considered.
  return {best_max, best_min};
}

// Quadratic threshold decision: is there a simplex point with p^T M p = 1?
// The form is continuous on a connected set, so the answer is yes exactly
// when 1 lies between the exact minimum and maximum.
inline bool qt_decide(const QtInstance& q, std::size_t cap = 20) {
  const RatMatrix m = mat_inverse(q.minv);
  const QuadraticExtrema ex = simplex_quadratic_extrema_exact(m, cap);
  return ex.max.value >= Rat(1) && ex.min.value <= Rat(1);
}

}  // namespace polystab
