#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/exact_solve.hpp"
#include "polystab/matrix.hpp"
#include "polystab/polytope.hpp"
#include "polystab/qt.hpp"
#include "polystab/simplex_qp.hpp"
#include "polystab/surd.hpp"

namespace polystab {

// Witness that some convex combination of the gadget vertices is singular:
// simplex weights (possibly living in a quadratic extension Q(sqrt(c))) and
// a nonzero kernel vector of the combined matrix.  radicand records c, with
// 0 for an all-rational certificate.  instance_sha256 optionally pins the
// serialized instance the certificate was issued for; empty means unbound.
struct SingularityCertificate {
  std::vector<Surd> weights;
  std::vector<Surd> kernel;
  mpz_class radicand = 0;
  std::string instance_sha256;
};

namespace detail {

// Root of a*t^2 + b*t + c in [0, 1], as an element of Q(sqrt(disc)).
// Precondition (guaranteed by the caller): c < 0 < a + b + c, so a sign
// change happens inside the interval.  The smaller admissible root is
// returned, which makes certificate output deterministic.
inline Surd segment_root(const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero()) {
    // linear: b != 0 because the endpoint values differ in sign
    return Surd(-c / b);
  }
  const Rat disc = b * b - Rat(4) * a * c;
  // disc >= 0: the segment values straddle zero
  const Surd sq = Surd::sqrt_of(disc);
  const Surd two_a = Surd(Rat(2) * a);
  const Surd r1 = (Surd(-b) - sq) / two_a;
  const Surd r2 = (Surd(-b) + sq) / two_a;
  const Surd lo = (r1 <= r2) ? r1 : r2;
  const Surd hi = (r1 <= r2) ? r2 : r1;
  if (lo.sgn() >= 0 && (lo - Surd(1)).sgn() <= 0) return lo;
  if (hi.sgn() >= 0 && (hi - Surd(1)).sgn() <= 0) return hi;
  throw std::logic_error("quadratic has no root in [0,1] despite sign change");
}

}  // namespace detail

// Construct an exact singular convex combination of the nonsingularity
// gadget built from a quadratic threshold instance, or throw NoCertificate
// if every combination is nonsingular.  The witness point is found on the
// segment between the exact simplex minimizer and maximizer of p^T M p:
// the value is quadratic in the segment parameter, so the crossing of 1 is
// a root of a rational quadratic and lives in Q(sqrt(disc)).
inline SingularityCertificate find_singular_combination(const QtInstance& q,
                                                        std::size_t cap = 20) {
  const RatMatrix m = mat_inverse(q.minv);
  const QuadraticExtrema ex = simplex_quadratic_extrema_exact(m, cap);
  if (ex.max.value < Rat(1) || ex.min.value > Rat(1))
    throw NoCertificate("no simplex point reaches the threshold");

  const std::size_t n = q.n;
  std::vector<Surd> w(n);
  if (ex.max.value == Rat(1)) {
    for (std::size_t i = 0; i < n; ++i) w[i] = Surd(ex.max.point[i]);
  } else if (ex.min.value == Rat(1)) {
    for (std::size_t i = 0; i < n; ++i) w[i] = Surd(ex.min.point[i]);
  } else {
    const std::vector<Rat>& p0 = ex.min.point.w;
    const std::vector<Rat>& p1 = ex.max.point.w;
    std::vector<Rat> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = p1[i] - p0[i];
    const std::vector<Rat> md = m * d;
    const std::vector<Rat> mp0 = m * p0;
    Rat a(0), b(0), c(0);
    for (std::size_t i = 0; i < n; ++i) {
      a += d[i] * md[i];
      b += Rat(2) * p0[i] * md[i];
      c += p0[i] * mp0[i];
    }
    c -= Rat(1);
    const Surd t = detail::segment_root(a, b, c);
    for (std::size_t i = 0; i < n; ++i) w[i] = Surd(p0[i]) + t * Surd(d[i]);
  }

  // X(w) = [[M^-1, w], [w^T, 1]] is singular by construction; its kernel is
  // computed two independent ways and both must annihilate exactly.
  SurdMatrix x(n + 1, n + 1);
  x.set_block(0, 0, to_surd(q.minv));
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n) = w[i];
    x(n, i) = w[i];
  }
  x(n, n) = Surd(1);

  // Closed form: (-M w, 1); the last block row gives 1 - w^T M w = 0.
  const SurdMatrix ms = to_surd(m);
  std::vector<Surd> closed(n + 1, Surd(0));
  {
    const std::vector<Surd> mw = ms * w;
    for (std::size_t i = 0; i < n; ++i) closed[i] = -mw[i];
    closed[n] = Surd(1);
  }
  auto eliminated = kernel_vector(x);
  if (!eliminated)
    throw std::logic_error("constructed combination is not singular");
  for (const auto& v : {closed, *eliminated})
    for (const auto& entry : x * v)
      if (!entry.is_zero())
        throw std::logic_error("kernel cross-check failed");

  SingularityCertificate cert;
  cert.weights = std::move(w);
  cert.kernel = std::move(closed);
  cert.radicand = 0;
  for (const auto& s : cert.weights)
    if (s.c() != 0) cert.radicand = s.c();
  return cert;
}

// Exact re-verification: weights form a simplex point over Q(sqrt(c)),
// every entry sticks to the declared radicand, the kernel vector is nonzero
// and Sum_i w_i A_i applied to it vanishes identically.  Shape mismatches
// throw; value failures return false.
inline bool verify_singularity_certificate(const SingularityCertificate& cert,
                                           const PolytopeInstance& inst) {
  inst.validate();
  if (cert.weights.size() != inst.matrices.size())
    throw DimensionMismatch("certificate weight count != vertex count");
  if (cert.kernel.size() != inst.dim)
    throw DimensionMismatch("certificate kernel length != dim");

  for (const auto& s : cert.weights)
    if (s.c() != 0 && s.c() != cert.radicand) return false;
  for (const auto& s : cert.kernel)
    if (s.c() != 0 && s.c() != cert.radicand) return false;

  Surd sum(0);
  for (const auto& s : cert.weights) {
    if (s.sgn() < 0) return false;
    sum += s;
  }
  if (!(sum == Surd(1))) return false;

  bool nonzero = false;
  for (const auto& s : cert.kernel) nonzero |= !s.is_zero();
  if (!nonzero) return false;

  std::vector<Surd> acc(inst.dim, Surd(0));
  for (std::size_t i = 0; i < inst.matrices.size(); ++i) {
    if (cert.weights[i].is_zero()) continue;
    const std::vector<Surd> av = to_surd(inst.matrices[i]) * cert.kernel;
    for (std::size_t r = 0; r < inst.dim; ++r)
      acc[r] += cert.weights[i] * av[r];
  }
  for (const auto& entry : acc)
    if (!entry.is_zero()) return false;
  return true;
}

}  // namespace polystab
