#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "polystab/certificates.hpp"
#include "polystab/graph.hpp"
#include "polystab/numeric_eigen.hpp"
#include "polystab/polytope.hpp"
#include "polystab/qt.hpp"
#include "polystab/rng.hpp"
#include "polystab/simplex_qp.hpp"
#include "polystab/stability.hpp"

namespace polystab {

enum class StabilityOutcome {
  AllCombinationsHurwitz,    // proven only when exactly_resolved
  UnstableCombinationFound,  // witness attached
};

enum class CheckMethod { ExactViaGadgetStructure, VertexPlusSearch };

struct StabilityVerdict {
  StabilityOutcome outcome = StabilityOutcome::AllCombinationsHurwitz;
  bool exactly_resolved = false;
  CheckMethod method = CheckMethod::VertexPlusSearch;
  // rational witness (vertex or search hit), exact non-Hurwitz combination
  std::optional<std::vector<Rat>> unstable_weights;
  // irrational witness from the gadget path: singular inner combination
  std::optional<SingularityCertificate> gadget_certificate;
  double max_real_part = std::numeric_limits<double>::quiet_NaN();
};

struct SearchBudget {
  std::size_t starts = 16;
  std::size_t iters = 200;
  std::uint64_t seed = 0;
};

namespace detail {

// Recognize the companion embedding [[0, A^T], [-A, -I]] and recover the
// inner vertex list; empty optional if any block deviates.
inline std::optional<std::vector<RatMatrix>> extract_stability_blocks(
    const PolytopeInstance& inst) {
  if (inst.dim % 2 != 0 || inst.dim == 0) return std::nullopt;
  const std::size_t d = inst.dim / 2;
  std::vector<RatMatrix> inner;
  for (const auto& b : inst.matrices) {
    const RatMatrix a = Rat(-1) * b.block(d, 0, d, d);
    if (b.block(0, 0, d, d) != RatMatrix(d, d)) return std::nullopt;
    if (b.block(0, d, d, d) != a.transpose()) return std::nullopt;
    if (b.block(d, d, d, d) != Rat(-1) * RatMatrix::identity(d))
      return std::nullopt;
    inner.push_back(a);
  }
  return inner;
}

// Recognize the bordered-identity layout [[P, e_i], [e_i^T, 1]] shared by
// nonsingularity gadget vertices; recovers the threshold instance P = M^-1.
inline std::optional<QtInstance> extract_qt_structure(
    const std::vector<RatMatrix>& xs) {
  if (xs.empty()) return std::nullopt;
  const std::size_t dim = xs[0].rows();
  if (dim < 2) return std::nullopt;
  const std::size_t n = dim - 1;
  if (xs.size() != n) return std::nullopt;
  const RatMatrix p = xs[0].block(0, 0, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = xs[i];
    if (x.rows() != dim || x.cols() != dim) return std::nullopt;
    if (x.block(0, 0, n, n) != p) return std::nullopt;
    if (x(n, n) != Rat(1)) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
      const Rat want = (r == i) ? Rat(1) : Rat(0);
      if (x(r, n) != want || x(n, r) != want) return std::nullopt;
    }
  }
  if (mat_determinant(p).is_zero()) return std::nullopt;
  QtInstance q;
  q.n = n;
  q.minv = p;
  return q;
}

inline double phi_max_real(const std::vector<Eigen::MatrixXd>& mats,
                           const std::vector<double>& alpha) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(mats[0].rows(), mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i) a += alpha[i] * mats[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    best = std::max(best, es.eigenvalues()(i).real());
  return best;
}

inline std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (auto& x : v) x = std::max(0.0, x - theta);
  // renormalize away accumulated rounding
  double s = 0.0;
  for (double x : v) s += x;
  if (s > 0)
    for (auto& x : v) x /= s;
  return v;
}

// Best rational approximation with denominator <= limit (continued
// fraction convergents/semiconvergents would be tighter; plain convergents
// are enough to land on nearby grid points).
inline Rat approx_rational(double x, long limit) {
  if (x <= 0) return Rat(0);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(frac);
    if (fl > 1e17) break;
    const long a = static_cast<long>(fl);
    if (q0 + a * q1 <= 0 || p1 > (std::numeric_limits<long>::max() - p0) / std::max(1L, a))
      break;
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > limit) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  return Rat(p1, q1);
}

// Snap a numeric simplex point onto exact rationals with bounded
// denominators, preserving nonnegativity and the unit sum.
inline std::vector<Rat> rationalize_simplex(const std::vector<double>& alpha,
                                            long den_limit) {
  const std::size_t k = alpha.size();
  std::vector<Rat> w(k, Rat(0));
  Rat sum(0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    w[i] = approx_rational(std::max(0.0, alpha[i]), den_limit);
    if (w[i] > Rat(1)) w[i] = Rat(1);
    sum += w[i];
  }
  if (sum > Rat(1)) {
    // scale down proportionally; stays exact and nonnegative
    for (std::size_t i = 0; i + 1 < k; ++i) w[i] /= sum;
    sum = Rat(1);
  }
  w[k - 1] = Rat(1) - sum;
  return w;
}

}  // namespace detail

// Hurwitz stability of the whole matrix polytope.
//
// Decision ladder:
//   1. every vertex is tested exactly (Routh-Hurwitz); a failing vertex is
//      a proven counterexample;
//   2. instances carrying the companion-embedding structure are resolved
//      exactly through the quadratic threshold reduction, in both
//      directions (stable and unstable);
//   3. otherwise a multistart projected-gradient ascent looks for interior
//      counterexamples; any numeric hit is re-verified exactly at a nearby
//      rational point before being reported.  A clean search is evidence,
//      not proof: exactly_resolved stays false (except k = 1, where the
//      polytope is the vertex).
inline StabilityVerdict polytope_hurwitz_check(const PolytopeInstance& inst,
                                               const SearchBudget& budget = {}) {
  inst.validate();
  StabilityVerdict v;

  for (std::size_t i = 0; i < inst.matrices.size(); ++i) {
    if (!is_hurwitz(inst.matrices[i])) {
      v.outcome = StabilityOutcome::UnstableCombinationFound;
      v.exactly_resolved = true;
      v.method = CheckMethod::VertexPlusSearch;
      std::vector<Rat> w(inst.matrices.size(), Rat(0));
      w[i] = Rat(1);
      v.unstable_weights = std::move(w);
      v.max_real_part = max_real_part(inst.matrices[i]);
      return v;
    }
  }

  if (inst.kind == PolytopeKind::StabilityGadget) {
    const auto inner = detail::extract_stability_blocks(inst);
    if (inner) {
      const auto qt = detail::extract_qt_structure(*inner);
      if (qt) {
        QtInstance q = *qt;
        q.provenance = inst.provenance;
        if (inst.provenance) {
          // Cross-check the carried construction record before trusting it.
          const QtInstance rebuilt = build_qt_instance(
              parse_dimacs(inst.provenance->graph_dimacs),
              inst.provenance->tau);
          if (rebuilt.minv != q.minv ||
              rebuilt.provenance->istar != inst.provenance->istar)
            throw PreconditionNotVerified(
                "provenance does not reproduce the instance");
        }
        v.method = CheckMethod::ExactViaGadgetStructure;
        v.exactly_resolved = true;
        if (qt_decide(q)) {
          v.outcome = StabilityOutcome::UnstableCombinationFound;
          v.gadget_certificate = find_singular_combination(q);
          // singular A(w) puts an eigenvalue of B(w) exactly at zero
          v.max_real_part = 0.0;
        } else {
          v.outcome = StabilityOutcome::AllCombinationsHurwitz;
        }
        return v;
      }
    }
  }

  const std::size_t k = inst.matrices.size();
  if (k == 1) {
    v.outcome = StabilityOutcome::AllCombinationsHurwitz;
    v.exactly_resolved = true;
    v.method = CheckMethod::VertexPlusSearch;
    return v;
  }

  // Numeric counterexample hunt.
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(k);
  for (const auto& m : inst.matrices) mats.push_back(to_eigen(m));
  const Rng base(budget.seed);
  double best_phi = -std::numeric_limits<double>::infinity();
  std::vector<double> best_alpha;
  for (std::size_t s = 0; s < budget.starts; ++s) {
    Rng rng = base.fork(s);
    std::vector<double> alpha = rng.dirichlet(k);
    double phi = detail::phi_max_real(mats, alpha);
    double step = 0.1;
    for (std::size_t it = 0; it < budget.iters; ++it) {
      std::vector<double> grad(k);
      const double h = 1e-6;
      for (std::size_t i = 0; i < k; ++i) {
        auto ap = alpha, am = alpha;
        ap[i] += h;
        am[i] -= h;
        grad[i] = (detail::phi_max_real(mats, ap) -
                   detail::phi_max_real(mats, am)) /
                  (2 * h);
      }
      bool improved = false;
      while (step > 1e-12) {
        std::vector<double> cand(k);
        for (std::size_t i = 0; i < k; ++i)
          cand[i] = alpha[i] + step * grad[i];
        cand = detail::project_simplex(cand);
        const double cphi = detail::phi_max_real(mats, cand);
        if (cphi > phi + 1e-14) {
          alpha = std::move(cand);
          phi = cphi;
          improved = true;
          break;
        }
        step /= 2;
      }
      if (!improved) break;
      if (phi > 1e-6) break;  // already clearly positive
    }
    if (phi > best_phi) {
      best_phi = phi;
      best_alpha = alpha;
    }
  }

  if (!best_alpha.empty() && best_phi > -1e-7) {
    // Snap to nearby rational grids and confirm exactly.
    for (long den : {10L, 1000L, 1000000L}) {
      const std::vector<Rat> w = detail::rationalize_simplex(best_alpha, den);
      bool nonneg = true;
      for (const auto& x : w) nonneg &= x.sgn() >= 0;
      if (!nonneg) continue;
      const RatMatrix combo = inst.at(w);
      if (!is_hurwitz(combo)) {
        v.outcome = StabilityOutcome::UnstableCombinationFound;
        v.exactly_resolved = true;
        v.method = CheckMethod::VertexPlusSearch;
        v.unstable_weights = w;
        v.max_real_part = max_real_part(combo);
        return v;
      }
    }
  }

  v.outcome = StabilityOutcome::AllCombinationsHurwitz;
  v.exactly_resolved = false;
  v.method = CheckMethod::VertexPlusSearch;
  return v;
}

}  // namespace polystab
