#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polystab/certificates.hpp"
#include "polystab/errors.hpp"
#include "polystab/expm.hpp"
#include "polystab/polytope.hpp"
#include "polystab/rng.hpp"
#include "polystab/stability.hpp"
#include "polystab/stability_check.hpp"

namespace polystab {

// Piecewise-constant switching signal on [0, horizon]: segment j runs from
// breakpoints[j] to breakpoints[j+1] under convex vertex weights
// controls[j].  Weights are doubles (certificate-derived signals carry
// irrational weights), simplex membership is enforced within 1e-12.
struct SwitchingSignal {
  double horizon = 1.0;
  std::vector<double> breakpoints;            // m+1 values, 0 .. horizon
  std::vector<std::vector<double>> controls;  // m rows of k weights

  void validate(std::size_t k) const {
    if (!(horizon > 0)) throw FormatError("signal horizon must be positive");
    if (breakpoints.size() < 2 || controls.size() + 1 != breakpoints.size())
      throw FormatError("breakpoint/control count mismatch");
    if (breakpoints.front() != 0.0 || breakpoints.back() != horizon)
      throw FormatError("breakpoints must start at 0 and end at the horizon");
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j)
      if (!(breakpoints[j] < breakpoints[j + 1]))
        throw FormatError("breakpoints must be strictly increasing");
    for (const auto& c : controls) {
      if (c.size() != k) throw FormatError("control width != vertex count");
      double sum = 0.0;
      for (double x : c) {
        if (x < -1e-12) throw FormatError("negative control weight");
        sum += x;
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw FormatError("control weights must sum to 1");
    }
  }

  static SwitchingSignal constant(std::vector<double> control,
                                  double horizon) {
    SwitchingSignal s;
    s.horizon = horizon;
    s.breakpoints = {0.0, horizon};
    s.controls = {std::move(control)};
    return s;
  }

  // Random signal: segment count uniform in 1..max_segments, segment
  // lengths proportional to exponentials (breakpoints are then uniform
  // order statistics), controls uniform on the simplex.
  static SwitchingSignal random(Rng& rng, std::size_t k, double horizon,
                                std::size_t max_segments = 8) {
    SwitchingSignal s;
    s.horizon = horizon;
    const std::size_t m = 1 + rng.below(max_segments);
    std::vector<double> len(m);
    double total = 0.0;
    for (auto& l : len) {
      l = rng.exponential() + 1e-12;
      total += l;
    }
    s.breakpoints.push_back(0.0);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += len[j] / total * horizon;
      s.breakpoints.push_back(j + 1 == m ? horizon : acc);
    }
    for (std::size_t j = 0; j < m; ++j) s.controls.push_back(rng.dirichlet(k));
    return s;
  }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<double> norms;  // Euclidean norms, one per sample
};

struct DecayReport {
  double final_norm = 0.0;
  double max_norm_increase = 0.0;  // max over consecutive samples
  double decay_exponent = 0.0;     // -log(final/initial)/horizon
  bool monotone_within_tol = false;
  std::string note;
};

// Integrate x' = B(p(t)) x sample by sample: within each constant segment
// the flow is exp(h B), applied repeatedly to avoid re-exponentiating per
// sample point.
inline Trajectory simulate(const PolytopeInstance& inst,
                           const SwitchingSignal& sig,
                           const Eigen::VectorXd& x0,
                           std::size_t samples_per_segment = 16) {
  inst.validate();
  sig.validate(inst.matrices.size());
  if (static_cast<std::size_t>(x0.size()) != inst.dim)
    throw DimensionMismatch("initial state length != dim");
  if (samples_per_segment == 0)
    throw std::invalid_argument("need at least one sample per segment");

  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(inst.matrices.size());
  for (const auto& m : inst.matrices) mats.push_back(to_eigen(m));

  Trajectory traj;
  Eigen::VectorXd x = x0;
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  traj.norms.push_back(x.norm());
  for (std::size_t j = 0; j < sig.controls.size(); ++j) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(inst.dim, inst.dim);
    for (std::size_t i = 0; i < mats.size(); ++i)
      gen += sig.controls[j][i] * mats[i];
    const double seg = sig.breakpoints[j + 1] - sig.breakpoints[j];
    const double h = seg / static_cast<double>(samples_per_segment);
    const Eigen::MatrixXd step = expm(Eigen::MatrixXd(gen * h));
    for (std::size_t r = 1; r <= samples_per_segment; ++r) {
      x = step * x;
      traj.times.push_back(sig.breakpoints[j] +
                           h * static_cast<double>(r));
      traj.states.push_back(x);
      traj.norms.push_back(x.norm());
    }
  }
  return traj;
}

// Norm monotonicity report.  The precondition B_i + B_i^T <= 0 is checked
// exactly first (PreconditionNotVerified otherwise): with a dissipative
// right-hand side, d/dt |x|^2 = x^T (B + B^T) x <= 0, so any sampled
// increase beyond tol is a numerical-integration defect, not dynamics.
inline DecayReport check_monotone_norm(const Trajectory& traj,
                                       const PolytopeInstance& inst,
                                       double tol = 1e-8) {
  for (const auto& b : inst.matrices)
    if (!is_negative_semidefinite(b + b.transpose()))
      throw PreconditionNotVerified(
          "a vertex generator is not dissipative (B + B^T has positive "
          "spectrum)");
  if (traj.norms.empty()) throw FormatError("empty trajectory");
  DecayReport rep;
  rep.final_norm = traj.norms.back();
  for (std::size_t i = 0; i + 1 < traj.norms.size(); ++i)
    rep.max_norm_increase =
        std::max(rep.max_norm_increase, traj.norms[i + 1] - traj.norms[i]);
  const double t_span = traj.times.back() - traj.times.front();
  const double initial = traj.norms.front();
  if (t_span > 0 && initial > 0 && rep.final_norm > 0)
    rep.decay_exponent = -std::log(rep.final_norm / initial) / t_span;
  rep.monotone_within_tol = rep.max_norm_increase <= tol;
  rep.note = rep.monotone_within_tol
                 ? "norm nonincreasing within tolerance"
                 : "norm increased beyond tolerance";
  return rep;
}

// Distance between the true flow of the averaged generator and the m-step
// product-formula approximation (Lie product formula):
//   gap(m) = | (prod_i exp(p_i B_i / m))^m  -  exp(sum_i p_i B_i) |_2.
// First-order splitting converges like 1/m, so gap(m)/gap(2m) -> 2.
inline double lie_product_gap(const PolytopeInstance& inst,
                              const std::vector<double>& p, std::size_t m) {
  inst.validate();
  if (p.size() != inst.matrices.size())
    throw DimensionMismatch("weight count != vertex count");
  if (m == 0) throw std::invalid_argument("m must be positive");
  const Eigen::Index d = static_cast<Eigen::Index>(inst.dim);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(d, d);
  std::vector<Eigen::MatrixXd> mats;
  for (std::size_t i = 0; i < inst.matrices.size(); ++i) {
    mats.push_back(to_eigen(inst.matrices[i]));
    avg += p[i] * mats.back();
  }
  const Eigen::MatrixXd whole = expm(avg);
  Eigen::MatrixXd factor = Eigen::MatrixXd::Identity(d, d);
  for (std::size_t i = 0; i < mats.size(); ++i)
    factor = factor * expm(Eigen::MatrixXd(mats[i] * (p[i] / static_cast<double>(m))));
  Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(d, d);
  for (std::size_t r = 0; r < m; ++r) prod = prod * factor;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(prod - whole);
  return svd.singularValues()(0);
}

// From a singularity certificate for the inner polytope of a companion
// gadget, produce the stationary point: x0 = (v/|v|, 0) and the constant
// signal p = certificate weights.  B(p) x0 = (0, -X(p) v) = 0, so the
// exact trajectory is frozen at x0: unit norm forever, zero tail block.
inline std::pair<Eigen::VectorXd, SwitchingSignal> stationary_certificate(
    const SingularityCertificate& cert, const PolytopeInstance& gadget,
    double horizon = 1.0) {
  gadget.validate();
  const auto inner = detail::extract_stability_blocks(gadget);
  if (!inner)
    throw PreconditionNotVerified(
        "instance lacks the companion embedding structure");
  PolytopeInstance inner_inst;
  inner_inst.dim = gadget.dim / 2;
  inner_inst.kind = PolytopeKind::General;
  inner_inst.matrices = *inner;
  if (!verify_singularity_certificate(cert, inner_inst))
    throw InvalidCertificate(
        "certificate does not verify against the inner polytope");

  const std::size_t d = inner_inst.dim;
  Eigen::VectorXd v(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i)
    v(static_cast<Eigen::Index>(i)) = cert.kernel[i].to_double();
  v /= v.norm();
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * d));
  x0.head(static_cast<Eigen::Index>(d)) = v;

  std::vector<double> control;
  control.reserve(cert.weights.size());
  for (const auto& w : cert.weights) control.push_back(w.to_double());
  return {x0, SwitchingSignal::constant(std::move(control), horizon)};
}

}  // namespace polystab
