#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "polystab/matrix.hpp"
#include "polystab/numeric_eigen.hpp"

namespace polystab {

// Matrix exponential by scaling-and-squaring with a Taylor kernel: halve
// the matrix until its 1-norm is at most 1/2, sum the series until terms
// fall below 1e-20 relative, then square back.  Accuracy on desk-scale
// inputs is limited by double rounding, not truncation.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  if (n != x.cols()) throw std::invalid_argument("expm needs a square matrix");
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    if (squarings < 0) squarings = 0;
  }
  const Eigen::MatrixXd xs = x / std::ldexp(1.0, squarings);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = term * xs / static_cast<double>(k);
    sum += term;
    const double tn = term.cwiseAbs().colwise().sum().maxCoeff();
    const double sn = sum.cwiseAbs().colwise().sum().maxCoeff();
    if (tn <= 1e-20 * sn) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// exp(t * B) for an exact-rational generator; t >= 0 by contract (the
// switched systems here only run forward in time).
inline Eigen::MatrixXd expm(const RatMatrix& b, double t) {
  if (t < 0) throw std::invalid_argument("negative time step");
  return expm(Eigen::MatrixXd(to_eigen(b) * t));
}

}  // namespace polystab
