#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/matrix.hpp"

namespace polystab {

inline Eigen::MatrixXd to_eigen(const RatMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a(i, j).to_double();
  return m;
}

// Floating-point eigenvalues via the real Schur form, sorted by real part
// then imaginary part.  Complex pairs are read off the 2x2 diagonal blocks
// of the quasi-triangular factor.
inline std::vector<std::complex<double>> eigs_numeric(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("eigenvalues of non-square");
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());
  std::vector<std::complex<double>> out;
  if (n == 0) return out;
  const Eigen::MatrixXd m = to_eigen(a);
  if (n == 1) {
    out.emplace_back(m(0, 0), 0.0);
    return out;
  }
  Eigen::RealSchur<Eigen::MatrixXd> schur;
  schur.setMaxIterations(100 * n * n);
  schur.compute(m, /*computeU=*/false);
  if (schur.info() != Eigen::Success)
    throw ConvergenceFailure("Schur iteration did not converge");
  const Eigen::MatrixXd& t = schur.matrixT();
  for (Eigen::Index i = 0; i < n;) {
    if (i + 1 < n && t(i + 1, i) != 0.0) {
      // 2x2 block [[p, q], [r, s]] with qr < 0: complex pair
      const double p = t(i, i), q = t(i, i + 1);
      const double r = t(i + 1, i), s = t(i + 1, i + 1);
      const double re = 0.5 * (p + s);
      const double disc = 0.25 * (p - s) * (p - s) + q * r;
      if (disc < 0.0) {
        const double im = std::sqrt(-disc);
        out.emplace_back(re, im);
        out.emplace_back(re, -im);
      } else {
        const double root = std::sqrt(disc);
        out.emplace_back(re + root, 0.0);
        out.emplace_back(re - root, 0.0);
      }
      i += 2;
    } else {
      out.emplace_back(t(i, i), 0.0);
      ++i;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

// Singular values, descending, via the eigendecomposition of the smaller
// Gram matrix; exactly min(rows, cols) values are returned.
inline std::vector<double> svals_numeric(const RatMatrix& a) {
  const Eigen::MatrixXd m = to_eigen(a);
  if (m.rows() == 0 || m.cols() == 0) return {};
  const Eigen::MatrixXd gram = (m.rows() >= m.cols())
                                   ? Eigen::MatrixXd(m.transpose() * m)
                                   : Eigen::MatrixXd(m * m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("symmetric eigensolver did not converge");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(gram.rows()));
  for (Eigen::Index i = gram.rows(); i-- > 0;)
    out.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
  return out;
}

inline double max_real_part(const RatMatrix& a) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : eigs_numeric(a)) best = std::max(best, z.real());
  return best;
}

}  // namespace polystab
