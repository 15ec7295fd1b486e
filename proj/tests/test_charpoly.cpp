#include "polystab/charpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "polystab/numeric_eigen.hpp"
#include "polystab/rng.hpp"
#include "polystab/stability.hpp"
#include "test_util.hpp"

namespace polystab {
namespace {

using testutil::random_rat_matrix;

// Symbolic characteristic polynomial oracle: expand det(xI - A) by cofactors
// over the polynomial ring, coefficients as Rat vectors (ascending).
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly poly_add(Poly p, const Poly& q) {
  if (q.size() > p.size()) p.resize(q.size(), Rat(0));
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

Poly char_poly_oracle(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc{Rat(0)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    Poly term = poly_mul(m[0][j], char_poly_oracle(minor));
    if (j % 2) for (auto& t : term) t = -t;
    acc = poly_add(acc, term);
  }
  return acc;
}

Poly char_poly_oracle(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = Poly{-a(i, j), Rat(1)};  // x - a_ii
      else
        m[i][j] = Poly{-a(i, j)};
    }
  return char_poly_oracle(m);
}

TEST(CharPoly, CompanionOf2x2Gadget) {
  // [[0, 1], [-1, -1]] has char poly x^2 + x + 1
  auto b = RatMatrix::from_rows({{0, 1}, {-1, -1}});
  auto p = char_poly(b);
  ASSERT_EQ(p.coeffs.size(), 3u);
  EXPECT_EQ(p.coeffs[0], Rat(1));
  EXPECT_EQ(p.coeffs[1], Rat(1));
  EXPECT_EQ(p.coeffs[2], Rat(1));
}

TEST(CharPoly, MatchesSymbolicOracle) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    RatMatrix m = random_rat_matrix(rng, n);
    EXPECT_EQ(char_poly(m).coeffs, char_poly_oracle(m)) << m;
  }
}

TEST(CharPoly, ConstantTermIsSignedDeterminant) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RatMatrix m = random_rat_matrix(rng, n);
    const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
    EXPECT_EQ(char_poly(m).coeffs[0], sign * mat_determinant(m));
  }
}

TEST(CharPoly, VanishesAtNumericEigenvalues) {
  Rng rng(303);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 4;
    RatMatrix m = random_rat_matrix(rng, n, 3, 2);
    const auto p = char_poly(m);
    for (const auto& z : eigs_numeric(m))
      EXPECT_LT(std::abs(p.eval(z)), 1e-6) << m;
  }
}

TEST(Hurwitz, KnownStableAndUnstable) {
  EXPECT_TRUE(is_hurwitz(RatMatrix::from_rows({{-1}})));
  EXPECT_FALSE(is_hurwitz(RatMatrix::from_rows({{0}})));
  EXPECT_FALSE(is_hurwitz(RatMatrix::from_rows({{1}})));
  // companion gadget: roots at (-1 +- i sqrt(3))/2, stable
  EXPECT_TRUE(is_hurwitz(RatMatrix::from_rows({{0, 1}, {-1, -1}})));
  // pure rotation: eigenvalues on the imaginary axis, not Hurwitz
  EXPECT_FALSE(is_hurwitz(RatMatrix::from_rows({{0, 1}, {-1, 0}})));
  // [[ -2, 1], [0, -3]]: eigenvalues -2, -3
  EXPECT_TRUE(is_hurwitz(RatMatrix::from_rows({{-2, 1}, {0, -3}})));
}

TEST(Hurwitz, AgreesWithNumericSpectrumAwayFromAxis) {
  Rng rng(77);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.int_in(0, 3));
    RatMatrix m = random_rat_matrix(rng, n, 4, 2);
    double closest = 1e9;
    double maxre = -1e9;
    for (const auto& z : eigs_numeric(m)) {
      closest = std::min(closest, std::abs(z.real()));
      maxre = std::max(maxre, z.real());
    }
    if (closest < 1e-4) continue;  // too close to the axis to trust doubles
    EXPECT_EQ(is_hurwitz(m), maxre < 0) << m;
    ++checked;
  }
}

TEST(Hurwitz, MinorsForCubic) {
  // x^3 + 2x^2 + 3x + 4: Delta_1 = 2, Delta_2 = 2*3 - 4 = 2, Delta_3 = 8
  CharPoly p;
  p.coeffs = {Rat(4), Rat(3), Rat(2), Rat(1)};
  const auto minors = hurwitz_minors(p);
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_EQ(minors[0], Rat(2));
  EXPECT_EQ(minors[1], Rat(2));
  EXPECT_EQ(minors[2], Rat(8));
}

TEST(NegSemidefinite, CoefficientTest) {
  EXPECT_TRUE(is_negative_semidefinite(RatMatrix(2, 2)));  // zero matrix
  EXPECT_TRUE(is_negative_semidefinite(
      RatMatrix::from_rows({{-1, 0}, {0, 0}})));
  EXPECT_FALSE(is_negative_semidefinite(
      RatMatrix::from_rows({{1, 0}, {0, -1}})));
  // [[0,0],[0,-2]] block appears as B + B^T for every gadget
  EXPECT_TRUE(is_negative_semidefinite(
      RatMatrix::from_rows({{0, 0}, {0, -2}})));
  EXPECT_THROW(is_negative_semidefinite(RatMatrix::from_rows({{0, 1}, {0, 0}})),
               DimensionMismatch);
}

TEST(NumericEigs, SortedAndAccurate) {
  auto m = RatMatrix::from_rows({{0, 1}, {-1, -1}});
  auto ev = eigs_numeric(m);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0].real(), -0.5, 1e-12);
  EXPECT_NEAR(ev[0].imag(), -std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(ev[1].imag(), std::sqrt(3.0) / 2, 1e-12);
}

TEST(NumericSvals, KnownValues) {
  auto d = RatMatrix::from_rows({{3, 0}, {0, -4}});
  auto sv = svals_numeric(d);
  ASSERT_EQ(sv.size(), 2u);
  EXPECT_NEAR(sv[0], 4.0, 1e-12);
  EXPECT_NEAR(sv[1], 3.0, 1e-12);
  auto z = svals_numeric(RatMatrix(2, 2));
  EXPECT_EQ(z, (std::vector<double>{0.0, 0.0}));
  auto i3 = svals_numeric(RatMatrix::identity(3));
  EXPECT_EQ(i3, (std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(NumericSvals, RectangularCount) {
  RatMatrix wide(2, 5);
  wide(0, 0) = Rat(1);
  wide(1, 4) = Rat(2);
  EXPECT_EQ(svals_numeric(wide).size(), 2u);
  EXPECT_EQ(svals_numeric(wide.transpose()).size(), 2u);
}

}  // namespace
}  // namespace polystab
