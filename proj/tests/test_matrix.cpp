#include "polystab/matrix.hpp"

#include <gtest/gtest.h>

#include "polystab/errors.hpp"
#include "polystab/exact_solve.hpp"
#include "polystab/rng.hpp"
#include "test_util.hpp"

namespace polystab {
namespace {

using testutil::det_cofactor;
using testutil::random_invertible;
using testutil::random_rat_matrix;

TEST(Matrix, BasicOps) {
  auto a = RatMatrix::from_rows({{1, 2}, {3, 4}});
  auto b = RatMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, RatMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, RatMatrix::from_rows({{1, 3}, {4, 4}}));
  EXPECT_EQ(a.transpose(), RatMatrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), Rat(5));
  EXPECT_THROW(a * RatMatrix(3, 3), DimensionMismatch);
}

TEST(Matrix, BlocksRoundTrip) {
  RatMatrix m(3, 3);
  m.set_block(1, 1, RatMatrix::from_rows({{7, 8}, {9, 10}}));
  EXPECT_EQ(m.block(1, 1, 2, 2), RatMatrix::from_rows({{7, 8}, {9, 10}}));
  EXPECT_EQ(m(0, 0), Rat(0));
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(mat_determinant(RatMatrix::identity(4)), Rat(1));
  EXPECT_EQ(mat_determinant(RatMatrix(3, 3)), Rat(0));
  // adjacency matrix of the triangle has determinant 2
  auto k3 = RatMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(mat_determinant(k3), Rat(2));
  EXPECT_EQ(mat_determinant(RatMatrix(0, 0)), Rat(1));
}

TEST(Determinant, MatchesCofactorOracle) {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RatMatrix m = random_rat_matrix(rng, n);
    EXPECT_EQ(mat_determinant(m), det_cofactor(m)) << m;
  }
}

TEST(Determinant, RowSwapSign) {
  // Leading zero forces a pivot swap; sign must survive it.
  auto m = RatMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(mat_determinant(m), Rat(-1));
}

TEST(Inverse, RoundTrips) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    RatMatrix m = random_invertible(rng, n);
    EXPECT_EQ(m * mat_inverse(m), RatMatrix::identity(n));
  }
}

TEST(Inverse, SingularThrows) {
  auto m = RatMatrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_THROW(mat_inverse(m), SingularMatrix);
}

TEST(SolveLinear, UniqueSolution) {
  auto a = RatMatrix::from_rows({{2, 1}, {1, 3}});
  std::vector<Rat> b{Rat(5), Rat(10)};
  auto x = solve_linear(a, b);
  EXPECT_EQ(a * x, b);
  EXPECT_EQ(x[0], Rat(1));
  EXPECT_EQ(x[1], Rat(3));
}

TEST(SolveLinear, SingularModes) {
  auto a = RatMatrix::from_rows({{1, 1}, {1, 1}});
  std::vector<Rat> consistent{Rat(2), Rat(2)};
  std::vector<Rat> inconsistent{Rat(1), Rat(0)};
  EXPECT_THROW(solve_linear(a, consistent), SingularMatrix);
  EXPECT_THROW(solve_linear(a, inconsistent), InconsistentSystem);
  auto x = solve_linear(a, consistent, /*allow_non_unique=*/true);
  EXPECT_EQ(a * x, consistent);
  EXPECT_THROW(solve_linear(a, inconsistent, true), InconsistentSystem);
}

TEST(SolveLinear, RectangularConsistent) {
  // One equation, three unknowns: x + y + z = 6
  RatMatrix a(1, 3, Rat(1));
  auto x = solve_linear(a, {Rat(6)}, /*allow_non_unique=*/true);
  EXPECT_EQ(x[0] + x[1] + x[2], Rat(6));
}

TEST(KernelVector, FindsNullDirection) {
  auto m = RatMatrix::from_rows({{1, 2}, {2, 4}});
  auto k = kernel_vector(m);
  ASSERT_TRUE(k.has_value());
  auto img = m * *k;
  EXPECT_EQ(img[0], Rat(0));
  EXPECT_EQ(img[1], Rat(0));
  EXPECT_FALSE(kernel_vector(RatMatrix::identity(3)).has_value());
}

TEST(KernelVector, WorksOverSurds) {
  // [[1, sqrt(2)], [sqrt(2), 2]] has rank 1
  const Surd r2 = Surd::sqrt_of(Rat(2));
  SurdMatrix m(2, 2);
  m(0, 0) = Surd(1);
  m(0, 1) = r2;
  m(1, 0) = r2;
  m(1, 1) = Surd(2);
  auto k = kernel_vector(m);
  ASSERT_TRUE(k.has_value());
  auto img = m * *k;
  EXPECT_TRUE(img[0].is_zero());
  EXPECT_TRUE(img[1].is_zero());
}

TEST(DetField, AgreesWithBareissOverRationals) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m = random_rat_matrix(rng, 1 + trial % 4);
    EXPECT_EQ(det_field(m), mat_determinant(m));
  }
}

TEST(DetField, SurdDeterminant) {
  // det [[sqrt(2), 1], [1, sqrt(2)]] = 2 - 1 = 1
  const Surd r2 = Surd::sqrt_of(Rat(2));
  SurdMatrix m(2, 2);
  m(0, 0) = r2;
  m(0, 1) = Surd(1);
  m(1, 0) = Surd(1);
  m(1, 1) = r2;
  EXPECT_EQ(det_field(m), Surd(1));
}

TEST(TrySolveSquare, SingularReturnsEmpty) {
  auto a = RatMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(try_solve_square(a, {Rat(1), Rat(2)}).has_value());
}

}  // namespace
}  // namespace polystab
