#include "polystab/certificates.hpp"

#include <gtest/gtest.h>

#include "graphs.hpp"
#include "polystab/gadgets.hpp"
#include "test_util.hpp"

namespace polystab {
namespace {

using namespace testutil;

TEST(Certificate, TriangleAtOneHalfIsIrrational) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto cert = find_singular_combination(q);
  // the crossing parameter solves 3t^2 - 6t + 2 = 0, so sqrt(3) appears
  EXPECT_EQ(cert.radicand, 3);
  ASSERT_EQ(cert.weights.size(), 3u);
  ASSERT_EQ(cert.kernel.size(), 4u);
  // weights: 1/3 + (2/9) sqrt(3), then two copies of 1/3 - (1/9) sqrt(3)
  EXPECT_EQ(cert.weights[0], Surd(Rat(1, 3), Rat(2, 9), mpz_class(3)));
  EXPECT_EQ(cert.weights[1], Surd(Rat(1, 3), Rat(-1, 9), mpz_class(3)));
  EXPECT_EQ(cert.weights[2], cert.weights[1]);
  auto gadget = build_nonsingularity_gadget(q);
  EXPECT_TRUE(verify_singularity_certificate(cert, gadget));
}

TEST(Certificate, RationalWhenThresholdAtExactOptimum) {
  // M = I reaches p^T M p = 1 exactly at vertices; certificate is rational.
  QtInstance q;
  q.n = 2;
  q.minv = RatMatrix::identity(2);
  auto cert = find_singular_combination(q);
  EXPECT_EQ(cert.radicand, 0);
  for (const auto& s : cert.weights) EXPECT_TRUE(s.is_rational());
  PolytopeInstance gadget = build_nonsingularity_gadget(q);
  EXPECT_TRUE(verify_singularity_certificate(cert, gadget));
}

TEST(Certificate, ScalarInstanceKernel) {
  // minv = [1]: X = [[1,1],[1,1]], kernel is a multiple of (1,-1).
  QtInstance q;
  q.n = 1;
  q.minv = RatMatrix::identity(1);
  auto cert = find_singular_combination(q);
  EXPECT_EQ(cert.weights[0], Surd(1));
  ASSERT_EQ(cert.kernel.size(), 2u);
  const Surd ratio = cert.kernel[0] / cert.kernel[1];
  EXPECT_EQ(ratio, Surd(-1));
}

TEST(Certificate, NoCertificateWhenThresholdUnreachable) {
  QtInstance q;
  q.n = 3;
  q.minv = RatMatrix::identity(3) * Rat(4);  // form maxes out at 1/4
  EXPECT_THROW(find_singular_combination(q), NoCertificate);
  const Graph c5 = cycle_graph(5);
  EXPECT_THROW(find_singular_combination(build_qt_instance(c5, Rat(2, 3))),
               NoCertificate);
}

TEST(Certificate, AcceptedGraphInstancesAlwaysVerify) {
  struct Case { Graph g; Rat tau; };
  const Case cases[] = {
      {complete_graph(2), Rat(1, 2)},  {complete_graph(3), Rat(2, 3)},
      {complete_graph(4), Rat(3, 4)},  {complete_graph(4), Rat(1, 2)},
      {cycle_graph(5), Rat(1, 2)},     {cycle_graph(7), Rat(1, 2)},
      {complete_bipartite(2, 3), Rat(1, 2)},
  };
  for (const auto& [g, tau] : cases) {
    auto q = build_qt_instance(g, tau);
    auto cert = find_singular_combination(q);
    auto gadget = build_nonsingularity_gadget(q);
    EXPECT_TRUE(verify_singularity_certificate(cert, gadget))
        << write_dimacs(g) << " tau=" << tau;
    // the weighted combination is singular as a matrix over Q(sqrt(c))
    SurdMatrix x(gadget.dim, gadget.dim);
    for (std::size_t i = 0; i < gadget.matrices.size(); ++i) {
      SurdMatrix xi = to_surd(gadget.matrices[i]);
      for (std::size_t r = 0; r < gadget.dim; ++r)
        for (std::size_t c = 0; c < gadget.dim; ++c)
          x(r, c) += cert.weights[i] * xi(r, c);
    }
    EXPECT_TRUE(det_field(x).is_zero());
  }
}

TEST(Certificate, VerifierRejectsTampering) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto gadget = build_nonsingularity_gadget(q);
  const auto good = find_singular_combination(q);

  auto bad = good;
  bad.weights[0] += Surd(Rat(1, 1000));  // no longer sums to 1
  EXPECT_FALSE(verify_singularity_certificate(bad, gadget));

  bad = good;
  bad.kernel.assign(bad.kernel.size(), Surd(0));  // zero kernel
  EXPECT_FALSE(verify_singularity_certificate(bad, gadget));

  bad = good;
  bad.kernel[0] += Surd(1);  // kernel no longer annihilates
  EXPECT_FALSE(verify_singularity_certificate(bad, gadget));

  bad = good;
  // swap two weights: X(w) changes, old kernel stops working
  std::swap(bad.weights[0], bad.weights[1]);
  EXPECT_FALSE(verify_singularity_certificate(bad, gadget));

  // shape mismatches throw rather than return false
  auto short_cert = good;
  short_cert.weights.pop_back();
  EXPECT_THROW(verify_singularity_certificate(short_cert, gadget),
               DimensionMismatch);
}

TEST(Certificate, VerifierRejectsForeignRadicand) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto gadget = build_nonsingularity_gadget(q);
  auto cert = find_singular_combination(q);
  cert.radicand = 5;  // declared extension no longer matches the entries
  EXPECT_FALSE(verify_singularity_certificate(cert, gadget));
}

TEST(Certificate, NegativeWeightRejected) {
  // hand-built: weights (-1, 2) sum to 1 but leave the simplex
  PolytopeInstance inst;
  inst.dim = 1;
  inst.matrices = {RatMatrix::from_rows({{Rat(1)}}),
                   RatMatrix::from_rows({{Rat(1)}})};
  SingularityCertificate cert;
  cert.weights = {Surd(Rat(-1)), Surd(Rat(2))};
  cert.kernel = {Surd(1)};
  EXPECT_FALSE(verify_singularity_certificate(cert, inst));
}

}  // namespace
}  // namespace polystab
