#include "polystab/stability_check.hpp"

#include <gtest/gtest.h>

#include "graphs.hpp"
#include "polystab/gadgets.hpp"
#include "test_util.hpp"

namespace polystab {
namespace {

using namespace testutil;

PolytopeInstance single(const RatMatrix& m) {
  PolytopeInstance inst;
  inst.dim = m.rows();
  inst.matrices = {m};
  return inst;
}

TEST(HurwitzCheck, UnstableVertexIsExact) {
  PolytopeInstance inst;
  inst.dim = 1;
  inst.matrices = {RatMatrix::from_rows({{-1}}),
                   RatMatrix::from_rows({{1}})};
  auto v = polytope_hurwitz_check(inst);
  EXPECT_EQ(v.outcome, StabilityOutcome::UnstableCombinationFound);
  EXPECT_TRUE(v.exactly_resolved);
  ASSERT_TRUE(v.unstable_weights.has_value());
  EXPECT_EQ((*v.unstable_weights)[1], Rat(1));
  EXPECT_NEAR(v.max_real_part, 1.0, 1e-12);
}

TEST(HurwitzCheck, SingleStableMatrixIsExact) {
  auto v = polytope_hurwitz_check(single(RatMatrix::from_rows({{-2, 1},
                                                               {0, -1}})));
  EXPECT_EQ(v.outcome, StabilityOutcome::AllCombinationsHurwitz);
  EXPECT_TRUE(v.exactly_resolved);
}

TEST(HurwitzCheck, GadgetPathCertifiesStability) {
  // C5 at tau = 2/3: threshold unreachable (omega = 2), so every convex
  // combination must be Hurwitz, proven through the structure.
  auto q = build_qt_instance(cycle_graph(5), Rat(2, 3));
  auto binst = build_stability_gadget(build_nonsingularity_gadget(q));
  auto v = polytope_hurwitz_check(binst);
  EXPECT_EQ(v.outcome, StabilityOutcome::AllCombinationsHurwitz);
  EXPECT_TRUE(v.exactly_resolved);
  EXPECT_EQ(v.method, CheckMethod::ExactViaGadgetStructure);
}

TEST(HurwitzCheck, GadgetPathFindsSingularCombination) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto binst = build_stability_gadget(build_nonsingularity_gadget(q));
  auto v = polytope_hurwitz_check(binst);
  EXPECT_EQ(v.outcome, StabilityOutcome::UnstableCombinationFound);
  EXPECT_TRUE(v.exactly_resolved);
  EXPECT_EQ(v.method, CheckMethod::ExactViaGadgetStructure);
  ASSERT_TRUE(v.gadget_certificate.has_value());
  EXPECT_EQ(v.max_real_part, 0.0);
  // certificate weights drive the inner polytope singular
  auto xinst = build_nonsingularity_gadget(q);
  EXPECT_TRUE(verify_singularity_certificate(*v.gadget_certificate, xinst));
}

TEST(HurwitzCheck, ProvenanceMismatchRejected) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto binst = build_stability_gadget(build_nonsingularity_gadget(q));
  binst.provenance->tau = Rat(2, 3);  // lie about the threshold
  EXPECT_THROW(polytope_hurwitz_check(binst), PreconditionNotVerified);
}

TEST(HurwitzCheck, SearchConfirmsInteriorCounterexample) {
  // Two stable vertices whose midpoint region is unstable:
  // A1 = [[-1, 10], [0, -1]], A2 = [[-1, 0], [10, -1]]; at alpha = 1/2 the
  // eigenvalues are -1 +- 5.
  PolytopeInstance inst;
  inst.dim = 2;
  inst.matrices = {RatMatrix::from_rows({{-1, 10}, {0, -1}}),
                   RatMatrix::from_rows({{-1, 0}, {10, -1}})};
  SearchBudget budget;
  budget.starts = 8;
  budget.seed = 3;
  auto v = polytope_hurwitz_check(inst, budget);
  EXPECT_EQ(v.outcome, StabilityOutcome::UnstableCombinationFound);
  EXPECT_TRUE(v.exactly_resolved);
  ASSERT_TRUE(v.unstable_weights.has_value());
  // the reported weights are an exact counterexample
  EXPECT_FALSE(is_hurwitz(inst.at(*v.unstable_weights)));
  EXPECT_GT(v.max_real_part, 0.0);
}

TEST(HurwitzCheck, CleanSearchIsNotProof) {
  // Two comfortably stable commuting vertices; search finds nothing and
  // must say so without claiming exactness.
  PolytopeInstance inst;
  inst.dim = 2;
  inst.matrices = {RatMatrix::from_rows({{-1, 0}, {0, -2}}),
                   RatMatrix::from_rows({{-3, 0}, {0, -1}})};
  SearchBudget budget;
  budget.starts = 4;
  budget.iters = 40;
  auto v = polytope_hurwitz_check(inst, budget);
  EXPECT_EQ(v.outcome, StabilityOutcome::AllCombinationsHurwitz);
  EXPECT_FALSE(v.exactly_resolved);
  EXPECT_EQ(v.method, CheckMethod::VertexPlusSearch);
}

TEST(HurwitzCheck, GadgetAndDirectFindingsAgree) {
  // When the exact gadget path reports a singular combination, the direct
  // evidence must not contradict it: the certificate weights, cast to
  // doubles, put an eigenvalue of B at the axis within float error.
  auto q = build_qt_instance(complete_graph(4), Rat(2, 3));
  auto binst = build_stability_gadget(build_nonsingularity_gadget(q));
  auto v = polytope_hurwitz_check(binst);
  ASSERT_EQ(v.outcome, StabilityOutcome::UnstableCombinationFound);
  ASSERT_TRUE(v.gadget_certificate.has_value());
  std::vector<double> w;
  for (const auto& s : v.gadget_certificate->weights)
    w.push_back(s.to_double());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(binst.dim, binst.dim);
  for (std::size_t i = 0; i < binst.matrices.size(); ++i)
    b += w[i] * to_eigen(binst.matrices[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(b);
  double closest = 1e9;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    closest = std::min(closest, std::abs(es.eigenvalues()(i).real()));
  EXPECT_LT(closest, 1e-9);
}

TEST(ExtractStructure, RejectsNearMisses) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto binst = build_stability_gadget(build_nonsingularity_gadget(q));
  // corrupt one block: no longer a companion embedding
  auto broken = binst;
  broken.matrices[0](0, 0) = Rat(1, 7);
  EXPECT_FALSE(detail::extract_stability_blocks(broken).has_value());
  // odd dimension
  PolytopeInstance odd;
  odd.dim = 3;
  odd.matrices = {RatMatrix::identity(3)};
  EXPECT_FALSE(detail::extract_stability_blocks(odd).has_value());
  // inner blocks intact
  auto inner = detail::extract_stability_blocks(binst);
  ASSERT_TRUE(inner.has_value());
  auto qt = detail::extract_qt_structure(*inner);
  ASSERT_TRUE(qt.has_value());
  EXPECT_EQ(qt->minv, q.minv);
}

}  // namespace
}  // namespace polystab
