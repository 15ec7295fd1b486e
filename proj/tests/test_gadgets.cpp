#include "polystab/gadgets.hpp"

#include <gtest/gtest.h>

#include "graphs.hpp"
#include "polystab/caratheodory.hpp"
#include "polystab/clique.hpp"
#include "polystab/ladder.hpp"
#include "polystab/simplex_qp.hpp"
#include "test_util.hpp"

namespace polystab {
namespace {

using namespace testutil;

TEST(Ladder, ElementsAndGaps) {
  auto l = ThresholdLadder::for_size(5);
  ASSERT_EQ(l.elements.size(), 5u);
  EXPECT_EQ(l.elements[0], Rat(0));
  EXPECT_EQ(l.elements[1], Rat(1, 2));
  EXPECT_EQ(l.elements[4], Rat(4, 5));
  // gap between elements j and j+1 is exactly 1/(j(j+1))
  for (std::size_t j = 1; j < 5; ++j)
    EXPECT_EQ(l.elements[j] - l.elements[j - 1],
              Rat(1, static_cast<long>(j * (j + 1))));
  EXPECT_TRUE(l.contains(Rat(2, 3)));
  EXPECT_FALSE(l.contains(Rat(3, 5)));
  EXPECT_THROW(ThresholdLadder::for_size(0), std::invalid_argument);
}

TEST(Perturbation, SmallestWorkingIndex) {
  // K2 adjacency [[0,1],[1,0]]: already at i=1 the shifted matrix is
  // invertible, with det = 1/25 - 1.
  auto [istar, m] = select_perturbation(adjacency_matrix(complete_graph(2)));
  EXPECT_EQ(istar, 1u);
  EXPECT_EQ(m(0, 0), Rat(1, 5));
  EXPECT_EQ(mat_determinant(m), Rat(1, 25) - Rat(1));
}

TEST(Perturbation, SkipsSingularShift) {
  // diag(-1/5, 1): at n=1... craft n=2: matrix with eigenvalue exactly
  // -1/(n^2+1) = -1/5 so i=1 must be skipped.
  auto a = RatMatrix::from_rows({{Rat(-1, 5), Rat(0)}, {Rat(0), Rat(1)}});
  auto [istar, m] = select_perturbation(a);
  EXPECT_EQ(istar, 2u);
  EXPECT_FALSE(mat_determinant(m).is_zero());
}

TEST(QtInstance, FrozenK2Value) {
  // K2 at tau = 1/2: M = 2*(A + I/5), M^-1 = [[-5/48, 25/48], ...]
  auto q = build_qt_instance(complete_graph(2), Rat(1, 2));
  EXPECT_EQ(q.n, 2u);
  EXPECT_EQ(q.minv, RatMatrix::from_rows({{Rat(-5, 48), Rat(25, 48)},
                                          {Rat(25, 48), Rat(-5, 48)}}));
  ASSERT_TRUE(q.provenance.has_value());
  EXPECT_EQ(q.provenance->istar, 1u);
  EXPECT_EQ(q.provenance->tau, Rat(1, 2));
  // round trip: inverse of minv is the scaled perturbed adjacency
  EXPECT_EQ(mat_inverse(q.minv),
            RatMatrix::from_rows({{Rat(2, 5), Rat(2)}, {Rat(2), Rat(2, 5)}}));
}

TEST(QtInstance, RejectsBadInputs) {
  EXPECT_THROW(build_qt_instance(Graph(0), Rat(1, 2)), std::invalid_argument);
  EXPECT_THROW(build_qt_instance(complete_graph(2), Rat(0)),
               std::invalid_argument);
  EXPECT_THROW(build_qt_instance(complete_graph(2), Rat(-1, 2)),
               std::invalid_argument);
}

TEST(NonsingularityGadget, BlockLayout) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto inst = build_nonsingularity_gadget(q);
  EXPECT_EQ(inst.dim, 4u);
  EXPECT_EQ(inst.kind, PolytopeKind::NonsingularityGadget);
  ASSERT_EQ(inst.matrices.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& x = inst.matrices[i];
    EXPECT_EQ(x.block(0, 0, 3, 3), q.minv);
    EXPECT_EQ(x(3, 3), Rat(1));
    for (std::size_t r = 0; r < 3; ++r) {
      EXPECT_EQ(x(r, 3), r == i ? Rat(1) : Rat(0));
      EXPECT_EQ(x(3, r), r == i ? Rat(1) : Rat(0));
    }
  }
  EXPECT_EQ(inst.provenance, q.provenance);
}

TEST(StabilityGadget, BlockLayoutAndDissipativity) {
  auto q = build_qt_instance(complete_graph(3), Rat(1, 2));
  auto xinst = build_nonsingularity_gadget(q);
  auto binst = build_stability_gadget(xinst);
  EXPECT_EQ(binst.dim, 8u);
  EXPECT_EQ(binst.kind, PolytopeKind::StabilityGadget);
  ASSERT_EQ(binst.matrices.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& b = binst.matrices[i];
    const auto& a = xinst.matrices[i];
    EXPECT_EQ(b.block(0, 0, 4, 4), RatMatrix(4, 4));
    EXPECT_EQ(b.block(0, 4, 4, 4), a.transpose());
    EXPECT_EQ(b.block(4, 0, 4, 4), Rat(-1) * a);
    EXPECT_EQ(b.block(4, 4, 4, 4), Rat(-1) * RatMatrix::identity(4));
    // B + B^T = diag(0, -2I) for every vertex
    auto s = b + b.transpose();
    RatMatrix expect(8, 8);
    for (std::size_t d = 4; d < 8; ++d) expect(d, d) = Rat(-2);
    EXPECT_EQ(s, expect);
  }
}

TEST(DeterminantalIdentity, HoldsOnSamples) {
  EXPECT_TRUE(check_determinantal_identity(complete_graph(3), Rat(1, 2), 20,
                                           12345));
  EXPECT_TRUE(check_determinantal_identity(cycle_graph(5), Rat(2, 3), 20, 7));
  EXPECT_TRUE(check_determinantal_identity(petersen_graph(), Rat(1, 2), 5, 3));
}

TEST(Sandwich, PerturbedOptimumWithinWindow) {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), path_graph(6),
                         complete_bipartite(2, 3)}) {
    const std::size_t n = g.n();
    const std::size_t omega = max_clique_exact(g).size;
    auto [istar, m] = select_perturbation(adjacency_matrix(g));
    const Rat vstar = simplex_quadratic_extrema_exact(m).max.value;
    const Rat base = Rat(1) - Rat(1, static_cast<long>(omega));
    const Rat delta = Rat(1, static_cast<long>(n * n + istar));
    EXPECT_GE(vstar, base) << write_dimacs(g);
    EXPECT_LE(vstar, base + delta) << write_dimacs(g);
  }
}

TEST(Recovery, MatchesExactCliqueNumber) {
  const auto oracle = [](const QtInstance& q) { return qt_decide(q); };
  for (const Graph& g :
       {complete_graph(2), complete_graph(5), cycle_graph(5), cycle_graph(7),
        star_graph(5), Graph(4), path_graph(5), complete_bipartite(3, 3)}) {
    EXPECT_EQ(recover_clique_number(g, oracle), max_clique_exact(g).size)
        << write_dimacs(g);
  }
}

TEST(Recovery, AcceptanceMonotoneInTau) {
  // Once a threshold is accepted, every smaller positive one is too.
  for (const Graph& g : {complete_graph(4), cycle_graph(5), star_graph(4)}) {
    const auto ladder = ThresholdLadder::for_size(g.n());
    bool seen_accept = false;
    for (std::size_t j = g.n(); j >= 2; --j) {
      const bool acc = qt_decide(build_qt_instance(g, ladder.elements[j - 1]));
      if (seen_accept) EXPECT_TRUE(acc) << write_dimacs(g) << " j=" << j;
      seen_accept |= acc;
    }
  }
}

TEST(Caratheodory, ReducesFatCombination) {
  Rng rng(2024);
  // dim 2 polytope: support must come down to <= 5
  const std::size_t n = 2, k = 16;
  PolytopeInstance inst;
  inst.dim = n;
  for (std::size_t i = 0; i < k; ++i)
    inst.matrices.push_back(random_rat_matrix(rng, n, 3, 2));
  auto w = SimplexPoint::checked(rng.simplex_rat(k));
  const RatMatrix before = inst.at(w.w);
  auto reduced = caratheodory_reduce(inst, w);
  EXPECT_LE(reduced.support().size(), n * n + 1);
  EXPECT_TRUE(reduced.valid());
  EXPECT_EQ(inst.at(reduced.w), before);
}

TEST(Caratheodory, SmallSupportUntouched) {
  PolytopeInstance inst;
  inst.dim = 2;
  for (int i = 0; i < 3; ++i)
    inst.matrices.push_back(RatMatrix::identity(2) * Rat(i + 1));
  auto w = SimplexPoint::checked({Rat(1, 2), Rat(1, 4), Rat(1, 4)});
  EXPECT_EQ(caratheodory_reduce(inst, w).w, w.w);
}

TEST(Caratheodory, RejectsBadWeights) {
  PolytopeInstance inst;
  inst.dim = 1;
  inst.matrices.push_back(RatMatrix::identity(1));
  inst.matrices.push_back(RatMatrix(1, 1));
  SimplexPoint bad{{Rat(1, 2), Rat(1, 4)}};
  EXPECT_THROW(caratheodory_reduce(inst, bad), FormatError);
  SimplexPoint wrong_len{{Rat(1)}};
  EXPECT_THROW(caratheodory_reduce(inst, wrong_len), DimensionMismatch);
}

}  // namespace
}  // namespace polystab
