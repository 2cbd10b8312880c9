#include <gtest/gtest.h>

#include "gsw/algebra.hpp"
#include "gsw/error.hpp"
#include "gsw/toral.hpp"

namespace gsw {
namespace {

Vector e(const GradedAlgebra& W, long a) { return W.basis_vector(static_cast<std::size_t>(a + 1)); }

TEST(Restricted, BuildersAreRestricted) {
  for (unsigned p : {3u, 5u, 7u}) EXPECT_TRUE(check_restricted(witt(p)).ok()) << p;
  EXPECT_TRUE(check_restricted(direct_sum(witt(5), torus_line(5, 5))).ok());
  EXPECT_TRUE(check_restricted(direct_sum(witt(5), witt(5))).ok());
  GradedAlgebra W = witt(5);
  W.set_pmap(0, e(W, 0));
  const auto r = check_restricted(W);
  EXPECT_FALSE(r.restricted);
  EXPECT_EQ(r.failing_index, 0u);
}

TEST(Pmap, BasisMultiplesAndIterates) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  EXPECT_TRUE(is_zero(pmap(W, e(W, -1))));
  EXPECT_EQ(pmap(W, scale(F, F.from_int(2), e(W, 0))), scale(F, F.from_int(2), e(W, 0)));
  EXPECT_TRUE(is_zero(q_of_x(W, e(W, -1), 3)));
  EXPECT_TRUE(is_zero(q_of_x(W, e(W, 0), 1)));
  EXPECT_EQ(q_of_x(W, e(W, 0), 2), e(W, 0));
  EXPECT_EQ(pmap_iterate(W, e(W, 0), 4), e(W, 0));
}

TEST(Pmap, SumsThroughTheAdjointAction) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  const Vector x = add(F, e(W, 0), e(W, -1));
  const Vector y = pmap(W, x);
  EXPECT_EQ(W.left_multiplication(y), W.left_multiplication(x).pow(5));
  const GradedAlgebra S = direct_sum(witt(5), torus_line(5, 5));
  EXPECT_THROW(pmap(S, add(F, S.basis_vector(1), S.basis_vector(0))), InvalidInput);
}

TEST(Roots, WittRankOne) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  const RootDecomposition dec = root_decomposition(W, {e(W, 0)});
  ASSERT_EQ(dec.roots.size(), 5u);
  for (long j = -1; j <= 3; ++j) {
    const Root* r = dec.root_of(e(W, j));
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->values, Vector{F.from_int(j)});
    EXPECT_EQ(r->space.dim(), 1u);
  }
}

TEST(Roots, TrivialTorus) {
  const GradedAlgebra W = witt(5);
  const RootDecomposition dec = root_decomposition(W, {});
  ASSERT_EQ(dec.roots.size(), 1u);
  EXPECT_EQ(dec.roots[0].space, Subspace::whole(W.field(), 5));
}

TEST(Roots, WithAbelianLine) {
  const GradedAlgebra S = direct_sum(witt(5), torus_line(5, 5));
  const Fq& F = S.field();
  const RootDecomposition dec = root_decomposition(S, {S.basis_vector(1), S.basis_vector(5)});
  ASSERT_EQ(dec.roots.size(), 5u);
  for (const auto& r : dec.roots) EXPECT_EQ(r.values[1], F.zero());
  EXPECT_EQ(dec.root_of(S.basis_vector(5))->space.dim(), 2u);
}

TEST(Roots, NonCommutingRejected) {
  const GradedAlgebra W = witt(5);
  EXPECT_THROW(root_decomposition(W, {e(W, 0), e(W, 1)}), HypothesisError);
  EXPECT_FALSE(is_torus(W, {e(W, -1)}));
}

TEST(Tx, WittRankOne) {
  for (unsigned p : {5u, 7u}) {
    const GradedAlgebra W = witt(p);
    const Fq& F = W.field();
    const RootDecomposition dec = root_decomposition(W, {e(W, 0)});
    const TxConstruction tx = t_x_construction(dec, e(W, -1), 1);
    EXPECT_EQ(tx.beta, Vector{F.from_int(-1)});
    ASSERT_EQ(tx.Tx.size(), 1u);
    EXPECT_EQ(tx.Tx[0], add(F, e(W, 0), e(W, -1)));
    EXPECT_TRUE(tx.is_torus);
  }
}

TEST(Tx, Preconditions) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  const RootDecomposition dec = root_decomposition(W, {e(W, 0)});
  EXPECT_THROW(t_x_construction(dec, zero_vector(F, 5), 1), HypothesisError);
  EXPECT_THROW(t_x_construction(dec, e(W, 0), 1), HypothesisError);
  EXPECT_THROW(t_x_construction(dec, add(F, e(W, 1), e(W, 2)), 1), HypothesisError);
}

TEST(Refine, RankOne) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  const RootDecomposition dec = root_decomposition(W, {e(W, 0)});
  const Refinement ref = refine_grading(dec, {F.from_int(-1)}, e(W, -1));
  EXPECT_EQ(ref.t1, scale(F, F.from_int(4), e(W, 0)));
  EXPECT_TRUE(ref.T0.empty());
  ASSERT_EQ(ref.by_gamma0.size(), 1u);
  EXPECT_TRUE(is_grading(W, ref.coarse));
}

TEST(Compare, WittRankOne) {
  for (unsigned p : {5u, 7u}) {
    const GradedAlgebra W = witt(p);
    const ToralComparison c = compare_switch_to_toral(W, {e(W, 0)}, e(W, -1), 1);
    EXPECT_TRUE(c.ok()) << p << " " << c.failure.value_or("");
    EXPECT_EQ(c.switched.LD, truncated_exp(W.ad(0)));
    EXPECT_EQ(c.images.size(), std::size_t{p});
  }
}

TEST(Compare, LargerR) {
  const GradedAlgebra W = witt(5);
  const ToralComparison c = compare_switch_to_toral(W, {e(W, 0)}, e(W, -1), 2);
  EXPECT_TRUE(c.ok()) << c.failure.value_or("");
  EXPECT_EQ(c.switched.r, 2u);
}

TEST(Compare, WittWithTorusLine) {
  const GradedAlgebra S = direct_sum(witt(5), torus_line(5, 5));
  const ToralComparison c = compare_switch_to_toral(S, {S.basis_vector(1), S.basis_vector(5)}, S.basis_vector(0), 1);
  EXPECT_TRUE(c.ok()) << c.failure.value_or("");
  ASSERT_EQ(c.refinement.T0.size(), 1u);
  EXPECT_EQ(c.refinement.by_gamma0.size(), 1u);  // every root vanishes on the line
}

TEST(Compare, TwoWittCopies) {
  const GradedAlgebra S = direct_sum(witt(5), witt(5));
  const ToralComparison c = compare_switch_to_toral(S, {S.basis_vector(1), S.basis_vector(6)}, S.basis_vector(0), 1);
  EXPECT_TRUE(c.ok()) << c.failure.value_or("");
  ASSERT_EQ(c.refinement.T0.size(), 1u);
  EXPECT_EQ(c.refinement.by_gamma0.size(), 5u);
  EXPECT_TRUE(c.refinement.t0_kills_x);
  EXPECT_TRUE(c.gamma0_invariant);
}

TEST(Compare, RejectsZeroRootVector) {
  const GradedAlgebra W = witt(5);
  EXPECT_THROW(compare_switch_to_toral(W, {e(W, 0)}, e(W, 0), 1), HypothesisError);
}

}  // namespace
}  // namespace gsw
