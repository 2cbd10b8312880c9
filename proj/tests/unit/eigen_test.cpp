#include <gtest/gtest.h>

#include <random>

#include "gsw/algebra.hpp"
#include "gsw/eigen.hpp"
#include "test_support.hpp"

namespace gsw {
namespace {

Matrix diag(const Fq& F, const std::vector<std::int64_t>& d) {
  Matrix m(F, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = F.from_int(d[i]);
  return m;
}

Matrix random_matrix(const Fq& F, std::size_t n, std::mt19937_64& rng) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = testing::random_element(F, rng);
  }
  return m;
}

TEST(Charpoly, AgreesWithDeterminantAtEveryPoint) {
  std::mt19937_64 rng(11);
  for (const Fq& F : {Fq::prime(5), Fq::extension(3, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix M = random_matrix(F, n, rng);
      const Polynomial chi = charpoly(M);
      ASSERT_EQ(chi.degree(), static_cast<int>(n));
      for (std::uint64_t c = 0; c < F.order(); ++c) {
        const FqElement x = F.element(c);
        EXPECT_EQ(chi.eval(x), (Matrix::scalar(F, n, x) - M).determinant());
      }
    }
  }
}

TEST(Charpoly, CayleyHamilton) {
  std::mt19937_64 rng(12);
  const Fq F = Fq::prime(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix M = random_matrix(F, 6, rng);
    EXPECT_TRUE(eval_poly(charpoly(M), M).is_zero());
    const Polynomial mu = minpoly(M);
    EXPECT_TRUE(eval_poly(mu, M).is_zero());
    EXPECT_TRUE((charpoly(M) % mu).is_zero());
  }
}

TEST(Minpoly, KnownCases) {
  const Fq F = Fq::prime(3);
  EXPECT_EQ(minpoly(diag(F, {0, 1, 2})), Polynomial::from_ints(F, {0, 2, 0, 1}));  // T^3 - T
  EXPECT_EQ(minpoly(diag(F, {1, 1})), Polynomial::from_ints(F, {2, 1}));
  Matrix J(F, 3, 3);
  J(0, 1) = J(1, 2) = F.one();
  EXPECT_EQ(minpoly(J), Polynomial::monomial(F, F.one(), 3));
  EXPECT_FALSE(is_semisimple(J));
  EXPECT_TRUE(is_semisimple(diag(F, {0, 1, 2})));
}

TEST(Semisimple, IrreducibleBlockSplitsOverExtension) {
  const Fq F = Fq::prime(3);
  // companion matrix of T^2 + 1, irreducible over F_3
  const Matrix C = Matrix::from_rows(F, 2, {{F.zero(), F.from_int(-1)}, {F.one(), F.zero()}});
  EXPECT_TRUE(is_semisimple(C));
  const EigenDecomposition dec = generalized_eigenspaces(C);
  EXPECT_EQ(dec.field.degree(), 2u);
  ASSERT_EQ(dec.spaces.size(), 2u);
  EXPECT_FALSE(dec.log.empty());
}

TEST(Eigenspaces, DiagonalOverF3) {
  const Fq F = Fq::prime(3);
  const EigenDecomposition dec = generalized_eigenspaces(diag(F, {0, 1, 2}));
  ASSERT_EQ(dec.spaces.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(dec.spaces[i].eigenvalue, F.element(i));
    EXPECT_EQ(dec.spaces[i].space, Subspace::span(F, 3, {unit_vector(F, 3, i)}));
  }
  EXPECT_TRUE(dec.log.empty());
}

TEST(Eigenspaces, NilpotentHasOneSpace) {
  const Fq F = Fq::prime(5);
  Matrix J(F, 4, 4);
  J(0, 1) = J(1, 2) = J(2, 3) = F.one();
  const EigenDecomposition dec = generalized_eigenspaces(J);
  ASSERT_EQ(dec.spaces.size(), 1u);
  EXPECT_EQ(dec.spaces[0].eigenvalue, F.zero());
  EXPECT_EQ(dec.spaces[0].space, Subspace::whole(F, 4));
}

TEST(Eigenspaces, AdE0OnWitt5) {
  const GradedAlgebra W = witt(5);
  const Fq& F = W.field();
  const EigenDecomposition dec = generalized_eigenspaces(W.ad(1));
  ASSERT_EQ(dec.spaces.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    const Eigenspace* s = dec.find(F.from_int(static_cast<std::int64_t>(i) - 1));
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->space, Subspace::span(F, 5, {W.basis_vector(i)}));
  }
}

TEST(Eigenspaces, RandomMatricesDecomposeProperly) {
  std::mt19937_64 rng(13);
  const Fq F = Fq::prime(3);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix M = random_matrix(F, n, rng);
    const EigenDecomposition dec = generalized_eigenspaces(M);
    const Fq& K = dec.field;
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (const auto& s : dec.spaces) {
      total += s.space.dim();
      parts.push_back(s.space);
      EXPECT_EQ(s.space.dim(), s.multiplicity);
      EXPECT_TRUE(s.space.is_invariant(dec.map));
      const Matrix shifted = (dec.map - Matrix::scalar(K, n, s.eigenvalue)).pow(n);
      for (const auto& v : s.space.basis()) EXPECT_TRUE(is_zero(shifted.apply(v)));
    }
    EXPECT_EQ(total, n);
    EXPECT_TRUE(is_direct_sum_decomposition(parts));
  }
}

}  // namespace
}  // namespace gsw
