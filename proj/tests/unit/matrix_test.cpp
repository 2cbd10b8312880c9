#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gsw/matrix.hpp"
#include "test_support.hpp"

namespace gsw {
namespace {

Matrix random_matrix(const Fq& F, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (zero_bias && static_cast<int>(rng() % 10) < zero_bias) continue;
      m(i, j) = testing::random_element(F, rng);
    }
  }
  return m;
}

// Leibniz expansion; only for tiny n.
FqElement leibniz_det(const Matrix& m) {
  const Fq& F = m.field();
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  FqElement det = F.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    FqElement term = F.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = F.mul(term, m(i, perm[i]));
    det = inversions % 2 ? F.sub(det, term) : F.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// All vectors of F^n for tiny F and n.
std::vector<Vector> all_vectors(const Fq& F, std::size_t n) {
  std::vector<Vector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.order();
  for (std::uint64_t c = 0; c < total; ++c) {
    Vector v(n);
    std::uint64_t x = c;
    for (std::size_t i = 0; i < n; ++i, x /= F.order()) v[i] = F.element(x % F.order());
    out.push_back(v);
  }
  return out;
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(1);
  for (unsigned p : {2u, 3u, 7u}) {
    const Fq F = Fq::extension(p, 2);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix m = random_matrix(F, n, n, rng, 3);
      EXPECT_EQ(m.determinant(), leibniz_det(m));
    }
  }
}

TEST(Matrix, InverseAndSolve) {
  std::mt19937_64 rng(2);
  const Fq F = Fq::extension(5, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const Matrix m = random_matrix(F, n, n, rng, 2);
    const auto inv = m.inverse();
    EXPECT_EQ(inv.has_value(), m.determinant() != F.zero());
    if (inv) {
      EXPECT_TRUE((m * *inv).is_identity());
      EXPECT_TRUE((*inv * m).is_identity());
    }
    Vector b(n);
    for (auto& x : b) x = testing::random_element(F, rng);
    if (auto x = m.solve(b)) EXPECT_EQ(m.apply(*x), b);
  }
}

TEST(Matrix, RankNullity) {
  std::mt19937_64 rng(4);
  const Fq F = Fq::prime(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Matrix m = random_matrix(F, r, c, rng, 5);
    const auto ns = m.nullspace();
    EXPECT_EQ(m.rank() + ns.size(), c);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(Matrix, PowerAndAlgebra) {
  std::mt19937_64 rng(6);
  const Fq F = Fq::prime(7);
  const Matrix a = random_matrix(F, 4, 4, rng), b = random_matrix(F, 4, 4, rng), c = random_matrix(F, 4, 4, rng);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a.pow(5), a * a * a * a * a);
  EXPECT_TRUE(a.pow(0).is_identity());
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(Matrix::scalar(F, 4, F.from_int(3)).as_scalar(), F.from_int(3));
  EXPECT_FALSE(a.as_scalar().has_value());
}

TEST(Subspace, CanonicalForm) {
  const Fq F = Fq::prime(5);
  const Subspace s1 = Subspace::span(F, 3, {{F.from_int(1), F.from_int(2), F.zero()}, {F.zero(), F.one(), F.one()}});
  const Subspace s2 = Subspace::span(
      F, 3, {{F.from_int(1), F.from_int(3), F.from_int(1)}, {F.from_int(2), F.from_int(4), F.zero()}, {F.zero(), F.from_int(2), F.from_int(2)}});
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.dim(), 2u);
}

TEST(Subspace, IntersectionAndSumAgainstEnumeration) {
  std::mt19937_64 rng(8);
  const Fq F = Fq::prime(3);
  const auto all = all_vectors(F, 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vector> g1, g2;
    for (std::size_t k = rng() % 4; k > 0; --k) g1.push_back(random_matrix(F, 1, 4, rng).row(0));
    for (std::size_t k = rng() % 4; k > 0; --k) g2.push_back(random_matrix(F, 1, 4, rng).row(0));
    const Subspace a = Subspace::span(F, 4, g1), b = Subspace::span(F, 4, g2);
    const Subspace meet = a.intersect(b), join = a + b;
    std::size_t meet_count = 0;
    for (const auto& v : all) {
      const bool in_both = a.contains(v) && b.contains(v);
      EXPECT_EQ(meet.contains(v), in_both);
      meet_count += in_both;
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < meet.dim(); ++i) expect *= 3;
    EXPECT_EQ(meet_count, expect);
    EXPECT_EQ(join.dim() + meet.dim(), a.dim() + b.dim());
  }
}

TEST(Subspace, CoordinatesAndRestriction) {
  std::mt19937_64 rng(9);
  const Fq F = Fq::extension(3, 2);
  const Matrix m = random_matrix(F, 5, 5, rng);
  // Krylov space of a vector is invariant.
  Vector v = unit_vector(F, 5, 0);
  std::vector<Vector> krylov{v};
  for (int k = 0; k < 5; ++k) krylov.push_back(m.apply(krylov.back()));
  const Subspace s = Subspace::span(F, 5, krylov);
  ASSERT_TRUE(s.is_invariant(m));
  const Matrix r = s.restrict(m);
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const Vector img = m.apply(s.basis()[j]);
    const auto coords = s.coordinates(img);
    ASSERT_TRUE(coords.has_value());
    EXPECT_EQ(*coords, r.column(j));
  }
  EXPECT_FALSE(Subspace::span(F, 5, {unit_vector(F, 5, 1)}).coordinates(unit_vector(F, 5, 2)).has_value());
}

TEST(Subspace, DirectSumDecomposition) {
  const Fq F = Fq::prime(2);
  const Subspace e0 = Subspace::span(F, 3, {unit_vector(F, 3, 0)});
  const Subspace e1 = Subspace::span(F, 3, {unit_vector(F, 3, 1)});
  const Subspace e2 = Subspace::span(F, 3, {unit_vector(F, 3, 2)});
  const Subspace diag = Subspace::span(F, 3, {Vector{F.one(), F.one(), F.zero()}});
  const Subspace zero(F, 3);
  EXPECT_TRUE(is_direct_sum_decomposition({e0, e1, e2, zero}));
  EXPECT_TRUE(is_direct_sum_decomposition({diag, e1, e2}));
  EXPECT_FALSE(is_direct_sum_decomposition({diag, e0, e1}));
  EXPECT_FALSE(is_direct_sum_decomposition({e0, e1}));
}

TEST(Subspace, BaseChangePreservesDimension) {
  const Fq F = Fq::prime(3), G = Fq::extension(3, 2);
  const Subspace s = Subspace::span(F, 3, {Vector{F.one(), F.from_int(2), F.zero()}});
  const Subspace t = s.base_change(Embedding(F, G));
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_TRUE(t.contains(Vector{G.from_int(2), G.one(), G.zero()}));
}

}  // namespace
}  // namespace gsw
