#include <gtest/gtest.h>

#include <random>

#include "gsw/error.hpp"
#include "gsw/extension.hpp"
#include "test_support.hpp"

namespace gsw {
namespace {

// Minimal polynomial of x over F_p from its Frobenius orbit.
Polynomial orbit_minpoly(const Fq& F, FqElement x) {
  std::vector<FqElement> orbit{x};
  for (FqElement y = F.frobenius(x); y != x; y = F.frobenius(y)) orbit.push_back(y);
  return from_roots(F, orbit);
}

Polynomial expand_roots(const Fq& F, const std::vector<RootMultiplicity>& roots) {
  Polynomial r = Polynomial::constant(F, F.one());
  for (const auto& rm : roots) r = r * from_roots(F, std::vector<FqElement>(rm.multiplicity, rm.root));
  return r;
}

TEST(Extension, EmbeddingFixesPrimeField) {
  const Fq F = Fq::extension(3, 2), G = Fq::extension(3, 6);
  const Embedding e(F, G);
  for (std::uint32_t a = 0; a < 3; ++a) EXPECT_EQ(e(F.from_int(a)), G.from_int(a));
}

TEST(Extension, EmbeddingIsHomomorphism) {
  std::mt19937_64 rng(3);
  for (auto [p, a, b] : {std::tuple{2u, 2u, 6u}, {3u, 2u, 4u}, {5u, 1u, 3u}, {2u, 3u, 12u}}) {
    const Fq F = Fq::extension(p, a), G = Fq::extension(p, b);
    const Embedding e(F, G);
    for (int t = 0; t < 100; ++t) {
      const FqElement x = testing::random_element(F, rng), y = testing::random_element(F, rng);
      EXPECT_EQ(e(F.mul(x, y)), G.mul(e(x), e(y)));
      EXPECT_EQ(e(F.add(x, y)), G.add(e(x), e(y)));
      if (x != y) EXPECT_NE(e(x), e(y));
    }
  }
}

TEST(Extension, EmbeddedElementSatisfiesItsMinimalPolynomial) {
  const Fq F = Fq::extension(3, 2), G = Fq::extension(3, 4);
  const Embedding e(F, G);
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const Polynomial m = orbit_minpoly(F, F.element(c));
    // Coefficients lie in F_p, so lift them by code.
    std::vector<FqElement> lifted;
    for (auto k : m.coeffs()) lifted.push_back(G.from_int(static_cast<std::int64_t>(F.digits(k)[0])));
    EXPECT_EQ(Polynomial(G, lifted).eval(e(F.element(c))), G.zero());
  }
}

TEST(Extension, EmbeddingRejectsNonDivisibleDegrees) {
  EXPECT_THROW(Embedding(Fq::extension(3, 2), Fq::extension(3, 3)), InvalidInput);
  EXPECT_THROW(Embedding(Fq::extension(3, 2), Fq::extension(5, 2)), InvalidInput);
}

TEST(Extension, Compositum) {
  EXPECT_EQ(compositum(Fq::extension(2, 2), Fq::extension(2, 3)).degree(), 6u);
  EXPECT_EQ(compositum(Fq::extension(2, 2), Fq::extension(2, 4)), Fq::extension(2, 4));
}

TEST(Extension, ArtinSchreierTrivial) {
  const Fq F = Fq::prime(5);
  const auto r = artin_schreier_root(F, F.zero());
  EXPECT_EQ(r.field, F);
  EXPECT_EQ(r.root, F.zero());
}

TEST(Extension, ArtinSchreierOverF2) {
  const Fq F = Fq::prime(2);
  const auto r = artin_schreier_root(F, F.one());
  EXPECT_EQ(r.field.order(), 4u);
  const Fq& G = r.field;
  // gamma^2 + gamma + 1 = 0.
  EXPECT_EQ(G.add(G.add(G.mul(r.root, r.root), r.root), G.one()), G.zero());
}

TEST(Extension, ArtinSchreierOverF3) {
  const Fq F = Fq::prime(3);
  // T^3 - T - 1 has no root in F_3.
  for (std::int64_t t = 0; t < 3; ++t) EXPECT_NE((t * t * t - t - 1) % 3, 0);
  const auto r = artin_schreier_root(F, F.one());
  const Fq& G = r.field;
  EXPECT_EQ(G.order(), 27u);
  EXPECT_EQ(G.sub(G.pow(r.root, 3), r.root), G.one());
}

TEST(Extension, ArtinSchreierEveryConstant) {
  for (auto [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Fq F = Fq::extension(p, n);
    for (std::uint64_t c = 0; c < F.order(); ++c) {
      const auto r = artin_schreier_root(F, F.element(c));
      const Fq& G = r.field;
      const FqElement cc = embed(F.element(c), F, G);
      EXPECT_EQ(G.sub(G.pow(r.root, p), r.root), cc);
      EXPECT_TRUE(G.degree() == n || G.degree() == n * p);
    }
  }
}

TEST(Extension, RootsSimpleCases) {
  const Fq F3 = Fq::prime(3);
  auto s = roots_in_splitting_field(Polynomial::from_ints(F3, {-1, 0, 1}));
  EXPECT_EQ(s.field, F3);
  ASSERT_EQ(s.roots.size(), 2u);
  EXPECT_EQ(s.roots[0].root, F3.from_int(1));
  EXPECT_EQ(s.roots[1].root, F3.from_int(2));

  const Fq F5 = Fq::prime(5);
  s = roots_in_splitting_field(Polynomial::from_ints(F5, {1, -2, 1}));
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.roots[0].root, F5.one());
  EXPECT_EQ(s.roots[0].multiplicity, 2u);

  EXPECT_THROW(roots_in_splitting_field(Polynomial(F5)), InvalidInput);
}

TEST(Extension, CubicOverF3SplitsInF27) {
  const Fq F3 = Fq::prime(3);
  const auto s = roots_in_splitting_field(Polynomial::from_ints(F3, {-1, -1, 0, 1}));
  EXPECT_EQ(s.field.order(), 27u);
  ASSERT_EQ(s.roots.size(), 3u);
  // Brute force over all of F_27.
  const Fq& G = s.field;
  int count = 0;
  for (std::uint64_t c = 0; c < 27; ++c) {
    const FqElement x = G.element(c);
    if (G.sub(G.sub(G.pow(x, 3), x), G.one()) == G.zero()) ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(Extension, SplittingAgreesWithExhaustive) {
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair{2u, 8u}, {3u, 5u}, {5u, 3u}, {7u, 2u}}) {
    const Fq F = Fq::extension(p, n);
    for (int t = 0; t < 30; ++t) {
      std::vector<FqElement> coeffs;
      const int deg = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < deg; ++k) coeffs.push_back(testing::random_element(F, rng));
      coeffs.push_back(F.one());
      const Polynomial f(F, coeffs);
      EXPECT_EQ(distinct_roots_by_splitting(f), distinct_roots_exhaustive(f));
    }
  }
}

TEST(Extension, SplittingFieldReexpands) {
  std::mt19937_64 rng(23);
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const Fq F = Fq::extension(p, n);
    for (int t = 0; t < 15; ++t) {
      std::vector<FqElement> coeffs;
      const int deg = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < deg; ++k) coeffs.push_back(testing::random_element(F, rng));
      coeffs.push_back(F.one());
      const Polynomial f(F, coeffs);
      const auto s = roots_in_splitting_field(f);
      const Embedding e(F, s.field);
      EXPECT_EQ(expand_roots(s.field, s.roots), e(f)) << f.to_string();
    }
  }
}

TEST(Extension, SplittingDegree) {
  const Fq F2 = Fq::prime(2);
  // (T^2+T+1)(T^3+T+1) splits over F_{2^6}.
  const Polynomial f = Polynomial::from_ints(F2, {1, 1, 1}) * Polynomial::from_ints(F2, {1, 1, 0, 1});
  EXPECT_EQ(splitting_degree(f), 6u);
  EXPECT_EQ(splitting_degree(Polynomial::from_ints(F2, {0, 1, 1})), 1u);
}

}  // namespace
}  // namespace gsw
