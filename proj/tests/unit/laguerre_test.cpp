#include <gtest/gtest.h>

#include <random>

#include "gsw/error.hpp"
#include "gsw/laguerre.hpp"
#include "test_support.hpp"

namespace gsw {
namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13};

std::vector<std::uint32_t> codes(const Polynomial& f) {
  std::vector<std::uint32_t> out;
  for (auto c : f.coeffs()) out.push_back(static_cast<std::uint32_t>(c.code));
  return out;
}

// Value of L_{p-1}^{(a)}(x) straight from the defining sum.
FqElement laguerre_value_oracle(const Fq& F, FqElement a, FqElement x) {
  const unsigned p = F.characteristic(), n = p - 1;
  FqElement total = F.zero(), fact_k = F.one();
  for (unsigned k = 0; k <= n; ++k) {
    if (k) fact_k = F.mul(fact_k, F.from_int(k));
    FqElement binom = F.one(), fact_m = F.one();
    for (unsigned t = 0; t < n - k; ++t) {
      binom = F.mul(binom, F.sub(F.add(a, F.from_int(n)), F.from_int(t)));
      fact_m = F.mul(fact_m, F.from_int(t + 1));
    }
    FqElement term = F.div(F.mul(binom, F.pow(F.neg(x), k)), F.mul(fact_m, fact_k));
    total = F.add(total, term);
  }
  return total;
}

TEST(Laguerre, GeneralizedBinomial) {
  const Fq F5 = Fq::prime(5);
  EXPECT_EQ(generalized_binomial(F5, F5.from_int(4), 2), F5.one());
  EXPECT_EQ(generalized_binomial(F5, F5.from_int(3), 0), F5.one());
  EXPECT_THROW(generalized_binomial(F5, F5.one(), 5), InvalidInput);
  for (unsigned p : {3u, 7u}) {
    const Fq F = Fq::prime(p);
    const MultiPoly minus_one = MultiPoly::constant(F, -1);
    for (unsigned k = 0; k < p; ++k) {
      EXPECT_EQ(generalized_binomial(minus_one, k), MultiPoly::constant(F, k % 2 ? -1 : 1));
    }
  }
}

TEST(Laguerre, FrozenSmallCases) {
  const Fq F3 = Fq::prime(3);
  EXPECT_EQ(codes(laguerre_at(F3, F3.zero())), (std::vector<std::uint32_t>{1, 1, 2}));
  const MultiPoly a = MultiPoly::variable(F3, Var::Alpha), X = MultiPoly::variable(F3, Var::X);
  const MultiPoly one = MultiPoly::constant(F3, 1), two = MultiPoly::constant(F3, 2);
  EXPECT_EQ(laguerre_symbolic(3), two * (a + one) * (a + two) + two * (a + two) * X + two * X.pow(2));
}

TEST(Laguerre, ConstantTermIsOneMinusAlphaPowPMinusOne) {
  for (unsigned p : kPrimes) {
    const Fq F = Fq::prime(p);
    const MultiPoly a = MultiPoly::variable(F, Var::Alpha);
    EXPECT_EQ(laguerre_symbolic(p).coefficient_of(Var::X, 0), MultiPoly::constant(F, 1) - a.pow(p - 1));
  }
}

TEST(Laguerre, AlphaZeroIsTruncatedExp) {
  for (unsigned p : kPrimes) {
    const Fq F = Fq::prime(p);
    EXPECT_EQ(laguerre_at(F, F.zero()), truncated_exp(p));
    EXPECT_EQ(laguerre_symbolic(p).evaluate(Var::Alpha, F.zero()).to_univariate(Var::X), truncated_exp(p));
    EXPECT_EQ(laguerre_symbolic(p).degree_in(Var::X), static_cast<int>(p) - 1);
  }
}

TEST(Laguerre, MatchesDefinitionAtFieldPoints) {
  std::mt19937_64 rng(31);
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {13u, 1u}}) {
    const Fq F = Fq::extension(p, n);
    for (int t = 0; t < 25; ++t) {
      const FqElement a = testing::random_element(F, rng), x = testing::random_element(F, rng);
      EXPECT_EQ(laguerre_at(F, a).eval(x), laguerre_value_oracle(F, a, x));
      EXPECT_EQ(laguerre_eval(F, p, a, x), laguerre_value_oracle(F, a, x));
    }
  }
}

TEST(Laguerre, SymbolicSpecializesToPointValue) {
  std::mt19937_64 rng(37);
  for (unsigned p : {3u, 5u, 7u}) {
    const Fq Fp = Fq::prime(p);
    const MultiPoly sym = laguerre_symbolic(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      EXPECT_EQ(sym.evaluate(Var::Alpha, Fp.from_int(a)).to_univariate(Var::X), laguerre_at(Fp, Fp.from_int(a)));
    }
  }
}

TEST(Laguerre, AllIdentitiesPass) {
  for (unsigned p : kPrimes) {
    for (Identity w : kAllIdentities) {
      const auto r = check_identity(w, p);
      EXPECT_TRUE(r.passed) << r.name << " p=" << p << " diff=" << (r.difference ? r.difference->to_string() : "");
    }
  }
}

TEST(Laguerre, IdentityNamesRoundTrip) {
  for (Identity w : kAllIdentities) EXPECT_EQ(parse_identity(identity_name(w)), w);
  EXPECT_FALSE(parse_identity("nope").has_value());
}

TEST(Laguerre, EdiffP3ByHand) {
  // X(1 + 4X) vs X(1 + X + 2X^2) + X^3 over F_3.
  const Fq F = Fq::prime(3);
  const Polynomial x = Polynomial::variable(F);
  const Polynomial lhs = x * Polynomial::from_ints(F, {1, 4});
  const Polynomial rhs = x * Polynomial::from_ints(F, {1, 1, 2}) + x.pow(3);
  EXPECT_EQ(lhs, rhs);
}

TEST(Laguerre, PLpP2ByHand) {
  // Over F_2: X^2 - (g^2 - g) == -X (g + 2 - X) + g (g + 1 - X).
  const Fq F = Fq::prime(2);
  const MultiPoly g = MultiPoly::variable(F, Var::Alpha), X = MultiPoly::variable(F, Var::X);
  const MultiPoly one = MultiPoly::constant(F, 1);
  EXPECT_EQ(laguerre_symbolic(2), g + one - X);
  EXPECT_EQ(X.pow(2) - (g.pow(2) - g), -(X * (g + one + one - X)) + g * (g + one - X));
}

TEST(Lemma, FrozenPolynomials) {
  const std::vector<std::vector<std::uint32_t>> frozen = {
      {1, 1},
      {1, 2, 2, 1},
      {1, 4, 3, 4, 4, 1, 0, 1, 0, 0, 2},
      {1, 6, 4, 1, 5, 6, 6, 1, 0, 5, 5, 1, 0, 0, 3, 0, 4, 0, 0, 0, 0, 1},
  };
  const unsigned ps[] = {2, 3, 5, 7};
  for (std::size_t k = 0; k < frozen.size(); ++k) EXPECT_EQ(codes(lemma_lhs(ps[k])), frozen[k]) << "p=" << ps[k];
}

TEST(Lemma, ThreeFormsAgree) {
  for (unsigned p : kPrimes) {
    const Polynomial lhs = lemma_lhs(p);
    EXPECT_EQ(lhs, lemma_product_form(p));
    EXPECT_EQ(lhs, lemma_binomial_form(p));
    EXPECT_EQ(lhs.degree(), static_cast<int>(p * (p - 1) / 2));
    EXPECT_EQ(lhs.coeff(0).code, 1u);
  }
}

TEST(Lemma, RootMultiplicities) {
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    const Fq F = Fq::prime(p);
    const auto roots = roots_in_field(lemma_lhs(p));
    ASSERT_EQ(roots.size(), p - 1);
    for (const auto& rm : roots) {
      EXPECT_NE(rm.root.code, 0u);
      // (1 + Z/i)^i vanishes at Z = -i with multiplicity i.
      EXPECT_EQ(F.neg(F.from_int(rm.multiplicity)), rm.root);
    }
  }
}

TEST(Lemma, ProductIdentity) {
  for (unsigned p : kPrimes) {
    const auto r = product_identity_check(p);
    EXPECT_TRUE(r.passed) << "p=" << p;
    EXPECT_EQ(r.product.coeff(0).code, 1u);
  }
}

TEST(Lemma, OperatorForm) {
  for (unsigned p : kPrimes) EXPECT_TRUE(strade_operator_form_check(p).passed) << p;
}

TEST(CoefficientTables, TruncatedExpCongruence) {
  for (unsigned p : kPrimes) EXPECT_TRUE(truncated_exp_congruence_check(p).passed) << p;
}

TEST(CoefficientTables, ClosedFormAtZero) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const Fq F = Fq::prime(p);
    const auto t = c_coefficients(F, F.zero(), F.zero());
    EXPECT_EQ(t.c0(), F.one());
    for (unsigned i = 1; i < p; ++i) EXPECT_EQ(t.ci(i), closed_form_ci(p, i));
    EXPECT_TRUE(t.vanishing_holds());
  }
  // p = 3: c_1 = -1 = 2, c_2 = 1/2 = 2.
  EXPECT_EQ(closed_form_ci(3, 1).code, 2u);
  EXPECT_EQ(closed_form_ci(3, 2).code, 2u);
}

TEST(CoefficientTables, FrozenPrimeFieldTables) {
  struct Case {
    unsigned p;
    std::int64_t a, b;
    unsigned i, j, value;
  };
  // Single nonzero entry in each table.
  for (const Case& c : {Case{3, 1, 2, 2, 1, 1}, Case{5, 2, 3, 3, 2, 2}, Case{7, 3, 4, 4, 3, 5}}) {
    const Fq F = Fq::prime(c.p);
    const auto t = c_coefficients(F, F.from_int(c.a), F.from_int(c.b));
    for (unsigned i = 0; i < c.p; ++i) {
      for (unsigned j = 0; j < c.p; ++j) {
        EXPECT_EQ(t.at(i, j).code, (i == c.i && j == c.j) ? c.value : 0u) << c.p << " " << i << "," << j;
      }
    }
  }
}

TEST(CoefficientTables, RandomPointsAgreeAcrossRoutes) {
  std::mt19937_64 rng(41);
  for (unsigned p : {2u, 3u, 5u}) {
    for (unsigned n : {2u, 3u}) {
      const Fq F = Fq::extension(p, n);
      int tested = 0;
      while (tested < 10) {
        const FqElement a = testing::random_element(F, rng), b = testing::random_element(F, rng);
        if (!is_admissible(F, a, b)) {
          EXPECT_THROW(c_coefficients_lemma_route(F, a, b), HypothesisError);
          continue;
        }
        ++tested;
        const auto t = c_coefficients(F, a, b);
        EXPECT_TRUE(t.vanishing_holds());
        EXPECT_TRUE(reconstructs(t));
        EXPECT_EQ(t.c, c_coefficients_lemma_route(F, a, b).c);
      }
    }
  }
}

TEST(CoefficientTables, InadmissiblePointIsNotInvertible) {
  // a + b = 1 in F_3: P(1) = (1+1)(1+1/2)^2 = 2 * 0 = 0.
  const Fq F = Fq::prime(3);
  EXPECT_FALSE(is_admissible(F, F.one(), F.zero()));
  EXPECT_THROW(c_coefficients(F, F.one(), F.zero()), HypothesisError);
}

TEST(CoefficientTables, SymbolicSmallPrimes) {
  for (unsigned p : {2u, 3u}) {
    const auto r = symbolic_coefficient_tables(p);
    EXPECT_TRUE(r.power_matches_product);
    EXPECT_TRUE(r.reconstructs);
    EXPECT_TRUE(r.vanishing_holds);
    EXPECT_FALSE(r.entries.empty());
    for (const auto& e : r.entries) EXPECT_EQ((e.i + e.j) % p, 0u);
  }
}

}  // namespace
}  // namespace gsw
