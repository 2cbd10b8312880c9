#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsw/fields.hpp"
#include "gsw/multipoly.hpp"
#include "gsw/polynomial.hpp"
#include "gsw/quotient.hpp"
#include "gsw/ring.hpp"

namespace gsw {

/// t(t-1)...(t-m+1)/m! for m < p, p the characteristic of F.
FqElement generalized_binomial(const Fq& F, FqElement t, unsigned m);
/// The same with t a polynomial.
MultiPoly generalized_binomial(const MultiPoly& t, unsigned m);

/// 1/k! in F_p for k < p, and 1/i for 0 < i < p, cached per p.
const std::vector<FqElement>& inverse_factorials(unsigned p);
const std::vector<FqElement>& inverses(unsigned p);

/// Coefficients l_k(alpha) in F_p[alpha] of L_n^{(alpha)}(X) = sum_k l_k(alpha) X^k,
/// for 0 <= n < p. The default is n = p - 1.
std::vector<Polynomial> laguerre_coefficients(unsigned p, unsigned n);
const std::vector<Polynomial>& laguerre_coefficients(unsigned p);

/// L_{p-1}^{(alpha)}(X) over the field of alpha.
Polynomial laguerre_at(const Fq& F, FqElement alpha);
/// L_n^{(param)}(x) in F_p[param, x]; defaults give L_{p-1}^{(alpha)}(X).
MultiPoly laguerre_symbolic(unsigned p, unsigned n, Var param = Var::Alpha, Var x = Var::X);
MultiPoly laguerre_symbolic(unsigned p);
/// The truncated exponential sum_{k<p} X^k/k!.
Polynomial truncated_exp(unsigned p);

/// L_{p-1}^{(alpha)}(x) for commuting alpha, x in any commutative F_q-algebra
/// of characteristic p.
template <CommutativeAlgebra R>
typename R::value_type laguerre_eval(const R& ring, unsigned p, const typename R::value_type& alpha,
                                     const typename R::value_type& x) {
  const auto& coeffs = laguerre_coefficients(p);
  auto acc = ring.zero();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = ring.add(ring.mul(acc, x), eval_prime_poly(ring, coeffs[k], alpha));
  }
  return acc;
}

/// prod_{i=1}^{p-1} (1 + s/i)^i.
template <CommutativeAlgebra R>
typename R::value_type lemma_product_eval(const R& ring, unsigned p, const typename R::value_type& s) {
  const auto& inv = inverses(p);
  auto acc = ring.one();
  for (unsigned i = 1; i < p; ++i) {
    const auto factor = ring.add(ring.one(), ring.mul(ring.from_int(inv[i].code), s));
    acc = ring.mul(acc, ring_pow(ring, factor, i));
  }
  return acc;
}

enum class Identity { Rel1, Rel2, Derivative, Lmodp, PLp, LDiff, EDiff };

inline constexpr Identity kAllIdentities[] = {Identity::Rel1,  Identity::Rel2,  Identity::Derivative, Identity::Lmodp,
                                              Identity::PLp,   Identity::LDiff, Identity::EDiff};

std::string identity_name(Identity which);
std::optional<Identity> parse_identity(std::string_view name);

struct IdentityReport {
  std::string name;
  unsigned p = 0;
  bool passed = false;
  /// lhs - rhs of the first failing instance.
  std::optional<MultiPoly> difference;
};

/// Symbolic check in F_p[gamma, X] (gamma is Var::Alpha). The degree-n
/// recurrences are checked for every 1 <= n <= p-1; Lmodp is checked after
/// multiplying both sides by prod_{j=1}^{p-1} (alpha + j).
IdentityReport check_identity(Identity which, unsigned p);

/// L_{p-1}^{(Z^p)}(Z^p - Z) in F_p[Z].
Polynomial lemma_lhs(unsigned p);
/// prod_{i=1}^{p-1} (1 + Z/i)^i.
Polynomial lemma_product_form(unsigned p);
/// (-1)^{p(p-1)/2} prod_{j=1}^{p-1} binom(Z-1, j).
Polynomial lemma_binomial_form(unsigned p);

struct ProductIdentityReport {
  unsigned p = 0;
  bool passed = false;
  Polynomial product;  // L^{(Z^p)}(Z^p - Z) * L^{(-Z^p)}(-Z^p + Z)
};
ProductIdentityReport product_identity_check(unsigned p);

/// E(X) E(Y) = E(X+Y) (1 + sum_i (-1)^i X^i Y^{p-i} / i) modulo X^p, Y^p.
IdentityReport truncated_exp_congruence_check(unsigned p);

/// -sum_{i<p} (prod_{k=i+1}^{p-1} (alpha + k)) X^i == L_{p-1}^{(alpha)}(X).
IdentityReport strade_operator_form_check(unsigned p);

/// Coefficients c'_{ij} with
/// L^{(a)}(X) L^{(b)}(Y) = L^{(a+b)}(X+Y) sum c'_{ij} X^i Y^j
/// in F[X,Y]/(X^p - (a^p - a), Y^p - (b^p - b)).
struct CoefficientTable {
  unsigned p = 0;
  Fq field;
  FqElement a, b;
  std::vector<FqElement> c;  // c[i * p + j]

  FqElement at(unsigned i, unsigned j) const { return c[std::size_t{i} * p + j]; }
  FqElement c0() const { return at(0, 0); }
  /// c_i = c'_{i, p-i} for 0 < i < p.
  FqElement ci(unsigned i) const { return at(i, p - i); }
  /// Whether c'_{ij} = 0 for all i + j not divisible by p.
  bool vanishing_holds() const;
};

/// a + b outside F_p^*, i.e. (a+b)^{p-1} != 1 or a + b = 0.
bool is_admissible(const Fq& F, FqElement a, FqElement b);

/// Table via the p^2 x p^2 linear solve. Throws HypothesisError when
/// L^{(a+b)}(X+Y) is not invertible in the quotient.
CoefficientTable c_coefficients(const Fq& F, FqElement a, FqElement b);
/// Table via L^{(a+b)}(X+Y)^{p-1} / prod_i (1 + (a+b)/i)^i; requires
/// admissibility.
CoefficientTable c_coefficients_lemma_route(const Fq& F, FqElement a, FqElement b);
/// Whether L^{(a+b)}(X+Y) * table == L^{(a)}(X) L^{(b)}(Y) exactly.
bool reconstructs(const CoefficientTable& table);
/// (-1)^i / i in F_p.
FqElement closed_form_ci(unsigned p, unsigned i);

/// Coefficient tables computed over F_p[alpha, beta] with the denominator
/// P(alpha+beta) = prod (1 + (alpha+beta)/i)^i kept separate: the table is
/// numerator / P with numerator = L(X) L(Y) L(X+Y)^{p-1}.
struct SymbolicTableReport {
  unsigned p = 0;
  bool power_matches_product = false;  // L^{(a+b)}(X+Y)^p == P(a+b)
  bool reconstructs = false;           // L(X+Y) * numerator == P * L(X) L(Y)
  bool vanishing_holds = false;
  struct Entry {
    unsigned i = 0, j = 0;
    /// exponent[k-1] of (alpha + beta + k) in the reduced denominator.
    std::vector<unsigned> denominator_exponents;
  };
  std::vector<Entry> entries;  // nonzero c'_{ij}
  bool all_polynomial() const;
};
SymbolicTableReport symbolic_coefficient_tables(unsigned p);

}  // namespace gsw
