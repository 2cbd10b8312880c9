#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsw/fields.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

/// Formal variables available to multivariate polynomials.
enum class Var : std::uint8_t { Alpha = 0, Beta, X, Y, Z, Gamma };
inline constexpr std::size_t kNumVars = 6;

std::string var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Graded lexicographic order: total degree first, then lexicographic on
/// the exponent vector in Var order.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over F_q. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  explicit MultiPoly(Fq field);

  static MultiPoly constant(const Fq& field, FqElement c);
  static MultiPoly constant(const Fq& field, std::int64_t c);
  static MultiPoly variable(const Fq& field, Var v);
  static MultiPoly from_univariate(const Polynomial& f, Var v);

  const Fq& field() const { return field_; }
  const std::map<Exponents, FqElement, GradedLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  FqElement coeff(const Exponents& e) const;
  void add_term(const Exponents& e, FqElement c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b);

  MultiPoly scaled(FqElement c) const;
  MultiPoly pow(std::uint64_t e) const;
  MultiPoly derivative(Var v) const;
  /// Replace v by g everywhere.
  MultiPoly substitute(Var v, const MultiPoly& g) const;
  /// Replace v by a field value.
  MultiPoly evaluate(Var v, FqElement value) const;
  int degree_in(Var v) const;
  int total_degree() const;
  /// Coefficient of v^k as a polynomial in the remaining variables.
  MultiPoly coefficient_of(Var v, unsigned k) const;
  /// Requires that only v occurs.
  Polynomial to_univariate(Var v) const;

  std::string to_string() const;

 private:
  Fq field_;
  std::map<Exponents, FqElement, GradedLex> terms_;
};

/// MultiPoly as a coefficient ring for generic code.
class MultiPolyRing {
 public:
  using value_type = MultiPoly;
  explicit MultiPolyRing(Fq field) : field_(std::move(field)) {}

  const Fq& field() const { return field_; }
  MultiPoly zero() const { return MultiPoly(field_); }
  MultiPoly one() const { return MultiPoly::constant(field_, field_.one()); }
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  MultiPoly scalar(FqElement c) const { return MultiPoly::constant(field_, c); }
  MultiPoly from_int(std::int64_t c) const { return MultiPoly::constant(field_, c); }
  bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
  bool equal(const MultiPoly& a, const MultiPoly& b) const { return a == b; }

 private:
  Fq field_;
};

}  // namespace gsw
