#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsw/fields.hpp"

namespace gsw {

/// Dense univariate polynomial over a finite field. Coefficients are stored
/// constant term first with no trailing zeros, so equal polynomials have
/// equal representations.
class Polynomial {
 public:
  explicit Polynomial(Fq field);
  Polynomial(Fq field, std::vector<FqElement> coeffs);

  static Polynomial constant(const Fq& field, FqElement c);
  static Polynomial monomial(const Fq& field, FqElement c, std::size_t k);
  /// The variable T.
  static Polynomial variable(const Fq& field);
  /// Coefficients given as integers reduced into the prime field.
  static Polynomial from_ints(const Fq& field, const std::vector<std::int64_t>& coeffs);

  const Fq& field() const { return field_; }
  const std::vector<FqElement>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FqElement coeff(std::size_t k) const;
  FqElement leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(FqElement c) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(std::uint64_t e) const;
  /// this(g(T)).
  Polynomial compose(const Polynomial& g) const;
  FqElement eval(FqElement x) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  Fq field_;
  std::vector<FqElement> c_;
};

/// Quotient and remainder; throws InvalidInput when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// base^e mod m.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);
/// Product of (T - r) over the listed roots.
Polynomial from_roots(const Fq& field, const std::vector<FqElement>& roots);

}  // namespace gsw
