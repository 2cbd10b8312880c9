#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsw {

/// An element of a finite field F_{p^n}.
///
/// The value is the base-p encoding of the coefficient vector in the
/// polynomial basis 1, t, ..., t^{n-1} of the owning field, where t is the
/// class of T modulo the field's defining polynomial. Elements carry no
/// reference to their field; all arithmetic goes through an `Fq` handle.
struct FqElement {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(FqElement, FqElement) = default;
};

namespace detail {
struct FieldData;
}

/// Handle to a finite field F_q, q = p^n, with an explicit monic irreducible
/// modulus of degree n over F_p. Cheap to copy; the underlying data is
/// immutable and shared.
///
/// Fields created through `extension` use the smallest monic irreducible
/// polynomial of the requested degree, where polynomials are ordered by the
/// integer sum_i c_i p^i of their non-leading coefficients. Repeated calls
/// return the same shared field.
class Fq {
 public:
  using value_type = FqElement;

  static constexpr std::uint32_t kMaxExtensionPrime = 1u << 16;
  static constexpr unsigned kMaxDegree = 64;

  static Fq prime(std::uint32_t p);
  static Fq extension(std::uint32_t p, unsigned degree);
  /// `modulus` lists coefficients from the constant term up; it must be monic
  /// and irreducible over F_p.
  static Fq with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;

  FqElement zero() const { return {0}; }
  FqElement one() const { return {1}; }
  FqElement from_int(std::int64_t v) const;
  FqElement from_digits(std::span<const std::uint32_t> digits) const;
  /// Checked conversion from a raw code.
  FqElement element(std::uint64_t code) const;
  std::vector<std::uint32_t> digits(FqElement x) const;
  /// The class of T in F_p[T]/(modulus).
  FqElement generator() const;

  FqElement add(FqElement a, FqElement b) const;
  FqElement sub(FqElement a, FqElement b) const;
  FqElement neg(FqElement a) const;
  FqElement mul(FqElement a, FqElement b) const;
  /// Throws InvalidInput for a == 0.
  FqElement inv(FqElement a) const;
  FqElement div(FqElement a, FqElement b) const;
  FqElement pow(FqElement a, std::uint64_t e) const;
  /// x^{p^k}.
  FqElement frobenius(FqElement x, unsigned k = 1) const;
  /// The unique y with y^p = x.
  FqElement pth_root(FqElement x) const;

  bool is_zero(FqElement a) const { return a.code == 0; }
  bool is_one(FqElement a) const { return a.code == 1; }
  bool equal(FqElement a, FqElement b) const { return a == b; }
  bool in_prime_field(FqElement a) const { return a.code < characteristic(); }
  /// Identity; lets Fq act as a coefficient ring over itself.
  FqElement scalar(FqElement a) const { return a; }

  /// Comma-separated coefficient digits, constant term first ("1,0,2").
  std::string to_string(FqElement x) const;
  FqElement parse(std::string_view text) const;

  /// Whether multiplication runs through log/antilog tables.
  bool uses_tables() const;

  friend bool operator==(const Fq& a, const Fq& b);

 private:
  explicit Fq(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

bool is_prime(std::uint64_t n);

}  // namespace gsw
