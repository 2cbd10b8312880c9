#pragma once

#include <concepts>
#include <cstdint>

#include "gsw/fields.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

/// A commutative F_q-algebra accessed through a context object, the way
/// `Fq` itself is used: values are plain data, operations live on the ring.
template <class R>
concept CommutativeAlgebra = requires(const R& ring, const typename R::value_type& a, FqElement c) {
  { ring.zero() } -> std::convertible_to<typename R::value_type>;
  { ring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.neg(a) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.scalar(c) } -> std::convertible_to<typename R::value_type>;
  { ring.from_int(std::int64_t{}) } -> std::convertible_to<typename R::value_type>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.equal(a, a) } -> std::convertible_to<bool>;
};

template <CommutativeAlgebra R>
typename R::value_type ring_pow(const R& ring, typename R::value_type base, std::uint64_t e) {
  auto result = ring.one();
  while (e) {
    if (e & 1) result = ring.mul(result, base);
    e >>= 1;
    if (e) base = ring.mul(base, base);
  }
  return result;
}

/// f(x) for f with coefficients in the prime field (read off by code).
template <CommutativeAlgebra R>
typename R::value_type eval_prime_poly(const R& ring, const Polynomial& f, const typename R::value_type& x) {
  auto acc = ring.zero();
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = ring.mul(acc, x);
    if (f.coeffs()[k].code != 0) acc = ring.add(acc, ring.from_int(static_cast<std::int64_t>(f.coeffs()[k].code)));
  }
  return acc;
}

}  // namespace gsw
