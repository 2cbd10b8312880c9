#pragma once

// Independent reference arithmetic and seeded generators shared by the unit
// tests. Nothing here calls into the library's field code.

#include <cstdint>
#include <random>
#include <vector>

#include "gsw/fields.hpp"

namespace gsw::testing {

/// Schoolbook F_p[T]/(m) on digit vectors, constant term first.
class NaiveField {
 public:
  NaiveField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), m_(std::move(modulus)) {}

  std::size_t n() const { return m_.size() - 1; }

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint64_t> prod(2 * n(), 0);
    for (std::size_t i = 0; i < n(); ++i) {
      for (std::size_t j = 0; j < n(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    for (std::size_t k = prod.size(); k-- > n();) {
      const std::uint64_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (std::size_t t = 0; t < n(); ++t) prod[k - n() + t] = (prod[k - n() + t] + (p_ - c) * m_[t]) % p_;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n())};
  }

  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> r(n());
    for (std::size_t i = 0; i < n(); ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }

  std::vector<std::uint32_t> pow(std::vector<std::uint32_t> a, std::uint64_t e) const {
    std::vector<std::uint32_t> r(n(), 0);
    r[0] = 1;
    for (std::uint64_t k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> m_;
};

inline FqElement random_element(const Fq& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, F.order() - 1);
  return F.element(d(rng));
}

inline FqElement random_nonzero(const Fq& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, F.order() - 1);
  return F.element(d(rng));
}

}  // namespace gsw::testing
