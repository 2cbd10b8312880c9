#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gsw/error.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"
#include "gsw/multipoly.hpp"
#include "gsw/polynomial.hpp"
#include "gsw/ring.hpp"

namespace gsw {

/// R[X,Y] / (X^p - a*, Y^p - b*) for a commutative coefficient algebra R.
/// Elements are p x p coefficient arrays, entry (i, j) holding the
/// coefficient of X^i Y^j.
template <CommutativeAlgebra R>
class QuotientRing {
 public:
  using coeff_type = typename R::value_type;
  struct Element {
    std::vector<coeff_type> c;  // c[i * p + j]
  };
  using value_type = Element;

  QuotientRing(R base, unsigned p, coeff_type a_star, coeff_type b_star)
      : base_(std::move(base)),
        p_(p),
        a_star_(std::move(a_star)),
        b_star_(std::move(b_star)),
        ab_star_(base_.mul(a_star_, b_star_)) {
    if (p_ < 2) throw InvalidInput("quotient ring needs p >= 2");
  }

  const R& base() const { return base_; }
  unsigned p() const { return p_; }
  const coeff_type& a_star() const { return a_star_; }
  const coeff_type& b_star() const { return b_star_; }
  bool same_ideal(const QuotientRing& other) const {
    return p_ == other.p_ && base_.equal(a_star_, other.a_star_) && base_.equal(b_star_, other.b_star_);
  }

  Element zero() const { return Element{std::vector<coeff_type>(p_ * p_, base_.zero())}; }
  Element lift(const coeff_type& c) const {
    Element e = zero();
    e.c[0] = c;
    return e;
  }
  Element one() const { return lift(base_.one()); }
  Element scalar(FqElement c) const { return lift(base_.scalar(c)); }
  Element from_int(std::int64_t c) const { return lift(base_.from_int(c)); }
  Element monomial(const coeff_type& c, unsigned i, unsigned j) const {
    Element e = zero();
    e.c[index(i, j)] = c;
    return e;
  }
  Element x() const { return monomial(base_.one(), 1, 0); }
  Element y() const { return monomial(base_.one(), 0, 1); }

  const coeff_type& coeff(const Element& e, unsigned i, unsigned j) const { return e.c[index(i, j)]; }

  Element add(const Element& a, const Element& b) const {
    Element r = a;
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = base_.add(r.c[k], b.c[k]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r = a;
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = base_.sub(r.c[k], b.c[k]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r = a;
    for (auto& v : r.c) v = base_.neg(v);
    return r;
  }
  Element scale(const coeff_type& s, const Element& a) const {
    Element r = a;
    for (auto& v : r.c) v = base_.mul(s, v);
    return r;
  }

  /// Products are accumulated in four buckets by which variables wrapped
  /// past p-1, so the reduction constants are applied once per bucket.
  Element mul(const Element& a, const Element& b) const {
    std::vector<coeff_type> bucket[4];
    for (auto& v : bucket) v.assign(p_ * p_, base_.zero());
    std::vector<bool> bz(b.c.size());
    for (std::size_t k = 0; k < b.c.size(); ++k) bz[k] = base_.is_zero(b.c[k]);
    for (unsigned i = 0; i < p_; ++i) {
      for (unsigned j = 0; j < p_; ++j) {
        const coeff_type& ca = a.c[index(i, j)];
        if (base_.is_zero(ca)) continue;
        for (unsigned k = 0; k < p_; ++k) {
          unsigned ii = i + k;
          const int wx = ii >= p_ ? 1 : 0;
          if (wx) ii -= p_;
          for (unsigned l = 0; l < p_; ++l) {
            if (bz[index(k, l)]) continue;
            unsigned jj = j + l;
            const int wy = jj >= p_ ? 2 : 0;
            if (wy) jj -= p_;
            auto& slot = bucket[wx | wy][index(ii, jj)];
            slot = base_.add(slot, base_.mul(ca, b.c[index(k, l)]));
          }
        }
      }
    }
    Element r{std::move(bucket[0])};
    for (std::size_t k = 0; k < r.c.size(); ++k) {
      if (!base_.is_zero(bucket[1][k])) r.c[k] = base_.add(r.c[k], base_.mul(a_star_, bucket[1][k]));
      if (!base_.is_zero(bucket[2][k])) r.c[k] = base_.add(r.c[k], base_.mul(b_star_, bucket[2][k]));
      if (!base_.is_zero(bucket[3][k])) r.c[k] = base_.add(r.c[k], base_.mul(ab_star_, bucket[3][k]));
    }
    return r;
  }

  bool is_zero(const Element& a) const {
    for (const auto& v : a.c) {
      if (!base_.is_zero(v)) return false;
    }
    return true;
  }
  bool equal(const Element& a, const Element& b) const {
    for (std::size_t k = 0; k < a.c.size(); ++k) {
      if (!base_.equal(a.c[k], b.c[k])) return false;
    }
    return true;
  }

  /// Image of a polynomial in X and Y; every other variable must be absent
  /// (use the MultiPoly-coefficient overload for symbolic coefficients).
  Element reduce(const MultiPoly& f) const
    requires std::same_as<coeff_type, FqElement>
  {
    Element r = zero();
    const auto xi = static_cast<std::size_t>(Var::X), yi = static_cast<std::size_t>(Var::Y);
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t v = 0; v < kNumVars; ++v) {
        if (v != xi && v != yi && e[v] != 0) throw InvalidInput("reduce: unexpected variable " + var_name(static_cast<Var>(v)));
      }
      coeff_type term = base_.mul(c, base_.mul(ring_pow(base_, a_star_, e[xi] / p_), ring_pow(base_, b_star_, e[yi] / p_)));
      auto& slot = r.c[index(e[xi] % p_, e[yi] % p_)];
      slot = base_.add(slot, term);
    }
    return r;
  }

  /// Image of a polynomial in X, Y with coefficients in the remaining
  /// variables, for R = MultiPolyRing.
  Element reduce(const MultiPoly& f) const
    requires std::same_as<coeff_type, MultiPoly>
  {
    Element r = zero();
    const auto xi = static_cast<std::size_t>(Var::X), yi = static_cast<std::size_t>(Var::Y);
    for (const auto& [e, c] : f.terms()) {
      Exponents rest = e;
      rest[xi] = rest[yi] = 0;
      MultiPoly mono(f.field());
      mono.add_term(rest, c);
      coeff_type term = mono * ring_pow(base_, a_star_, e[xi] / p_) * ring_pow(base_, b_star_, e[yi] / p_);
      auto& slot = r.c[index(e[xi] % p_, e[yi] % p_)];
      slot = slot + term;
    }
    return r;
  }

 private:
  std::size_t index(unsigned i, unsigned j) const { return std::size_t{i} * p_ + j; }

  R base_;
  unsigned p_;
  coeff_type a_star_, b_star_, ab_star_;
};

/// Matrix of multiplication by u on the F_q-basis X^i Y^j of the quotient
/// over a field.
inline Matrix multiplication_matrix(const QuotientRing<Fq>& ring, const QuotientRing<Fq>::Element& u) {
  const unsigned p = ring.p();
  const Fq& F = ring.base();
  std::vector<Vector> cols;
  cols.reserve(std::size_t{p} * p);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) cols.push_back(ring.mul(u, ring.monomial(F.one(), i, j)).c);
  }
  return Matrix::from_columns(F, std::size_t{p} * p, cols);
}

/// Inverse by solving the p^2 x p^2 system u * w = 1; nullopt when the
/// multiplication matrix is singular.
inline std::optional<QuotientRing<Fq>::Element> try_inverse(const QuotientRing<Fq>& ring,
                                                             const QuotientRing<Fq>::Element& u) {
  auto sol = multiplication_matrix(ring, u).solve(ring.one().c);
  if (!sol) return std::nullopt;
  QuotientRing<Fq>::Element w{std::move(*sol)};
  if (!ring.equal(ring.mul(u, w), ring.one())) return std::nullopt;
  return w;
}

/// Throws HypothesisError when u is not invertible.
inline QuotientRing<Fq>::Element inverse(const QuotientRing<Fq>& ring, const QuotientRing<Fq>::Element& u) {
  auto w = try_inverse(ring, u);
  if (!w) throw HypothesisError("quotient element is not invertible");
  return *w;
}

/// F_q[U,V] / (f(U), g(V)) for monic f and g: the commutative algebra
/// generated by two commuting operators with minimal polynomials f and g
/// acting on the two tensor factors.
class TensorQuotient {
 public:
  using value_type = Vector;  // entry a * dg + b holds the coefficient of U^a V^b

  TensorQuotient(Polynomial f, Polynomial g);

  const Fq& field() const { return field_; }
  std::size_t dim_u() const { return du_; }
  std::size_t dim_v() const { return dv_; }
  std::size_t dim() const { return du_ * dv_; }

  Vector zero() const { return Vector(dim(), field_.zero()); }
  Vector one() const { return scalar(field_.one()); }
  Vector scalar(FqElement c) const;
  Vector from_int(std::int64_t c) const { return scalar(field_.from_int(c)); }
  /// U^a V^b with a < deg f, b < deg g.
  Vector monomial(FqElement c, std::size_t a, std::size_t b) const;
  Vector u() const;
  Vector v() const;
  FqElement coeff(const Vector& x, std::size_t a, std::size_t b) const { return x[a * dv_ + b]; }

  Vector add(const Vector& a, const Vector& b) const;
  Vector sub(const Vector& a, const Vector& b) const;
  Vector neg(const Vector& a) const;
  Vector mul(const Vector& a, const Vector& b) const;
  bool is_zero(const Vector& a) const;
  bool equal(const Vector& a, const Vector& b) const { return a == b; }

  std::optional<Vector> try_inverse(const Vector& a) const;

 private:
  Fq field_;
  Polynomial f_, g_;
  std::size_t du_, dv_;
};

}  // namespace gsw
