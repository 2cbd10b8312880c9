#include "gsw/quotient.hpp"

namespace gsw {

TensorQuotient::TensorQuotient(Polynomial f, Polynomial g)
    : field_(f.field()), f_(std::move(f)), g_(std::move(g)) {
  if (f_.degree() < 1 || g_.degree() < 1) throw InvalidInput("tensor quotient needs positive-degree moduli");
  if (!(f_.field() == g_.field())) throw InvalidInput("tensor quotient moduli over different fields");
  f_ = f_.monic();
  g_ = g_.monic();
  du_ = static_cast<std::size_t>(f_.degree());
  dv_ = static_cast<std::size_t>(g_.degree());
}

Vector TensorQuotient::scalar(FqElement c) const {
  Vector r = zero();
  r[0] = c;
  return r;
}

Vector TensorQuotient::monomial(FqElement c, std::size_t a, std::size_t b) const {
  if (a >= du_ || b >= dv_) throw InvalidInput("tensor quotient monomial out of range");
  Vector r = zero();
  r[a * dv_ + b] = c;
  return r;
}

Vector TensorQuotient::u() const {
  if (du_ > 1) return monomial(field_.one(), 1, 0);
  return scalar(field_.neg(f_.coeff(0)));
}

Vector TensorQuotient::v() const {
  if (dv_ > 1) return monomial(field_.one(), 0, 1);
  return scalar(field_.neg(g_.coeff(0)));
}

Vector TensorQuotient::add(const Vector& a, const Vector& b) const { return gsw::add(field_, a, b); }
Vector TensorQuotient::sub(const Vector& a, const Vector& b) const { return gsw::sub(field_, a, b); }
Vector TensorQuotient::neg(const Vector& a) const { return scale(field_, field_.neg(field_.one()), a); }
bool TensorQuotient::is_zero(const Vector& a) const { return gsw::is_zero(a); }

namespace {

// Reduce sum_k c[k*stride] T^k (k < len) modulo the monic polynomial m in
// place; afterwards only k < deg m may be nonzero.
void reduce_strided(const Fq& F, const Polynomial& m, std::vector<FqElement>& c, std::size_t offset,
                    std::size_t stride, std::size_t len) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  for (std::size_t k = len; k-- > d;) {
    const FqElement lead = c[offset + k * stride];
    if (lead.code == 0) continue;
    c[offset + k * stride] = F.zero();
    for (std::size_t t = 0; t < d; ++t) {
      const FqElement mt = m.coeff(t);
      if (mt.code == 0) continue;
      auto& slot = c[offset + (k - d + t) * stride];
      slot = F.sub(slot, F.mul(lead, mt));
    }
  }
}

}  // namespace

Vector TensorQuotient::mul(const Vector& a, const Vector& b) const {
  const std::size_t lu = 2 * du_ - 1, lv = 2 * dv_ - 1;
  std::vector<FqElement> full(lu * lv, field_.zero());
  for (std::size_t i = 0; i < du_; ++i) {
    for (std::size_t j = 0; j < dv_; ++j) {
      const FqElement x = a[i * dv_ + j];
      if (x.code == 0) continue;
      for (std::size_t k = 0; k < du_; ++k) {
        for (std::size_t l = 0; l < dv_; ++l) {
          const FqElement y = b[k * dv_ + l];
          if (y.code == 0) continue;
          auto& slot = full[(i + k) * lv + (j + l)];
          slot = field_.add(slot, field_.mul(x, y));
        }
      }
    }
  }
  for (std::size_t col = 0; col < lv; ++col) reduce_strided(field_, f_, full, col, lv, lu);
  for (std::size_t row = 0; row < du_; ++row) reduce_strided(field_, g_, full, row * lv, 1, lv);
  Vector r = zero();
  for (std::size_t i = 0; i < du_; ++i) {
    for (std::size_t j = 0; j < dv_; ++j) r[i * dv_ + j] = full[i * lv + j];
  }
  return r;
}

std::optional<Vector> TensorQuotient::try_inverse(const Vector& a) const {
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t i = 0; i < du_; ++i) {
    for (std::size_t j = 0; j < dv_; ++j) cols.push_back(mul(a, monomial(field_.one(), i, j)));
  }
  auto sol = Matrix::from_columns(field_, dim(), cols).solve(one());
  if (!sol || mul(a, *sol) != one()) return std::nullopt;
  return sol;
}

}  // namespace gsw
