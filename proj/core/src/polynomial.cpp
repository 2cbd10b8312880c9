#include "gsw/polynomial.hpp"

#include <sstream>

#include "gsw/error.hpp"

namespace gsw {

Polynomial::Polynomial(Fq field) : field_(std::move(field)) {}

Polynomial::Polynomial(Fq field, std::vector<FqElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Fq& field, FqElement c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::monomial(const Fq& field, FqElement c, std::size_t k) {
  std::vector<FqElement> v(k + 1, field.zero());
  v[k] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::variable(const Fq& field) {
  return monomial(field, field.one(), 1);
}

Polynomial Polynomial::from_ints(const Fq& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<FqElement> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

FqElement Polynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : field_.zero();
}

FqElement Polynomial::leading() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<FqElement> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return Polynomial(field_, std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Fq& F = a.field_;
  std::vector<FqElement> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Polynomial(F, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const Fq& F = a.field_;
  std::vector<FqElement> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Polynomial(F, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Fq& F = a.field_;
  if (a.is_zero() || b.is_zero()) return Polynomial(F);
  std::vector<FqElement> v(a.c_.size() + b.c_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  return Polynomial(F, std::move(v));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

Polynomial Polynomial::scaled(FqElement c) const {
  std::vector<FqElement> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], c);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(field_);
  std::vector<FqElement> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
  }
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(field_, field_.one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial result(field_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    result = result * g + constant(field_, c_[i]);
  }
  return result;
}

FqElement Polynomial::eval(FqElement x) const {
  FqElement acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].code == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = field_.to_string(c_[i]);
    const bool unit = c_[i].code == 1;
    const bool wrap = field_.degree() > 1;
    if (i == 0 || !unit) os << (wrap ? "(" + c + ")" : c);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const Fq& F = a.field();
  if (a.degree() < b.degree()) return {Polynomial(F), a};
  std::vector<FqElement> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<FqElement> quo(rem.size() - db, F.zero());
  const FqElement lead_inv = F.inv(bc.back());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].code == 0) continue;
    const FqElement factor = F.mul(rem[k], lead_inv);
    quo[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = F.sub(rem[k - db + i], F.mul(factor, bc[i]));
    }
  }
  rem.resize(db);
  return {Polynomial(F, std::move(quo)), Polynomial(F, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(base.field(), base.field().one()) % m;
  Polynomial b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

Polynomial from_roots(const Fq& field, const std::vector<FqElement>& roots) {
  Polynomial result = Polynomial::constant(field, field.one());
  for (auto r : roots) {
    result = result * Polynomial(field, {field.neg(r), field.one()});
  }
  return result;
}

}  // namespace gsw
