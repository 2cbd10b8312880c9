#include "gsw/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "gsw/error.hpp"

namespace gsw {

std::string var_name(Var v) {
  switch (v) {
    case Var::Alpha: return "a";
    case Var::Beta: return "b";
    case Var::X: return "X";
    case Var::Y: return "Y";
    case Var::Z: return "Z";
    case Var::Gamma: return "g";
  }
  return "?";
}

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

MultiPoly::MultiPoly(Fq field) : field_(std::move(field)) {}

MultiPoly MultiPoly::constant(const Fq& field, FqElement c) {
  MultiPoly m(field);
  m.add_term(Exponents{}, c);
  return m;
}

MultiPoly MultiPoly::constant(const Fq& field, std::int64_t c) { return constant(field, field.from_int(c)); }

MultiPoly MultiPoly::variable(const Fq& field, Var v) {
  MultiPoly m(field);
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  m.add_term(e, field.one());
  return m;
}

MultiPoly MultiPoly::from_univariate(const Polynomial& f, Var v) {
  MultiPoly m(f.field());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
    m.add_term(e, f.coeffs()[k]);
  }
  return m;
}

FqElement MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Exponents& e, FqElement c) {
  if (c.code == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second.code == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, field_.neg(c));
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, a.field_.neg(c));
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < kNumVars; ++i) {
        const unsigned s = unsigned{ea[i]} + eb[i];
        if (s > 0xffff) throw InvalidInput("exponent overflow");
        e[i] = static_cast<std::uint16_t>(s);
      }
      r.add_term(e, a.field_.mul(ca, cb));
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

MultiPoly MultiPoly::scaled(FqElement c) const {
  MultiPoly r(field_);
  if (c.code == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, field_.mul(v, c));
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(field_, field_.one());
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    --d[idx];
    r.add_term(d, field_.mul(c, field_.from_int(e[idx])));
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& g) const {
  const auto idx = static_cast<std::size_t>(v);
  const int deg = degree_in(v);
  if (deg < 0) return *this;
  std::vector<MultiPoly> powers{constant(field_, field_.one())};
  for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * g);
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    MultiPoly mono(field_);
    mono.add_term(rest, c);
    r += mono * powers[e[idx]];
  }
  return r;
}

MultiPoly MultiPoly::evaluate(Var v, FqElement value) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    r.add_term(rest, field_.mul(c, field_.pow(value, e[idx])));
  }
  return r;
}

int MultiPoly::degree_in(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned k) const {
  const auto idx = static_cast<std::size_t>(v);
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents rest = e;
    rest[idx] = 0;
    r.add_term(rest, c);
  }
  return r;
}

Polynomial MultiPoly::to_univariate(Var v) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<FqElement> coeffs(static_cast<std::size_t>(std::max(0, degree_in(v) + 1)), field_.zero());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != idx && e[i] != 0) throw InvalidInput("polynomial involves other variables");
    }
    coeffs[e[idx]] = c;
  }
  return Polynomial(field_, std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool mono = false;
    for (std::size_t i = 0; i < kNumVars; ++i) mono = mono || e[i] > 0;
    if (!mono || c.code != 1) {
      const std::string s = field_.to_string(c);
      os << (field_.degree() > 1 ? "(" + s + ")" : s);
      if (mono) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!e[i]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace gsw
