#include "gsw/laguerre.hpp"

#include <map>
#include <mutex>

#include "gsw/error.hpp"

namespace gsw {

namespace {

struct PrimeTables {
  std::vector<FqElement> inv_fact, inv;
  std::vector<Polynomial> lag;
};

const PrimeTables& tables(unsigned p) {
  static std::mutex m;
  static std::map<unsigned, std::unique_ptr<PrimeTables>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[p];
  if (!slot) {
    const Fq F = Fq::prime(p);
    auto t = std::make_unique<PrimeTables>();
    t->inv.assign(p, F.zero());
    t->inv_fact.assign(p, F.one());
    FqElement fact = F.one();
    for (unsigned k = 1; k < p; ++k) {
      t->inv[k] = F.inv(F.from_int(k));
      fact = F.mul(fact, F.from_int(k));
      t->inv_fact[k] = F.inv(fact);
    }
    slot = std::move(t);
    slot->lag = laguerre_coefficients(p, p - 1);
  }
  return *slot;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

MultiPoly var(const Fq& F, Var v) { return MultiPoly::variable(F, v); }
MultiPoly cst(const Fq& F, std::int64_t c) { return MultiPoly::constant(F, c); }

IdentityReport compare(std::string name, unsigned p, const MultiPoly& lhs, const MultiPoly& rhs) {
  IdentityReport r{std::move(name), p, lhs == rhs, std::nullopt};
  if (!r.passed) r.difference = lhs - rhs;
  return r;
}

// Runs body(n) for each n and stops at the first failure.
template <class Body>
IdentityReport for_each_degree(Identity which, unsigned p, unsigned from, Body body) {
  for (unsigned n = from; n < p; ++n) {
    auto [lhs, rhs] = body(n);
    if (!(lhs == rhs)) return compare(identity_name(which) + " n=" + std::to_string(n), p, lhs, rhs);
  }
  return IdentityReport{identity_name(which), p, true, std::nullopt};
}

}  // namespace

const std::vector<FqElement>& inverse_factorials(unsigned p) {
  require_prime(p);
  return tables(p).inv_fact;
}

const std::vector<FqElement>& inverses(unsigned p) {
  require_prime(p);
  return tables(p).inv;
}

FqElement generalized_binomial(const Fq& F, FqElement t, unsigned m) {
  const unsigned p = F.characteristic();
  if (m >= p) throw InvalidInput("generalized binomial needs m < p");
  FqElement acc = F.one();
  for (unsigned k = 0; k < m; ++k) acc = F.mul(acc, F.sub(t, F.from_int(k)));
  return F.mul(acc, F.from_int(inverse_factorials(p)[m].code));
}

MultiPoly generalized_binomial(const MultiPoly& t, unsigned m) {
  const Fq& F = t.field();
  const unsigned p = F.characteristic();
  if (m >= p) throw InvalidInput("generalized binomial needs m < p");
  MultiPoly acc = cst(F, 1);
  for (unsigned k = 0; k < m; ++k) acc = acc * (t - cst(F, k));
  return acc.scaled(F.from_int(inverse_factorials(p)[m].code));
}

std::vector<Polynomial> laguerre_coefficients(unsigned p, unsigned n) {
  require_prime(p);
  if (n >= p) throw InvalidInput("Laguerre degree must be below p");
  const Fq F = Fq::prime(p);
  const Polynomial alpha = Polynomial::variable(F);
  std::vector<FqElement> inv_fact(p, F.one());
  {
    FqElement fact = F.one();
    for (unsigned k = 1; k < p; ++k) {
      fact = F.mul(fact, F.from_int(k));
      inv_fact[k] = F.inv(fact);
    }
  }
  std::vector<Polynomial> out;
  for (unsigned k = 0; k <= n; ++k) {
    // binom(alpha + n, n - k) = prod_{t < n-k} (alpha + n - t) / (n-k)!
    Polynomial b = Polynomial::constant(F, inv_fact[n - k]);
    for (unsigned t = 0; t < n - k; ++t) b = b * (alpha + Polynomial::constant(F, F.from_int(n - t)));
    const FqElement sign = k % 2 ? F.neg(F.one()) : F.one();
    out.push_back(b.scaled(F.mul(sign, inv_fact[k])));
  }
  return out;
}

const std::vector<Polynomial>& laguerre_coefficients(unsigned p) {
  require_prime(p);
  return tables(p).lag;
}

Polynomial laguerre_at(const Fq& F, FqElement alpha) {
  const unsigned p = F.characteristic();
  std::vector<FqElement> c;
  for (const auto& lk : laguerre_coefficients(p)) c.push_back(eval_prime_poly(F, lk, alpha));
  return Polynomial(F, std::move(c));
}

MultiPoly laguerre_symbolic(unsigned p, unsigned n, Var param, Var x) {
  const auto coeffs = laguerre_coefficients(p, n);
  const Fq F = Fq::prime(p);
  MultiPoly out(F);
  const MultiPoly X = var(F, x);
  MultiPoly xk = cst(F, 1);
  for (const auto& lk : coeffs) {
    out += MultiPoly::from_univariate(lk, param) * xk;
    xk = xk * X;
  }
  return out;
}

MultiPoly laguerre_symbolic(unsigned p) { return laguerre_symbolic(p, p - 1); }

Polynomial truncated_exp(unsigned p) {
  const Fq F = Fq::prime(p);
  return Polynomial(F, inverse_factorials(p));
}

std::string identity_name(Identity which) {
  switch (which) {
    case Identity::Rel1: return "rel1";
    case Identity::Rel2: return "rel2";
    case Identity::Derivative: return "derivative";
    case Identity::Lmodp: return "Lmodp";
    case Identity::PLp: return "pLp";
    case Identity::LDiff: return "Ldiff";
    case Identity::EDiff: return "Ediff";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity w : kAllIdentities) {
    if (identity_name(w) == name) return w;
  }
  return std::nullopt;
}

IdentityReport check_identity(Identity which, unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const MultiPoly g = var(F, Var::Alpha), X = var(F, Var::X);
  const MultiPoly g1 = g + cst(F, 1);
  auto L = [&](unsigned n, const MultiPoly& param) {
    return laguerre_symbolic(p, n).substitute(Var::Alpha, param);
  };
  const MultiPoly Xp_shift = X.pow(p) - (g.pow(p) - g);

  switch (which) {
    case Identity::Rel1:
      return for_each_degree(which, p, 1, [&](unsigned n) {
        return std::pair{L(n, g), L(n, g1) - L(n - 1, g1)};
      });
    case Identity::Rel2:
      return for_each_degree(which, p, 1, [&](unsigned n) {
        const MultiPoly nn = cst(F, n);
        return std::pair{nn * L(n, g1), (nn - X) * L(n - 1, g1) + (nn + g) * L(n - 1, g)};
      });
    case Identity::Derivative:
      return for_each_degree(which, p, 0, [&](unsigned n) {
        return std::pair{L(n, g).derivative(Var::X), L(n, g) - L(n, g1)};
      });
    case Identity::Lmodp: {
      // Both sides times prod_{j=1}^{p-1} (alpha + j).
      MultiPoly full = cst(F, 1);
      for (unsigned j = 1; j < p; ++j) full = full * (g + cst(F, j));
      MultiPoly sum(F);
      for (unsigned k = 0; k < p; ++k) {
        MultiPoly tail = cst(F, 1);
        for (unsigned j = k + 1; j < p; ++j) tail = tail * (g + cst(F, j));
        sum += X.pow(k) * tail;
      }
      return compare(identity_name(which), p, L(p - 1, g) * full, (cst(F, 1) - g.pow(p - 1)) * sum);
    }
    case Identity::PLp:
      return compare(identity_name(which), p, Xp_shift, -(X * L(p - 1, g1)) + g * L(p - 1, g));
    case Identity::LDiff:
      return compare(identity_name(which), p, X * L(p - 1, g).derivative(Var::X),
                     (X - g) * L(p - 1, g) + Xp_shift);
    case Identity::EDiff: {
      const MultiPoly E = MultiPoly::from_univariate(truncated_exp(p), Var::X);
      return compare(identity_name(which), p, X * E.derivative(Var::X), X * E + X.pow(p));
    }
  }
  throw InvalidInput("unknown identity");
}

Polynomial lemma_lhs(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const Polynomial z = Polynomial::variable(F);
  const Polynomial zp = z.pow(p);
  const Polynomial x = zp - z;
  Polynomial acc(F), xk = Polynomial::constant(F, F.one());
  for (const auto& lk : laguerre_coefficients(p)) {
    acc = acc + lk.compose(zp) * xk;
    xk = xk * x;
  }
  return acc;
}

Polynomial lemma_product_form(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const auto& inv = inverses(p);
  Polynomial acc = Polynomial::constant(F, F.one());
  for (unsigned i = 1; i < p; ++i) acc = acc * Polynomial(F, {F.one(), inv[i]}).pow(i);
  return acc;
}

Polynomial lemma_binomial_form(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const Polynomial z = Polynomial::variable(F);
  Polynomial acc = Polynomial::constant(F, F.one());
  for (unsigned j = 1; j < p; ++j) {
    Polynomial b = Polynomial::constant(F, inverse_factorials(p)[j]);
    for (unsigned t = 0; t < j; ++t) b = b * (z - Polynomial::constant(F, F.from_int(1 + t)));
    acc = acc * b;
  }
  const unsigned long e = static_cast<unsigned long>(p) * (p - 1) / 2;
  return e % 2 ? -acc : acc;
}

ProductIdentityReport product_identity_check(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const Polynomial z = Polynomial::variable(F);
  const Polynomial zp = z.pow(p);
  // L^{(-Z^p)}(-Z^p + Z)
  Polynomial partner(F), xk = Polynomial::constant(F, F.one());
  for (const auto& lk : laguerre_coefficients(p)) {
    partner = partner + lk.compose(-zp) * xk;
    xk = xk * (z - zp);
  }
  Polynomial product = lemma_lhs(p) * partner;
  const Polynomial expected = Polynomial::constant(F, F.one()) - z.pow(std::uint64_t{p} * (p - 1));
  const bool ok = product == expected;
  return ProductIdentityReport{p, ok, std::move(product)};
}

IdentityReport truncated_exp_congruence_check(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const QuotientRing<Fq> Q(F, p, F.zero(), F.zero());
  const auto E = truncated_exp(p);
  const auto X = Q.x(), Y = Q.y();
  const auto lhs = Q.mul(eval_prime_poly(Q, E, X), eval_prime_poly(Q, E, Y));
  auto corr = Q.one();
  for (unsigned i = 1; i < p; ++i) corr = Q.add(corr, Q.monomial(closed_form_ci(p, i), i, p - i));
  const auto rhs = Q.mul(eval_prime_poly(Q, E, Q.add(X, Y)), corr);
  IdentityReport r{"truncated_exp", p, Q.equal(lhs, rhs), std::nullopt};
  if (!r.passed) {
    MultiPoly diff(F);
    const auto d = Q.sub(lhs, rhs);
    for (unsigned i = 0; i < p; ++i) {
      for (unsigned j = 0; j < p; ++j) {
        Exponents e{};
        e[static_cast<std::size_t>(Var::X)] = static_cast<std::uint16_t>(i);
        e[static_cast<std::size_t>(Var::Y)] = static_cast<std::uint16_t>(j);
        diff.add_term(e, Q.coeff(d, i, j));
      }
    }
    r.difference = diff;
  }
  return r;
}

IdentityReport strade_operator_form_check(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const MultiPoly a = var(F, Var::Alpha), X = var(F, Var::X);
  MultiPoly sum(F);
  for (unsigned i = 0; i < p; ++i) {
    MultiPoly prod = cst(F, 1);
    for (unsigned k = i + 1; k < p; ++k) prod = prod * (a + cst(F, k));
    sum += prod * X.pow(i);
  }
  return compare("operator_form", p, -sum, laguerre_symbolic(p));
}

bool CoefficientTable::vanishing_holds() const {
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      if ((i + j) % p != 0 && at(i, j).code != 0) return false;
    }
  }
  return true;
}

bool is_admissible(const Fq& F, FqElement a, FqElement b) {
  const FqElement s = F.add(a, b);
  return s.code == 0 || F.pow(s, F.characteristic() - 1) != F.one();
}

namespace {

struct PointProducts {
  QuotientRing<Fq> Q;
  QuotientRing<Fq>::Element lx, ly, ls;
};

PointProducts point_products(const Fq& F, FqElement a, FqElement b) {
  const unsigned p = F.characteristic();
  QuotientRing<Fq> Q(F, p, F.sub(F.pow(a, p), a), F.sub(F.pow(b, p), b));
  auto lx = laguerre_eval(Q, p, Q.lift(a), Q.x());
  auto ly = laguerre_eval(Q, p, Q.lift(b), Q.y());
  auto ls = laguerre_eval(Q, p, Q.lift(F.add(a, b)), Q.add(Q.x(), Q.y()));
  return PointProducts{std::move(Q), std::move(lx), std::move(ly), std::move(ls)};
}

}  // namespace

CoefficientTable c_coefficients(const Fq& F, FqElement a, FqElement b) {
  auto pp = point_products(F, a, b);
  const auto w = try_inverse(pp.Q, pp.ls);
  if (!w) throw HypothesisError("L^{(a+b)}(X+Y) is not invertible in the quotient ring");
  auto t = pp.Q.mul(pp.Q.mul(pp.lx, pp.ly), *w);
  return CoefficientTable{F.characteristic(), F, a, b, std::move(t.c)};
}

CoefficientTable c_coefficients_lemma_route(const Fq& F, FqElement a, FqElement b) {
  if (!is_admissible(F, a, b)) throw HypothesisError("(a+b)^{p-1} = 1");
  const unsigned p = F.characteristic();
  auto pp = point_products(F, a, b);
  const FqElement denom = lemma_product_eval(F, p, F.add(a, b));
  auto num = pp.Q.mul(pp.Q.mul(pp.lx, pp.ly), ring_pow(pp.Q, pp.ls, p - 1));
  auto t = pp.Q.scale(F.inv(denom), num);
  return CoefficientTable{p, F, a, b, std::move(t.c)};
}

bool reconstructs(const CoefficientTable& table) {
  auto pp = point_products(table.field, table.a, table.b);
  const QuotientRing<Fq>::Element t{table.c};
  return pp.Q.equal(pp.Q.mul(pp.ls, t), pp.Q.mul(pp.lx, pp.ly));
}

FqElement closed_form_ci(unsigned p, unsigned i) {
  const Fq F = Fq::prime(p);
  const FqElement inv = inverses(p)[i];
  return i % 2 ? F.neg(inv) : inv;
}

bool SymbolicTableReport::all_polynomial() const {
  for (const auto& e : entries) {
    for (unsigned x : e.denominator_exponents) {
      if (x) return false;
    }
  }
  return true;
}

SymbolicTableReport symbolic_coefficient_tables(unsigned p) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  const MultiPolyRing R(F);
  const MultiPoly a = var(F, Var::Alpha), b = var(F, Var::Beta), s = a + b;
  const QuotientRing<MultiPolyRing> Q(R, p, a.pow(p) - a, b.pow(p) - b);
  const auto lx = laguerre_eval(Q, p, Q.lift(a), Q.x());
  const auto ly = laguerre_eval(Q, p, Q.lift(b), Q.y());
  const auto ls = laguerre_eval(Q, p, Q.lift(s), Q.add(Q.x(), Q.y()));
  const MultiPoly P = lemma_product_eval(R, p, s);
  const auto prod = Q.mul(lx, ly);
  const auto num = Q.mul(prod, ring_pow(Q, ls, p - 1));

  SymbolicTableReport rep;
  rep.p = p;
  rep.power_matches_product = Q.equal(ring_pow(Q, ls, p), Q.lift(P));
  rep.reconstructs = Q.equal(Q.mul(ls, num), Q.scale(P, prod));
  rep.vanishing_holds = true;
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      const MultiPoly& c = Q.coeff(num, i, j);
      if (c.is_zero()) continue;
      if ((i + j) % p != 0) rep.vanishing_holds = false;
      // P has (alpha + beta + k) to the power k; the entry's order of
      // vanishing along alpha + beta = -k cancels part of it.
      SymbolicTableReport::Entry e{i, j, {}};
      for (unsigned k = 1; k < p; ++k) {
        const MultiPoly t = var(F, Var::Gamma);
        const MultiPoly shifted = c.substitute(Var::Beta, t - cst(F, k) - a);
        unsigned order = k;
        for (const auto& [ex, coef] : shifted.terms()) {
          order = std::min<unsigned>(order, ex[static_cast<std::size_t>(Var::Gamma)]);
        }
        e.denominator_exponents.push_back(k - order);
      }
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

}  // namespace gsw
