#include "gsw/switching.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gsw/error.hpp"
#include "gsw/laguerre.hpp"
#include "gsw/parallel.hpp"
#include "gsw/quotient.hpp"
#include "gsw/ring.hpp"

namespace gsw {

FqElement PPolynomial::eval(FqElement x) const {
  FqElement acc = field.zero();
  for (const auto& [i, b] : terms) acc = field.add(acc, field.mul(b, field.frobenius(x, i)));
  return acc;
}

Matrix PPolynomial::eval(const Matrix& m) const {
  const std::uint32_t p = field.characteristic();
  Matrix acc(field, m.rows(), m.cols());
  Matrix power = m;
  unsigned at = 0;
  for (const auto& [i, b] : terms) {
    for (; at < i; ++at) power = power.pow(p);
    acc = acc + power.scaled(b);
  }
  return acc;
}

PPolynomial PPolynomial::base_change(const Embedding& e) const {
  PPolynomial out{e.target(), {}};
  for (const auto& [i, b] : terms) out.terms.emplace_back(i, e(b));
  return out;
}

std::string PPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " + ";
    const auto& [i, b] = terms[k];
    if (b.code != 1) os << "(" << field.to_string(b) << ")*";
    os << "T^(p^" << i << ")";
  }
  return os.str();
}

PPolynomial h_polynomial(const Fq& field, unsigned r) {
  PPolynomial h{field, {}};
  for (unsigned i = 1; i < r; ++i) h.terms.emplace_back(i, field.one());
  return h;
}

Relation Relation::base_change(const Embedding& e) const {
  Relation out = *this;
  out.field = e.target();
  for (auto& c : out.a) c = e(c);
  return out;
}

std::string Relation::to_string() const {
  if (degenerate) return "D^(p^" + std::to_string(r) + ") = 0";
  std::ostringstream os;
  os << "D^(p^" << n << ")";
  for (unsigned i = n; i-- > r;) {
    const FqElement c = coeff(i);
    if (c.code == 0) continue;
    os << " + (" << field.to_string(c) << ")*D^(p^" << i << ")";
  }
  os << " = 0";
  return os.str();
}

unsigned semisimple_exponent(const Matrix& D) {
  if (!D.is_square()) throw InvalidInput("semisimple_exponent of a non-square matrix");
  const std::uint32_t p = D.field().characteristic();
  Matrix M = D;
  for (unsigned r = 0; r <= 64; ++r) {
    if (is_semisimple(M)) return r;
    M = M.pow(p);
  }
  throw VerificationError("no semisimple p-power found");
}

namespace {

Matrix p_power_iterate(Matrix M, unsigned times) {
  const std::uint32_t p = M.field().characteristic();
  for (unsigned k = 0; k < times; ++k) M = M.pow(p);
  return M;
}

}  // namespace

Relation p_power_relation(const Matrix& D, unsigned r) {
  const Fq& F = D.field();
  const std::uint32_t p = F.characteristic();
  const Matrix Mr = p_power_iterate(D, r);
  if (!is_semisimple(Mr)) throw HypothesisError("D^(p^" + std::to_string(r) + ") is not semisimple");
  if (Mr.is_zero()) return Relation{F, r, r, {}, true};
  const std::size_t len = D.rows() * D.cols();
  std::vector<Vector> cols{Mr.entries()};
  Matrix next = Mr;
  for (unsigned n = r + 1; n <= r + D.rows() + 1; ++n) {
    next = next.pow(p);
    const auto sol = Matrix::from_columns(F, len, cols).solve(scale(F, F.neg(F.one()), next.entries()));
    if (sol) {
      if ((*sol)[0].code == 0) throw VerificationError("p-power relation has a_r = 0");
      return Relation{F, r, n, *sol, false};
    }
    cols.push_back(next.entries());
  }
  throw VerificationError("no p-power relation found");
}

Polynomial lambda_polynomial(const Relation& rel) {
  if (rel.degenerate) throw InvalidInput("degenerate relation has no lambda polynomial");
  const Fq& F = rel.field;
  const std::uint64_t p = F.characteristic();
  std::uint64_t top = 1;
  for (unsigned k = rel.r; k < rel.n; ++k) top *= p;
  std::vector<FqElement> c(top + 1, F.zero());
  c[0] = F.one();
  c[1] = F.one();
  std::uint64_t deg = top;
  for (unsigned k = rel.r; k < rel.n; ++k) {
    c[deg] = F.add(c[deg], F.frobenius(rel.coeff(k), rel.n - 1 - k));
    deg /= p;
  }
  return Polynomial(F, std::move(c));
}

GConstruction build_g(const Relation& rel, std::optional<FqElement> lambda) {
  if (rel.degenerate) return GConstruction{rel.field, PPolynomial{rel.field, {}}, std::nullopt, std::nullopt};
  Polynomial Lambda = lambda_polynomial(rel);
  Fq F = rel.field;
  Relation R = rel;
  FqElement lam;
  if (lambda) {
    lam = F.element(lambda->code);
    if (Lambda.eval(lam).code != 0) throw HypothesisError("lambda is not a root of the lambda polynomial");
  } else {
    const SplitResult split = roots_in_splitting_field(Lambda);
    if (split.roots.empty()) throw VerificationError("lambda polynomial has no roots");
    if (!(split.field == F)) {
      const Embedding e(F, split.field);
      R = rel.base_change(e);
      Lambda = e(Lambda);
      F = split.field;
    }
    lam = split.roots.front().root;
  }
  const FqElement lam_p = F.frobenius(lam);
  std::vector<FqElement> b(R.n - R.r, F.zero());
  b.back() = lam;
  for (unsigned h = R.n - 1; h-- > R.r;) {
    b[h - R.r] = F.pth_root(F.add(b[h + 1 - R.r], F.mul(lam_p, R.coeff(h + 1))));
  }
  if (F.sub(F.neg(F.one()), b.front()) != F.mul(lam_p, R.coeff(R.r))) {
    throw VerificationError("lambda does not satisfy -1 - b_r = lambda^p a_r");
  }
  PPolynomial g{F, {}};
  for (unsigned i = R.r; i < R.n; ++i) {
    if (b[i - R.r].code) g.terms.emplace_back(i, b[i - R.r]);
  }
  std::optional<Polynomial> lp;
  lp.emplace(Lambda);
  return GConstruction{F, std::move(g), lam, std::move(lp)};
}

bool verify_g(const PPolynomial& g, const Matrix& D, unsigned r) {
  const std::uint32_t p = D.field().characteristic();
  const Matrix G = g.eval(D);
  return G.pow(p) - G == p_power_iterate(D, r);
}

Matrix truncated_exp(const Matrix& M) {
  const Fq& F = M.field();
  const std::uint32_t p = F.characteristic();
  const auto& inv = inverse_factorials(p);
  Matrix acc(F, M.rows(), M.cols()), power = Matrix::identity(F, M.rows());
  for (unsigned k = 0; k < p; ++k) {
    acc = acc + power.scaled(F.from_int(inv[k].code));
    power = power * M;
  }
  return acc;
}

std::optional<unsigned> homogeneous_degree(const Grading& g, const Matrix& D) {
  for (unsigned d = 0; d < g.m; ++d) {
    bool ok = true;
    for (unsigned k = 0; k < g.m && ok; ++k) {
      const Subspace& target = g.parts[(k + d) % g.m];
      for (const auto& v : g.parts[k].basis()) {
        if (!target.contains(D.apply(v))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return d;
  }
  return std::nullopt;
}

bool SwitchResult::scalars_ok() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const SwitchBlock& b) { return b.scalar_ok; });
}

bool SwitchResult::ok() const {
  return g_verified && invertible && grading_ok && scalars_ok() && (!products.ran || products.passed);
}

namespace {

// Everything that has to move along when the working field grows.
struct Work {
  GradedAlgebra A;
  Grading grading;
  Matrix D;
  EigenDecomposition dec;

  const Fq& field() const { return dec.field; }

  void enlarge(const Fq& target, const std::string& reason) {
    if (target == field()) return;
    const Embedding e(field(), target);
    A = A.base_change(e);
    grading = base_change(grading, e);
    D = D.base_change(e);
    dec = dec.base_change(e);
    dec.log.back() += " (" + reason + ")";
  }
};

Work start(const GradedAlgebra& A, const Grading& grading, const Matrix& D) {
  EigenDecomposition dec = generalized_eigenspaces(D);
  if (dec.field == A.field()) return Work{A, grading, D, std::move(dec)};
  const Embedding e(A.field(), dec.field);
  return Work{A.base_change(e), base_change(grading, e), D.base_change(e), std::move(dec)};
}

unsigned check_hypotheses(const GradedAlgebra& A, const Grading& grading, const Matrix& D) {
  if (!D.is_square() || D.rows() != A.dim()) throw InvalidInput("D has the wrong dimension");
  if (!(D.field() == A.field())) throw InvalidInput("D and A are over different fields");
  if (grading.parts.size() != grading.m || !is_direct_sum_decomposition(grading.parts)) {
    throw InvalidInput("the grading components do not decompose A");
  }
  if (auto bad = leibniz_failure(A, D)) {
    throw HypothesisError("D is not a derivation: Leibniz rule fails on basis pair (" + std::to_string(bad->first) +
                          ", " + std::to_string(bad->second) + ")");
  }
  const auto d = homogeneous_degree(grading, D);
  if (!d) throw HypothesisError("D is not a graded derivation for the given grading");
  const unsigned long p = A.field().characteristic();
  if ((p * *d) % grading.m != 0) {
    throw HypothesisError("m = " + std::to_string(grading.m) + " does not divide p*d with d = " + std::to_string(*d));
  }
  return *d;
}

struct PairOutcome {
  bool ring_ok = true, vanishing = true, passed = true;
  std::size_t pairs = 0;
  std::optional<std::string> failure;
};

// L_D x . L_D y == L_D(sum_{ij} c'_{ij} D^i x . D^j y) for x in A^{(rho)},
// y in A^{(sigma)}, with the c'_{ij} computed in F[U,V]/(mu_rho(U), mu_sigma(V)),
// U and V standing for D^p on the two factors.
PairOutcome check_block_pair(const SwitchResult& res, const SwitchBlock& s, const SwitchBlock& t) {
  PairOutcome out;
  const Fq& F = res.field;
  const std::uint32_t p = F.characteristic();
  const Matrix& D = res.D;
  const GradedAlgebra& A = res.algebra;

  const TensorQuotient B(minpoly(s.space.restrict(D).pow(p)), minpoly(t.space.restrict(D).pow(p)));
  auto shifted = [&](FqElement g_value, const Vector& w) {
    Vector acc = B.scalar(g_value);
    std::uint64_t e = 1;
    for (unsigned i = 1; i < res.r; ++i, e *= p) acc = B.sub(acc, ring_pow(B, w, e));
    return acc;
  };
  const Vector alpha0 = shifted(s.g_rho, B.u());
  const Vector beta0 = shifted(t.g_rho, B.v());
  const Vector a_star = B.sub(ring_pow(B, alpha0, p), alpha0);
  const Vector b_star = B.sub(ring_pow(B, beta0, p), beta0);
  const QuotientRing<TensorQuotient> Q(B, p, a_star, b_star);

  const auto X = Q.x(), Y = Q.y();
  const auto alpha = Q.lift(alpha0), beta = Q.lift(beta0);
  const auto LX = laguerre_eval(Q, p, alpha, X);
  const auto LY = laguerre_eval(Q, p, beta, Y);
  const auto LS = laguerre_eval(Q, p, Q.add(alpha, beta), Q.add(X, Y));
  const Vector P = lemma_product_eval(B, p, B.add(alpha0, beta0));
  const auto Pinv = B.try_inverse(P);
  if (!Pinv) {
    out.ring_ok = out.passed = false;
    out.failure = "P(alpha + beta) is not invertible";
    return out;
  }
  const auto LXY = Q.mul(LX, LY);
  const auto C = Q.mul(Q.mul(LXY, ring_pow(Q, LS, p - 1)), Q.lift(*Pinv));
  out.ring_ok = B.equal(a_star, B.u()) && B.equal(b_star, B.v()) && Q.equal(ring_pow(Q, LS, p), Q.lift(P)) &&
                Q.equal(Q.mul(LS, C), LXY);
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      if ((i + j) % p != 0 && !B.is_zero(Q.coeff(C, i, j))) out.vanishing = false;
    }
  }
  if (!out.ring_ok || !out.vanishing) {
    out.passed = false;
    out.failure = out.ring_ok ? "c'_ij does not vanish off p | i+j" : "coefficient ring identity failed";
    return out;
  }

  // c_0 on (i, j) = (0, 0) and c_i on (i, p - i).
  std::vector<std::pair<unsigned, unsigned>> slots{{0, 0}};
  for (unsigned i = 1; i < p; ++i) slots.emplace_back(i, p - i);
  const std::size_t du = B.dim_u(), dv = B.dim_v();

  auto orbit = [&](const Vector& v, std::size_t len) {
    std::vector<Vector> o{v};
    for (std::size_t e = 1; e < len; ++e) o.push_back(D.apply(o.back()));
    return o;
  };
  for (const auto& x : s.space.basis()) {
    const auto Dx = orbit(x, p * du);
    const Vector Lx = res.LD.apply(x);
    for (const auto& y : t.space.basis()) {
      const auto Dy = orbit(y, p * dv);
      Vector inner = zero_vector(F, A.dim());
      for (const auto& [i, j] : slots) {
        const Vector& c = Q.coeff(C, i, j);
        for (std::size_t a = 0; a < du; ++a) {
          Vector right = zero_vector(F, A.dim());
          bool any = false;
          for (std::size_t b = 0; b < dv; ++b) {
            const FqElement cab = B.coeff(c, a, b);
            if (cab.code == 0) continue;
            right = add(F, right, scale(F, cab, Dy[p * b + j]));
            any = true;
          }
          if (any) inner = add(F, inner, A.multiply(Dx[p * a + i], right));
        }
      }
      ++out.pairs;
      if (A.multiply(Lx, res.LD.apply(y)) != res.LD.apply(inner)) {
        out.passed = false;
        if (!out.failure) out.failure = "product identity fails for eigenvalues (" + F.to_string(s.rho) + ") and (" + F.to_string(t.rho) + ")";
      }
    }
  }
  return out;
}

ProductIdentityCheck check_products(const SwitchResult& res, unsigned jobs) {
  const std::size_t nb = res.blocks.size();
  std::vector<PairOutcome> outcomes(nb * nb);
  parallel_for(nb * nb, jobs, [&](std::size_t k) {
    outcomes[k] = check_block_pair(res, res.blocks[k / nb], res.blocks[k % nb]);
  });
  ProductIdentityCheck out;
  out.ran = true;
  out.passed = out.coefficient_ring_ok = out.vanishing = true;
  for (const auto& o : outcomes) {
    out.coefficient_ring_ok = out.coefficient_ring_ok && o.ring_ok;
    out.vanishing = out.vanishing && o.vanishing;
    out.passed = out.passed && o.passed;
    out.pairs_checked += o.pairs;
    if (!out.failure && o.failure) out.failure = o.failure;
  }
  return out;
}

// Fills blocks, LD and the grading verdicts from per-eigenvalue g(rho).
void assemble(SwitchResult& res, const Work& w, const SwitchOptions& opt) {
  const Fq& F = res.field;
  const std::uint32_t p = F.characteristic();
  const std::size_t n = res.algebra.dim();
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < res.r; ++i) pr *= p;

  std::vector<Vector> basis;
  Matrix blockdiag(F, n, n);
  std::size_t offset = 0;
  for (const auto& es : w.dec.spaces) {
    const Matrix Dr = es.space.restrict(w.D);
    const std::size_t k = Dr.rows();
    const MatrixAlgebra ring(F, k);
    const FqElement g_rho = res.g.eval(es.eigenvalue);
    const Matrix alpha = Matrix::scalar(F, k, g_rho) - res.h.eval(Dr);
    const Matrix M = laguerre_eval(ring, p, alpha, Dr);

    const FqElement gp = F.frobenius(g_rho);
    SwitchBlock blk{es.eigenvalue, es.space, g_rho, M, M.pow(pr).as_scalar(),
                    laguerre_at(F, gp).eval(F.sub(gp, g_rho)), lemma_product_eval(F, p, g_rho), false};
    blk.scalar_ok = blk.power_scalar && *blk.power_scalar == blk.laguerre_scalar &&
                    blk.laguerre_scalar == blk.product_scalar && blk.laguerre_scalar.code != 0;
    res.blocks.push_back(std::move(blk));

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) blockdiag(offset + i, offset + j) = M(i, j);
    }
    for (const auto& v : es.space.basis()) basis.push_back(v);
    offset += k;
  }
  const Matrix change = Matrix::from_columns(F, n, basis);
  const auto change_inv = change.inverse();
  if (!change_inv) throw VerificationError("generalized eigenspaces do not span");
  res.LD = change * blockdiag * *change_inv;
  res.invertible = res.LD.inverse().has_value();
  res.old_grading = w.grading;
  res.new_grading = map_grading(w.grading, res.LD);
  res.grading_ok = res.invertible && is_grading(res.algebra, res.new_grading);
  res.log = w.dec.log;
  if (opt.check_products) res.products = check_products(res, opt.jobs);
}

SwitchResult make_result(const char* method, const Work& w, unsigned degree, unsigned r_reported, unsigned r,
                         PPolynomial g) {
  return SwitchResult{.method = method,
                      .field = w.field(),
                      .algebra = w.A,
                      .D = w.D,
                      .r_reported = r_reported,
                      .r = r,
                      .degree = degree,
                      .relation = {},
                      .g = std::move(g),
                      .h = h_polynomial(w.field(), r),
                      .lambda = {},
                      .lambda_poly = {},
                      .g_verified = false,
                      .blocks = {},
                      .LD = Matrix(w.field(), w.A.dim(), w.A.dim()),
                      .invertible = false,
                      .old_grading = {},
                      .new_grading = {},
                      .grading_ok = false,
                      .products = {},
                      .log = {}};
}

}  // namespace

SwitchResult build_LD(const GradedAlgebra& A, const Grading& grading, const Matrix& D, const SwitchOptions& opt) {
  const unsigned d = check_hypotheses(A, grading, D);
  const unsigned r_reported = semisimple_exponent(D);
  const unsigned r = std::max(opt.r.value_or(r_reported), 1u);
  Relation rel = p_power_relation(D, r);

  Work w = start(A, grading, D);
  std::optional<FqElement> lambda = opt.lambda;
  if (!(w.field() == A.field())) {
    const Embedding e(A.field(), w.field());
    rel = rel.base_change(e);
    if (lambda) lambda = e(*lambda);
  }
  GConstruction gc = build_g(rel, lambda);
  w.enlarge(gc.field, "lambda");

  SwitchResult res = make_result("general", w, d, r_reported, r, gc.g);
  res.relation = rel;
  res.lambda = gc.lambda;
  res.lambda_poly = gc.lambda_poly;
  res.g_verified = verify_g(res.g, res.D, r);
  assemble(res, w, opt);
  return res;
}

SwitchResult build_LD(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt) {
  return build_LD(A, A.grading(), D, opt);
}

SwitchResult special_LD(const GradedAlgebra& A, const Grading& grading, const Matrix& D, const SwitchOptions& opt) {
  const unsigned d = check_hypotheses(A, grading, D);
  const std::uint32_t p = A.field().characteristic();
  const Matrix Dp = D.pow(p);
  if (!(Dp.pow(p) == Dp)) throw HypothesisError("D^(p^2) != D^p");
  const unsigned r_reported = semisimple_exponent(D);

  Work w = start(A, grading, D);
  const ArtinSchreierRoot as = artin_schreier_root(w.field(), w.field().one());
  w.enlarge(as.field, "gamma");

  SwitchResult res = make_result("special", w, d, r_reported, 1, PPolynomial{w.field(), {{1, as.root}}});
  res.lambda = as.root;
  res.g_verified = verify_g(res.g, res.D, 1);
  assemble(res, w, opt);
  return res;
}

SwitchResult special_LD(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt) {
  return special_LD(A, A.grading(), D, opt);
}

SwitchResult switch_grading(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt) {
  return build_LD(A, A.grading(), D, opt);
}

}  // namespace gsw
