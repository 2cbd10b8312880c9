#include "gsw/toral.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gsw/eigen.hpp"
#include "gsw/error.hpp"
#include "gsw/laguerre.hpp"

namespace gsw {

RestrictednessReport check_restricted(const GradedAlgebra& L) {
  RestrictednessReport r;
  r.anticommutative = L.is_anticommutative();
  r.jacobi = L.satisfies_jacobi();
  r.restricted = true;
  const std::uint32_t p = L.field().characteristic();
  for (const auto& [i, v] : L.pmap()) {
    if (!(L.ad(i).pow(p) == L.left_multiplication(v))) {
      r.restricted = false;
      r.failing_index = i;
      break;
    }
  }
  return r;
}

Vector pmap(const GradedAlgebra& L, const Vector& x) {
  const Fq& F = L.field();
  const std::size_t n = L.dim();
  if (x.size() != n) throw InvalidInput("element has the wrong dimension");
  std::optional<std::size_t> support;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].code != 0) {
      support = i;
      ++nonzero;
    }
  }
  if (nonzero == 0) return zero_vector(F, n);
  if (nonzero == 1) {
    auto it = L.pmap().find(*support);
    if (it != L.pmap().end()) return scale(F, F.frobenius(x[*support]), it->second);
  }
  // ad y = (ad x)^p determines y when the centre is trivial.
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(L.ad(i).entries());
  const Matrix ad_map = Matrix::from_columns(F, n * n, cols);
  if (ad_map.rank() != n) throw InvalidInput("p-map of a non-basis element in an algebra with nonzero centre");
  const auto y = ad_map.solve(L.left_multiplication(x).pow(F.characteristic()).entries());
  if (!y) throw HypothesisError("(ad x)^p is not inner");
  return *y;
}

Vector pmap_iterate(const GradedAlgebra& L, const Vector& x, unsigned t) {
  Vector y = x;
  for (unsigned k = 0; k < t; ++k) y = pmap(L, y);
  return y;
}

Vector q_of_x(const GradedAlgebra& L, const Vector& x, unsigned r) {
  Vector acc = zero_vector(L.field(), L.dim());
  Vector y = x;
  for (unsigned t = 1; t < r; ++t) {
    y = pmap(L, y);
    acc = add(L.field(), acc, y);
  }
  return acc;
}

namespace {

bool commuting(const GradedAlgebra& L, const std::vector<Vector>& T) {
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      if (!is_zero(L.multiply(T[i], T[j]))) return false;
    }
  }
  return true;
}

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

bool is_torus(const GradedAlgebra& L, const std::vector<Vector>& T) {
  if (!commuting(L, T)) return false;
  return std::all_of(T.begin(), T.end(), [&](const Vector& t) { return is_semisimple(L.left_multiplication(t)); });
}

const Root* RootDecomposition::root_of(const Vector& x) const {
  if (is_zero(x)) return nullptr;
  for (const auto& r : roots) {
    if (r.space.contains(x)) return &r;
  }
  return nullptr;
}

FqElement RootDecomposition::evaluate(const Vector& gamma, const Vector& t) const {
  if (torus.empty()) return field.zero();
  const auto c = Matrix::from_columns(field, algebra.dim(), torus).solve(t);
  if (!c) throw InvalidInput("element is not in the torus");
  FqElement acc = field.zero();
  for (std::size_t k = 0; k < torus.size(); ++k) acc = field.add(acc, field.mul((*c)[k], gamma[k]));
  return acc;
}

RootDecomposition root_decomposition(const GradedAlgebra& L, const std::vector<Vector>& T) {
  const Fq& F0 = L.field();
  const std::size_t n = L.dim();
  if (Subspace::span(F0, n, T).dim() != T.size()) throw InvalidInput("torus elements are linearly dependent");
  if (!commuting(L, T)) throw HypothesisError("torus elements do not commute");

  std::uint64_t k = 1;
  for (const auto& t : T) k = lcm64(k, splitting_degree(charpoly(L.left_multiplication(t))));
  RootDecomposition out{F0, L, T, {}, {}};
  if (k > 1) {
    const Fq K = Fq::extension(F0.characteristic(), static_cast<unsigned>(F0.degree() * k));
    const Embedding e(F0, K);
    out.field = K;
    out.algebra = L.base_change(e);
    for (auto& t : out.torus) t = base_change(t, e);
    out.log.push_back(field_name(F0) + " -> " + field_name(K) + " (roots)");
  }
  const Fq& K = out.field;

  out.roots.push_back(Root{{}, Subspace::whole(K, n)});
  for (const auto& t : out.torus) {
    const Matrix A = out.algebra.left_multiplication(t);
    std::vector<Root> next;
    for (const auto& part : out.roots) {
      const EigenDecomposition dec = generalized_eigenspaces(part.space.restrict(A));
      if (!(dec.field == K)) throw VerificationError("root decomposition left the splitting field");
      for (const auto& es : dec.spaces) {
        std::vector<Vector> vs;
        for (const auto& coords : es.space.basis()) {
          Vector v = zero_vector(K, n);
          for (std::size_t i = 0; i < coords.size(); ++i) v = add(K, v, scale(K, coords[i], part.space.basis()[i]));
          if (A.apply(v) != scale(K, es.eigenvalue, v)) throw HypothesisError("ad t is not semisimple on the torus");
          vs.push_back(std::move(v));
        }
        Vector values = part.values;
        values.push_back(es.eigenvalue);
        next.push_back(Root{std::move(values), Subspace::span(K, n, vs)});
      }
    }
    out.roots = std::move(next);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) { return a.values < b.values; });
  return out;
}

TxConstruction t_x_construction(const RootDecomposition& dec, const Vector& x, unsigned r) {
  const Fq& K = dec.field;
  const GradedAlgebra& L = dec.algebra;
  const Root* root = dec.root_of(x);
  if (!root) throw HypothesisError("x is not a root vector for T");
  if (std::all_of(root->values.begin(), root->values.end(), [](FqElement v) { return v.code == 0; })) {
    throw HypothesisError("x lies in the zero root space (beta = 0)");
  }
  TxConstruction out{K, root->values, {}, {}, false};
  Vector y = x, sum = zero_vector(K, L.dim());
  for (unsigned k = 0; k < r; ++k) {
    out.powers.push_back(y);
    sum = add(K, sum, y);
    y = pmap(L, y);
  }
  if (!Subspace::span(K, L.dim(), dec.torus).contains(y)) throw HypothesisError("x^[p]^r is not in T");
  for (std::size_t k = 0; k < dec.torus.size(); ++k) {
    out.Tx.push_back(sub(K, dec.torus[k], scale(K, out.beta[k], sum)));
  }
  out.is_torus = is_torus(L, out.Tx);
  return out;
}

Refinement refine_grading(const RootDecomposition& dec, const Vector& beta, const Vector& x) {
  const Fq& K = dec.field;
  const GradedAlgebra& L = dec.algebra;
  const std::uint32_t p = K.characteristic();
  const std::size_t rank = dec.torus.size();
  for (const auto& t : dec.torus) {
    if (pmap(L, t) != t) throw HypothesisError("the torus basis is not toral");
  }
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    total *= p;
    if (total > 1'000'000) throw InvalidInput("torus too large for the toral element search");
  }
  auto combine = [&](const Vector& c) {
    Vector t = zero_vector(K, L.dim());
    for (std::size_t k = 0; k < rank; ++k) t = add(K, t, scale(K, c[k], dec.torus[k]));
    return t;
  };
  auto value = [&](const Vector& gamma, const Vector& c) {
    FqElement acc = K.zero();
    for (std::size_t k = 0; k < rank; ++k) acc = K.add(acc, K.mul(c[k], gamma[k]));
    return acc;
  };

  std::optional<Vector> t1c;
  for (std::uint64_t code = 0; code < total && !t1c; ++code) {
    Vector c(rank);
    std::uint64_t rest = code;
    for (std::size_t k = 0; k < rank; ++k, rest /= p) c[k] = K.from_int(static_cast<std::int64_t>(rest % p));
    if (value(beta, c) == K.one()) t1c = c;
  }
  if (!t1c) throw HypothesisError("no toral t1 with beta(t1) = 1");

  Refinement out{combine(*t1c), {}, Grading{p, {}}, {}, true};
  const Matrix beta_row = Matrix::from_rows(K, rank, {beta});
  const std::vector<Vector> kernel = beta_row.nullspace();
  for (const auto& c : kernel) out.T0.push_back(combine(c));

  std::vector<std::vector<Vector>> coarse(p);
  std::map<Vector, std::vector<Vector>> fine;
  for (const auto& root : dec.roots) {
    const FqElement k = value(root.values, *t1c);
    if (!K.in_prime_field(k)) throw VerificationError("t1 has an eigenvalue outside F_p");
    auto& bucket = coarse[k.code];
    bucket.insert(bucket.end(), root.space.basis().begin(), root.space.basis().end());
    Vector gamma0;
    for (const auto& c : kernel) gamma0.push_back(value(root.values, c));
    auto& fb = fine[gamma0];
    fb.insert(fb.end(), root.space.basis().begin(), root.space.basis().end());
  }
  for (const auto& vs : coarse) out.coarse.parts.push_back(Subspace::span(K, L.dim(), vs));
  for (const auto& [g0, vs] : fine) out.by_gamma0.push_back(Refinement::Part{g0, Subspace::span(K, L.dim(), vs)});
  for (const auto& s : out.T0) out.t0_kills_x = out.t0_kills_x && is_zero(L.multiply(s, x));
  return out;
}

bool ToralComparison::ok() const {
  return tx.is_torus && switched.ok() && h_is_ad_q && operator_form && strade_symbolic && images_match &&
         gamma0_invariant && refined_grading && refinement.t0_kills_x;
}

namespace {

// -sum_i (prod_{k=i+1}^{p-1} (alpha + k)) D^i.
Matrix operator_form(const Matrix& alpha, const Matrix& D) {
  const Fq& F = D.field();
  const std::uint32_t p = F.characteristic();
  const std::size_t n = D.rows();
  Matrix acc(F, n, n);
  Matrix prod = Matrix::identity(F, n);  // prod_{k=i+1}^{p-1}, built from the top
  std::vector<Matrix> prods(p, prod);
  for (std::uint32_t i = p - 1; i-- > 0;) {
    prod = prod * (alpha + Matrix::scalar(F, n, F.from_int(i + 1)));
    prods[i] = prod;
  }
  Matrix power = Matrix::identity(F, n);
  for (std::uint32_t i = 0; i < p; ++i) {
    acc = acc - prods[i] * power;
    power = power * D;
  }
  return acc;
}

std::vector<Subspace> sorted(std::vector<Subspace> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ToralComparison compare_switch_to_toral(const GradedAlgebra& L, const std::vector<Vector>& T, const Vector& x,
                                        unsigned r, const SwitchOptions& opt) {
  if (r == 0) throw InvalidInput("toral switching needs r >= 1");
  const RootDecomposition dec = root_decomposition(L, T);
  const Fq& K0 = dec.field;
  const Vector x0 = K0 == L.field() ? x : base_change(x, Embedding(L.field(), K0));
  TxConstruction tx = t_x_construction(dec, x0, r);
  Refinement ref = refine_grading(dec, tx.beta, x0);

  SwitchOptions o = opt;
  o.r = r;
  if (o.lambda && !(K0 == L.field())) o.lambda = Embedding(L.field(), K0)(*o.lambda);
  SwitchResult sw = build_LD(dec.algebra, ref.coarse, dec.algebra.left_multiplication(x0), o);
  const Fq K1 = sw.field;
  const std::optional<Embedding> e01 = K1 == K0 ? std::nullopt : std::optional<Embedding>(Embedding(K0, K1));
  auto up = [&](const Subspace& s) { return e01 ? s.base_change(*e01) : s; };
  auto upv = [&](const Vector& v) { return e01 ? base_change(v, *e01) : v; };

  ToralComparison out{K1, tx, ref, sw, false, false, false, {}, {}, false, false, false, dec.log, std::nullopt};
  const GradedAlgebra& A = sw.algebra;
  const std::uint32_t p = K1.characteristic();
  out.log.insert(out.log.end(), sw.log.begin(), sw.log.end());

  out.h_is_ad_q = sw.h.eval(sw.D) == A.left_multiplication(q_of_x(A, upv(x0), r));
  out.operator_form = true;
  for (const auto& b : sw.blocks) {
    const Matrix Dr = b.space.restrict(sw.D);
    const Matrix alpha = Matrix::scalar(K1, Dr.rows(), b.g_rho) - sw.h.eval(Dr);
    if (!(operator_form(alpha, Dr) == b.map)) out.operator_form = false;
  }
  out.strade_symbolic = strade_operator_form_check(p).passed;

  for (const auto& root : dec.roots) out.images.push_back(up(root.space).image(sw.LD));
  std::vector<Vector> Tx1;
  for (const auto& t : tx.Tx) Tx1.push_back(upv(t));
  const RootDecomposition txdec = root_decomposition(A, Tx1);
  out.log.insert(out.log.end(), txdec.log.begin(), txdec.log.end());
  if (!(txdec.field == K1)) {
    const Embedding e12(K1, txdec.field);
    for (auto& s : out.images) s = s.base_change(e12);
    out.field = txdec.field;
  }
  for (const auto& root : txdec.roots) out.tx_roots.push_back(root.space);
  out.images_match = sorted(out.images) == sorted(out.tx_roots);
  if (!out.images_match) out.failure = "L_D images of root spaces differ from the root spaces of T_x";

  out.gamma0_invariant = true;
  for (const auto& part : ref.by_gamma0) {
    const Subspace s = up(part.space);
    if (!(s.image(sw.LD) == s)) {
      out.gamma0_invariant = false;
      if (!out.failure) out.failure = "L_D does not preserve an L_{gamma_0}";
    }
  }
  std::vector<std::pair<Vector, Subspace>> refined;
  for (std::uint32_t k = 0; k < p; ++k) {
    for (const auto& part : ref.by_gamma0) {
      const Subspace cap = up(ref.coarse.parts[k]).intersect(up(part.space));
      if (cap.dim() == 0) continue;
      Vector label{K1.from_int(k)};
      for (const auto& v : part.gamma0) label.push_back(upv({v})[0]);
      refined.emplace_back(std::move(label), cap.image(sw.LD));
    }
  }
  out.refined_grading = is_labeled_grading(A, refined);
  if (!out.refined_grading && !out.failure) out.failure = "refined sum is not a grading";
  return out;
}

}  // namespace gsw
