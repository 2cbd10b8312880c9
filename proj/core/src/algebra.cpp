#include "gsw/algebra.hpp"

#include "gsw/error.hpp"

namespace gsw {

namespace {

unsigned mod(long v, unsigned m) {
  const long r = v % static_cast<long>(m);
  return static_cast<unsigned>(r < 0 ? r + static_cast<long>(m) : r);
}

// binom(n, k) mod p by Lucas' theorem.
unsigned lucas_binomial(unsigned n, unsigned k, unsigned p) {
  unsigned long result = 1;
  while (n || k) {
    const unsigned a = n % p, b = k % p;
    if (b > a) return 0;
    unsigned long c = 1;
    for (unsigned t = 0; t < b; ++t) c = c * (a - t) / (t + 1);
    result = result * (c % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<unsigned>(result);
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

GradedAlgebra::GradedAlgebra(Fq field, std::size_t dim, unsigned m, std::vector<unsigned> degrees,
                             const std::vector<StructureConstant>& constants, std::string name)
    : field_(std::move(field)), dim_(dim), m_(m), deg_(std::move(degrees)), table_(dim * dim), name_(std::move(name)) {
  if (m_ == 0) throw InvalidInput("grading modulus must be positive");
  if (deg_.size() != dim_) throw InvalidInput("degree list length differs from dimension");
  for (auto& d : deg_) d %= m_;
  std::vector<std::map<std::size_t, FqElement>> acc(dim_ * dim_);
  for (const auto& sc : constants) {
    if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_) throw InvalidInput("structure constant index out of range");
    auto& slot = acc[sc.i * dim_ + sc.j][sc.k];
    slot = field_.add(slot, sc.c);
  }
  for (std::size_t t = 0; t < acc.size(); ++t) {
    for (const auto& [k, c] : acc[t]) {
      if (c.code != 0) table_[t].emplace_back(k, c);
    }
  }
}

std::vector<StructureConstant> GradedAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : basis_product(i, j)) out.push_back({i, j, k, c});
    }
  }
  return out;
}

Vector GradedAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].code == 0) continue;
      const FqElement xy = field_.mul(x[i], y[j]);
      for (const auto& [k, c] : basis_product(i, j)) out[k] = field_.add(out[k], field_.mul(xy, c));
    }
  }
  return out;
}

Matrix GradedAlgebra::left_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  cols.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(x, basis_vector(j)));
  return Matrix::from_columns(field_, dim_, cols);
}

Matrix GradedAlgebra::ad(std::size_t i) const {
  if (i >= dim_) throw InvalidInput("basis index out of range");
  return left_multiplication(basis_vector(i));
}

Grading GradedAlgebra::grading() const {
  std::vector<std::vector<Vector>> gens(m_);
  for (std::size_t i = 0; i < dim_; ++i) gens[deg_[i]].push_back(basis_vector(i));
  Grading g{m_, {}};
  for (unsigned k = 0; k < m_; ++k) g.parts.push_back(Subspace::span(field_, dim_, gens[k]));
  return g;
}

bool GradedAlgebra::grading_law_holds() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : basis_product(i, j)) {
        if (deg_[k] != (deg_[i] + deg_[j]) % m_) return false;
      }
    }
  }
  return true;
}

bool GradedAlgebra::is_anticommutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const Vector a = multiply(basis_vector(i), basis_vector(j));
      const Vector b = multiply(basis_vector(j), basis_vector(i));
      if (!is_zero(add(field_, a, b))) return false;
    }
  }
  return true;
}

bool GradedAlgebra::satisfies_jacobi() const {
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      const Vector ab = multiply(basis_vector(a), basis_vector(b));
      for (std::size_t c = 0; c < dim_; ++c) {
        const Vector bc = multiply(basis_vector(b), basis_vector(c));
        const Vector ca = multiply(basis_vector(c), basis_vector(a));
        Vector s = multiply(basis_vector(a), bc);
        s = add(field_, s, multiply(basis_vector(b), ca));
        s = add(field_, s, multiply(basis_vector(c), ab));
        if (!is_zero(s)) return false;
      }
    }
  }
  return true;
}

void GradedAlgebra::set_pmap(std::size_t i, Vector value) {
  if (i >= dim_ || value.size() != dim_) throw InvalidInput("p-map entry has wrong shape");
  pmap_[i] = std::move(value);
}

GradedAlgebra GradedAlgebra::base_change(const Embedding& e) const {
  if (!(e.source() == field_)) throw InvalidInput("embedding source differs from algebra field");
  std::vector<StructureConstant> sc = structure_constants();
  for (auto& x : sc) x.c = e(x.c);
  GradedAlgebra out(e.target(), dim_, m_, deg_, sc, name_);
  for (const auto& [i, v] : pmap_) out.pmap_[i] = gsw::base_change(v, e);
  return out;
}

GradedAlgebra witt(unsigned p) {
  require_prime(p);
  if (p < 3) throw InvalidInput("witt algebra needs p >= 3");
  const Fq F = Fq::prime(p);
  std::vector<StructureConstant> sc;
  std::vector<unsigned> deg;
  const long top = static_cast<long>(p) - 2;
  for (long a = -1; a <= top; ++a) {
    deg.push_back(mod(a, p));
    for (long b = -1; b <= top; ++b) {
      const long s = a + b;
      if (s < -1 || s > top) continue;
      const FqElement c = F.from_int(b - a);
      if (c.code) sc.push_back({static_cast<std::size_t>(a + 1), static_cast<std::size_t>(b + 1), static_cast<std::size_t>(s + 1), c});
    }
  }
  GradedAlgebra A(F, p, p, deg, sc, "witt:" + std::to_string(p));
  A.set_pmap(1, unit_vector(F, p, 1));
  for (std::size_t i = 0; i < p; ++i) {
    if (i != 1) A.set_pmap(i, zero_vector(F, p));
  }
  return A;
}

GradedAlgebra truncated_poly(unsigned p, unsigned N, unsigned m) {
  require_prime(p);
  if (N == 0 || N > p * p) throw InvalidInput("truncated_poly needs 1 <= N <= p^2");
  if (m == 0) throw InvalidInput("grading modulus must be positive");
  const Fq F = Fq::prime(p);
  std::vector<StructureConstant> sc;
  std::vector<unsigned> deg;
  for (unsigned i = 0; i < N; ++i) {
    deg.push_back(i % m);
    for (unsigned j = 0; i + j < N; ++j) sc.push_back({i, j, i + j, F.one()});
  }
  return GradedAlgebra(F, N, m, deg, sc,
                       "tpoly:" + std::to_string(p) + ":" + std::to_string(N) + ":" + std::to_string(m));
}

GradedAlgebra divided_power(unsigned p, unsigned N, unsigned m) {
  require_prime(p);
  if (m == 0) throw InvalidInput("grading modulus must be positive");
  unsigned q = p;
  while (q < N && q <= 4096) q *= p;
  if (N < p || q != N) throw InvalidInput("divided_power needs N a power of p (N >= p, N <= 4096*p)");
  const Fq F = Fq::prime(p);
  std::vector<StructureConstant> sc;
  std::vector<unsigned> deg;
  for (unsigned i = 0; i < N; ++i) {
    deg.push_back(i % m);
    for (unsigned j = 0; i + j < N; ++j) {
      const unsigned c = lucas_binomial(i + j, i, p);
      if (c) sc.push_back({i, j, i + j, F.from_int(c)});
    }
  }
  return GradedAlgebra(F, N, m, deg, sc,
                       "dpow:" + std::to_string(p) + ":" + std::to_string(N) + ":" + std::to_string(m));
}

GradedAlgebra torus_line(unsigned p, unsigned m) {
  require_prime(p);
  const Fq F = Fq::prime(p);
  GradedAlgebra A(F, 1, m, {0}, {}, "line:" + std::to_string(p));
  A.set_pmap(0, Vector{F.one()});
  return A;
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw InvalidInput("direct sum of algebras over different fields");
  if (a.modulus() != b.modulus()) throw InvalidInput("direct sum needs equal grading moduli");
  const std::size_t n = a.dim();
  std::vector<StructureConstant> sc = a.structure_constants();
  for (auto x : b.structure_constants()) sc.push_back({x.i + n, x.j + n, x.k + n, x.c});
  std::vector<unsigned> deg = a.degrees();
  deg.insert(deg.end(), b.degrees().begin(), b.degrees().end());
  GradedAlgebra out(a.field(), n + b.dim(), a.modulus(), deg, sc, a.name() + "+" + b.name());
  const Fq& F = a.field();
  for (const auto& [i, v] : a.pmap()) {
    Vector w = v;
    w.resize(n + b.dim(), F.zero());
    out.set_pmap(i, w);
  }
  for (const auto& [i, v] : b.pmap()) {
    Vector w(n, F.zero());
    w.insert(w.end(), v.begin(), v.end());
    out.set_pmap(i + n, w);
  }
  return out;
}

Matrix d_dx(const GradedAlgebra& A) {
  const Fq& F = A.field();
  Matrix D(F, A.dim(), A.dim());
  for (std::size_t i = 1; i < A.dim(); ++i) D(i - 1, i) = F.from_int(static_cast<std::int64_t>(i));
  return D;
}

Matrix x_d_dx(const GradedAlgebra& A) {
  const Fq& F = A.field();
  Matrix D(F, A.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) D(i, i) = F.from_int(static_cast<std::int64_t>(i));
  return D;
}

Matrix divided_d(const GradedAlgebra& A) {
  const Fq& F = A.field();
  Matrix D(F, A.dim(), A.dim());
  for (std::size_t i = 1; i < A.dim(); ++i) D(i - 1, i) = F.one();
  return D;
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const GradedAlgebra& A, const Matrix& D) {
  if (D.rows() != A.dim() || D.cols() != A.dim()) throw InvalidInput("derivation has wrong dimension");
  const Fq& F = A.field();
  std::vector<Vector> De;
  for (std::size_t i = 0; i < A.dim(); ++i) De.push_back(D.column(i));
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector lhs = zero_vector(F, A.dim());
      for (const auto& [k, c] : A.basis_product(i, j)) lhs = add(F, lhs, scale(F, c, De[k]));
      const Vector rhs = add(F, A.multiply(De[i], A.basis_vector(j)), A.multiply(A.basis_vector(i), De[j]));
      if (lhs != rhs) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool is_derivation(const GradedAlgebra& A, const Matrix& D) { return !leibniz_failure(A, D).has_value(); }

GradedDerivationCheck is_graded_derivation(const GradedAlgebra& A, const Matrix& D, long d) {
  GradedDerivationCheck r;
  r.derivation = is_derivation(A, D);
  const unsigned m = A.modulus();
  const unsigned dd = mod(d, m);
  r.graded = true;
  for (std::size_t j = 0; j < A.dim() && r.graded; ++j) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (D(i, j).code != 0 && A.degree(i) != (A.degree(j) + dd) % m) {
        r.graded = false;
        break;
      }
    }
  }
  r.m_divides_pd = (static_cast<unsigned long>(A.field().characteristic()) * dd) % m == 0;
  return r;
}

std::optional<unsigned> derivation_degree(const GradedAlgebra& A, const Matrix& D) {
  std::optional<unsigned> d;
  const unsigned m = A.modulus();
  for (std::size_t j = 0; j < A.dim(); ++j) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (D(i, j).code == 0) continue;
      const unsigned here = (A.degree(i) + m - A.degree(j)) % m;
      if (d && *d != here) return std::nullopt;
      d = here;
    }
  }
  return d.value_or(0);
}

bool is_grading(const GradedAlgebra& A, const Grading& g) {
  if (g.parts.size() != g.m) return false;
  if (!is_direct_sum_decomposition(g.parts)) return false;
  for (unsigned k = 0; k < g.m; ++k) {
    for (unsigned l = 0; l < g.m; ++l) {
      const Subspace& target = g.parts[(k + l) % g.m];
      for (const auto& u : g.parts[k].basis()) {
        for (const auto& v : g.parts[l].basis()) {
          if (!target.contains(A.multiply(u, v))) return false;
        }
      }
    }
  }
  return true;
}

bool is_labeled_grading(const GradedAlgebra& A, const std::vector<std::pair<Vector, Subspace>>& parts) {
  const Fq& F = A.field();
  std::vector<Subspace> spaces;
  for (const auto& [label, s] : parts) spaces.push_back(s);
  if (!is_direct_sum_decomposition(spaces)) return false;
  for (const auto& [la, sa] : parts) {
    for (const auto& [lb, sb] : parts) {
      const Vector sum = add(F, la, lb);
      const Subspace* target = nullptr;
      for (const auto& [lc, sc] : parts) {
        if (lc == sum) target = &sc;
      }
      for (const auto& u : sa.basis()) {
        for (const auto& v : sb.basis()) {
          const Vector w = A.multiply(u, v);
          if (target ? !target->contains(w) : !is_zero(w)) return false;
        }
      }
    }
  }
  return true;
}

Grading map_grading(const Grading& g, const Matrix& L) {
  Grading out{g.m, {}};
  for (const auto& s : g.parts) out.parts.push_back(s.image(L));
  return out;
}

Grading base_change(const Grading& g, const Embedding& e) {
  Grading out{g.m, {}};
  for (const auto& s : g.parts) out.parts.push_back(s.base_change(e));
  return out;
}

}  // namespace gsw
