#include "gsw/eigen.hpp"

#include <algorithm>

#include "gsw/error.hpp"

namespace gsw {

Polynomial charpoly(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("charpoly of a non-square matrix");
  const Fq& F = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col).code == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
    }
    const FqElement inv = F.inv(h(col + 1, col));
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col).code == 0) continue;
      const FqElement f = F.mul(h(i, col), inv);
      // row_i -= f row_{col+1}; then col_{col+1} += f col_i.
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(f, h(col + 1, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) = F.add(h(r, col + 1), F.mul(f, h(r, i)));
    }
  }
  // p_k = (T - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<Polynomial> p{Polynomial::constant(F, F.one())};
  const Polynomial t = Polynomial::variable(F);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (t - Polynomial::constant(F, h(k - 1, k - 1))) * p[k - 1];
    FqElement prod = F.one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      if (prod.code == 0) break;
      next = next - p[i - 1].scaled(F.mul(h(i - 1, k - 1), prod));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Polynomial krylov_minpoly(const Matrix& m, const Vector& v) {
  const Fq& F = m.field();
  if (is_zero(v)) return Polynomial::constant(F, F.one());
  std::vector<Vector> seq{v};
  for (;;) {
    // seq stays independent, so the first solvable m^k v = sum c_i m^i v
    // gives the minimal relation.
    const Vector next = m.apply(seq.back());
    if (auto c = Matrix::from_columns(F, m.rows(), seq).solve(next)) {
      std::vector<FqElement> coeffs;
      for (const auto& x : *c) coeffs.push_back(F.neg(x));
      coeffs.push_back(F.one());
      return Polynomial(F, std::move(coeffs));
    }
    seq.push_back(next);
    if (seq.size() > m.rows() + 1) throw VerificationError("Krylov sequence failed to terminate");
  }
}

Polynomial minpoly(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("minpoly of a non-square matrix");
  const Fq& F = m.field();
  Polynomial acc = Polynomial::constant(F, F.one());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Polynomial k = krylov_minpoly(m, unit_vector(F, m.rows(), i));
    acc = divmod(acc * k, gcd(acc, k)).first.monic();
  }
  return acc;
}

Matrix eval_poly(const Polynomial& f, const Matrix& m) {
  const Fq& F = m.field();
  Matrix acc(F, m.rows(), m.cols());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) = F.add(acc(i, i), f.coeffs()[k]);
  }
  return acc;
}

bool is_squarefree(const Polynomial& f) { return gcd(f, f.derivative()).degree() == 0; }

bool is_semisimple(const Matrix& m) { return is_squarefree(minpoly(m)); }

std::string field_name(const Fq& F) {
  if (F.degree() == 1) return "F_" + std::to_string(F.characteristic());
  return "F_{" + std::to_string(F.characteristic()) + "^" + std::to_string(F.degree()) + "}";
}

const Eigenspace* EigenDecomposition::find(FqElement rho) const {
  for (const auto& s : spaces) {
    if (s.eigenvalue == rho) return &s;
  }
  return nullptr;
}

EigenDecomposition EigenDecomposition::base_change(const Embedding& e) const {
  if (e.target() == field) return *this;
  EigenDecomposition out{e.target(), map.base_change(e), {}, log};
  for (const auto& s : spaces) out.spaces.push_back(Eigenspace{e(s.eigenvalue), s.multiplicity, s.space.base_change(e)});
  std::sort(out.spaces.begin(), out.spaces.end(),
            [](const Eigenspace& a, const Eigenspace& b) { return a.eigenvalue < b.eigenvalue; });
  out.log.push_back(field_name(field) + " -> " + field_name(e.target()));
  return out;
}

EigenDecomposition generalized_eigenspaces(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("eigenspaces of a non-square matrix");
  const Fq& F = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return EigenDecomposition{F, m, {}, {}};
  const SplitResult split = roots_in_splitting_field(charpoly(m));
  const Fq& G = split.field;
  const Embedding e(F, G);
  EigenDecomposition out{G, m.base_change(e), {}, {}};
  if (!(G == F)) out.log.push_back(field_name(F) + " -> " + field_name(G) + " (eigenvalues)");
  for (const auto& rm : split.roots) {
    const Matrix shifted = out.map - Matrix::scalar(G, n, rm.root);
    Subspace s = Subspace::span(G, n, shifted.pow(rm.multiplicity).nullspace());
    if (s.dim() != rm.multiplicity) throw VerificationError("generalized eigenspace dimension mismatch");
    out.spaces.push_back(Eigenspace{rm.root, rm.multiplicity, std::move(s)});
  }
  return out;
}

}  // namespace gsw
