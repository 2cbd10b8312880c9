#include "gsw/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "gsw/error.hpp"

namespace gsw {

Matrix::Matrix(Fq field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, FqElement{0}) {}

Matrix::Matrix(Fq field, std::size_t rows, std::size_t cols, std::vector<FqElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw InvalidInput("matrix entry count does not match shape");
}

Matrix Matrix::identity(const Fq& field, std::size_t n) { return scalar(field, n, field.one()); }

Matrix Matrix::scalar(const Fq& field, std::size_t n, FqElement c) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_columns(const Fq& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const Fq& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
  Matrix r(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.field_.add(a.a_[k], b.a_[k]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
  Matrix r(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.field_.sub(a.a_[k], b.a_[k]);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
  const Fq& F = a.field_;
  Matrix r(F, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FqElement aik = a(i, k);
      if (aik.code == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FqElement bkj = b(k, j);
        if (bkj.code == 0) continue;
        r(i, j) = F.add(r(i, j), F.mul(aik, bkj));
      }
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.field_ == b.field_;
}

Matrix Matrix::scaled(FqElement c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InvalidInput("vector length mismatch");
  Vector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    FqElement acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].code && (*this)(i, j).code) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    }
    r[i] = acc;
  }
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) throw InvalidInput("power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](FqElement x) { return x.code == 0; });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

std::optional<FqElement> Matrix::as_scalar() const {
  if (!is_square()) return std::nullopt;
  const FqElement c = rows_ ? (*this)(0, 0) : field_.zero();
  if (*this == scalar(field_, rows_, c)) return c;
  return std::nullopt;
}

Matrix Matrix::base_change(const Embedding& e) const {
  Matrix r(e.target(), rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = e(a_[k]);
  return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  const Fq& F = field_;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m(sel, col).code == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
    }
    const FqElement inv = F.inv(m(row, col));
    for (std::size_t j = col; j < cols_; ++j) m(row, j) = F.mul(m(row, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col).code == 0) continue;
      const FqElement f = m(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        if (m(row, j).code) m(i, j) = F.sub(m(i, j), F.mul(f, m(row, j)));
      }
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<Vector> Matrix::nullspace() const {
  std::vector<std::size_t> piv;
  const Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = field_.neg(r(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = field_.one();
  }
  std::vector<std::size_t> piv;
  const Matrix r = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  if (b.size() != rows_) throw InvalidInput("right-hand side length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<std::size_t> piv;
  const Matrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vector x(cols_, field_.zero());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, cols_);
  return x;
}

FqElement Matrix::determinant() const {
  if (!is_square()) throw InvalidInput("determinant of a non-square matrix");
  Matrix m = *this;
  const Fq& F = field_;
  FqElement det = F.one();
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).code == 0) ++sel;
    if (sel == n) return F.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(col, col));
    const FqElement inv = F.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).code == 0) continue;
      const FqElement f = F.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(col, j)));
    }
  }
  return det;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

Vector zero_vector(const Fq& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Fq& field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

Vector add(const Fq& field, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.add(a[i], b[i]);
  return r;
}

Vector sub(const Fq& field, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.sub(a[i], b[i]);
  return r;
}

Vector scale(const Fq& field, FqElement c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = field.mul(c, v[i]);
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](FqElement x) { return x.code == 0; });
}

Vector base_change(const Vector& v, const Embedding& e) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = e(v[i]);
  return r;
}

// --- Subspace ---

Subspace::Subspace(Fq field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

Subspace Subspace::span(const Fq& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  std::vector<std::size_t> piv;
  const Matrix r = Matrix::from_rows(field, ambient, vectors).rref(&piv);
  for (std::size_t k = 0; k < piv.size(); ++k) s.basis_.push_back(r.row(k));
  return s;
}

Subspace Subspace::whole(const Fq& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vector(field, ambient, i));
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector length mismatch");
  Vector coords(basis_.size());
  Vector rest = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto& b = basis_[k];
    const auto pivot = static_cast<std::size_t>(
        std::find_if(b.begin(), b.end(), [](FqElement x) { return x.code != 0; }) - b.begin());
    coords[k] = v[pivot];
    rest = sub(field_, rest, scale(field_, coords[k], b));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i = sum b_j w_j.
  const std::size_t k = basis_.size(), l = other.basis_.size();
  if (k == 0 || l == 0) return Subspace(field_, ambient_);
  Matrix m(field_, ambient_, k + l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, k + j) = field_.neg(other.basis_[j][r]);
  std::vector<Vector> vecs;
  for (const auto& sol : m.nullspace()) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < k; ++i) v = add(field_, v, scale(field_, sol[i], basis_[i]));
    vecs.push_back(std::move(v));
  }
  return span(field_, ambient_, vecs);
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vector> vecs;
  vecs.reserve(basis_.size());
  for (const auto& b : basis_) vecs.push_back(m.apply(b));
  return span(field_, ambient_, vecs);
}

bool Subspace::is_invariant(const Matrix& m) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& b) { return contains(m.apply(b)); });
}

Matrix Subspace::restrict(const Matrix& m) const {
  const std::size_t k = basis_.size();
  Matrix r(field_, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto coords = coordinates(m.apply(basis_[j]));
    if (!coords) throw InvalidInput("subspace is not invariant under the map");
    for (std::size_t i = 0; i < k; ++i) r(i, j) = (*coords)[i];
  }
  return r;
}

Subspace Subspace::base_change(const Embedding& e) const {
  Subspace s(e.target(), ambient_);
  for (const auto& b : basis_) s.basis_.push_back(gsw::base_change(b, e));
  return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis() < b.basis();
}

bool is_direct_sum_decomposition(const std::vector<Subspace>& parts) {
  if (parts.empty()) return false;
  const Fq& F = parts.front().field();
  const std::size_t n = parts.front().ambient();
  std::size_t total = 0;
  std::vector<Vector> all;
  for (const auto& s : parts) {
    total += s.dim();
    all.insert(all.end(), s.basis().begin(), s.basis().end());
  }
  return total == n && Subspace::span(F, n, all).dim() == n;
}

}  // namespace gsw
