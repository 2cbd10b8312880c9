#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsw/extension.hpp"
#include "gsw/fields.hpp"

namespace gsw {

using Vector = std::vector<FqElement>;

/// Dense matrix over F_q. Square matrices act on column vectors: column j
/// holds the image of the j-th basis vector.
class Matrix {
 public:
  Matrix(Fq field, std::size_t rows, std::size_t cols);
  Matrix(Fq field, std::size_t rows, std::size_t cols, std::vector<FqElement> entries);

  static Matrix identity(const Fq& field, std::size_t n);
  static Matrix scalar(const Fq& field, std::size_t n, FqElement c);
  static Matrix from_columns(const Fq& field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(const Fq& field, std::size_t cols, const std::vector<Vector>& rows);

  const Fq& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FqElement operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FqElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<FqElement>& entries() const { return a_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  Matrix scaled(FqElement c) const;
  Vector apply(const Vector& v) const;
  Matrix pow(std::uint64_t e) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  /// Whether this equals c * Id for some c; returns c.
  std::optional<FqElement> as_scalar() const;

  Matrix base_change(const Embedding& e) const;

  std::size_t rank() const;
  /// Reduced row echelon form and pivot columns.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of {v : A v = 0}.
  std::vector<Vector> nullspace() const;
  std::optional<Matrix> inverse() const;
  /// A solution x of A x = b if one exists.
  std::optional<Vector> solve(const Vector& b) const;
  FqElement determinant() const;

  std::string to_string() const;

 private:
  Fq field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FqElement> a_;
};

/// Square matrices of a fixed size as a coefficient ring. Generic code only
/// ever multiplies polynomials in commuting operators, so the lack of
/// commutativity in general does not matter.
class MatrixAlgebra {
 public:
  using value_type = Matrix;
  MatrixAlgebra(Fq field, std::size_t n) : field_(std::move(field)), n_(n) {}

  const Fq& field() const { return field_; }
  std::size_t size() const { return n_; }
  Matrix zero() const { return Matrix(field_, n_, n_); }
  Matrix one() const { return Matrix::identity(field_, n_); }
  Matrix scalar(FqElement c) const { return Matrix::scalar(field_, n_, c); }
  Matrix from_int(std::int64_t c) const { return scalar(field_.from_int(c)); }
  Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
  Matrix sub(const Matrix& a, const Matrix& b) const { return a - b; }
  Matrix neg(const Matrix& a) const { return a.scaled(field_.neg(field_.one())); }
  Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
  bool is_zero(const Matrix& a) const { return a.is_zero(); }
  bool equal(const Matrix& a, const Matrix& b) const { return a == b; }

 private:
  Fq field_;
  std::size_t n_;
};

Vector zero_vector(const Fq& field, std::size_t n);
Vector unit_vector(const Fq& field, std::size_t n, std::size_t i);
Vector add(const Fq& field, const Vector& a, const Vector& b);
Vector sub(const Fq& field, const Vector& a, const Vector& b);
Vector scale(const Fq& field, FqElement c, const Vector& v);
bool is_zero(const Vector& v);
Vector base_change(const Vector& v, const Embedding& e);

/// Subspace of F_q^n stored as the reduced row echelon basis, which is
/// canonical: two subspaces are equal iff their stored bases are equal.
class Subspace {
 public:
  Subspace(Fq field, std::size_t ambient);
  static Subspace span(const Fq& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(const Fq& field, std::size_t ambient);

  const Fq& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under a square matrix.
  Subspace image(const Matrix& m) const;
  bool is_invariant(const Matrix& m) const;
  /// Coordinates of v in the stored basis; nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Matrix of m restricted to this (m-invariant) subspace in the stored basis.
  Matrix restrict(const Matrix& m) const;
  Subspace base_change(const Embedding& e) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Fq field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

bool operator<(const Subspace& a, const Subspace& b);

/// Whether the subspaces are independent and together span the ambient space.
bool is_direct_sum_decomposition(const std::vector<Subspace>& parts);

}  // namespace gsw
