#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsw/extension.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"

namespace gsw {

/// e_i * e_j = sum_k c e_k contributes one entry per nonzero c.
struct StructureConstant {
  std::size_t i = 0, j = 0, k = 0;
  FqElement c;
};

/// A grading over Z/m: parts[k] is the degree-k component. Empty components
/// are kept so that degree arithmetic stays total.
struct Grading {
  unsigned m = 1;
  std::vector<Subspace> parts;
};

/// Finite-dimensional (not necessarily associative) algebra over F_q given
/// by structure constants, with a Z/m-grading in which every basis vector is
/// homogeneous. An optional p-map table stores e_i^{[p]} for Lie algebras.
class GradedAlgebra {
 public:
  GradedAlgebra(Fq field, std::size_t dim, unsigned m, std::vector<unsigned> degrees,
                const std::vector<StructureConstant>& constants, std::string name = "");

  const Fq& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  unsigned modulus() const { return m_; }
  unsigned degree(std::size_t i) const { return deg_[i]; }
  const std::vector<unsigned>& degrees() const { return deg_; }
  const std::string& name() const { return name_; }

  /// Sparse product of two basis vectors.
  const std::vector<std::pair<std::size_t, FqElement>>& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  std::vector<StructureConstant> structure_constants() const;
  Vector multiply(const Vector& x, const Vector& y) const;
  /// y -> x * y.
  Matrix left_multiplication(const Vector& x) const;
  /// Left multiplication by the i-th basis vector (ad e_i for Lie algebras).
  Matrix ad(std::size_t i) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

  /// The grading by basis degrees.
  Grading grading() const;
  /// Every basis product lies in the component of the summed degree.
  bool grading_law_holds() const;
  bool is_anticommutative() const;
  bool satisfies_jacobi() const;

  const std::map<std::size_t, Vector>& pmap() const { return pmap_; }
  void set_pmap(std::size_t i, Vector value);

  GradedAlgebra base_change(const Embedding& e) const;

 private:
  Fq field_;
  std::size_t dim_;
  unsigned m_;
  std::vector<unsigned> deg_;
  std::vector<std::vector<std::pair<std::size_t, FqElement>>> table_;
  std::map<std::size_t, Vector> pmap_;
  std::string name_;
};

/// Witt algebra W(1;1): basis index i stands for e_{i-1}, i = 0..p-1,
/// [e_a, e_b] = (b - a) e_{a+b}, graded by a mod p, with e_0^{[p]} = e_0 and
/// all other basis p-th powers zero. p >= 3.
GradedAlgebra witt(unsigned p);
/// F_p[x]/(x^N), basis x^0..x^{N-1}, graded by exponent mod m; N <= p^2.
GradedAlgebra truncated_poly(unsigned p, unsigned N, unsigned m);
/// Divided power algebra with basis x^{(0)}..x^{(N-1)},
/// x^{(i)} x^{(j)} = binom(i+j, i) x^{(i+j)}, graded by i mod m; N a power of p.
GradedAlgebra divided_power(unsigned p, unsigned N, unsigned m);
/// One-dimensional abelian algebra of degree 0 with t^{[p]} = t (a torus line).
GradedAlgebra torus_line(unsigned p, unsigned m);
/// Componentwise structure, gradings and p-maps; both must share field and m.
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);

/// d/dx on truncated_poly (x^i -> i x^{i-1}).
Matrix d_dx(const GradedAlgebra& tpoly);
/// x d/dx on truncated_poly (x^i -> i x^i).
Matrix x_d_dx(const GradedAlgebra& tpoly);
/// The divided-power derivative x^{(i)} -> x^{(i-1)}.
Matrix divided_d(const GradedAlgebra& dpow);

bool is_derivation(const GradedAlgebra& A, const Matrix& D);
/// First basis pair (i, j) violating the Leibniz rule.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_failure(const GradedAlgebra& A, const Matrix& D);

struct GradedDerivationCheck {
  bool derivation = false;
  bool graded = false;           // D(A_k) in A_{k+d} for all k
  bool m_divides_pd = false;
};
GradedDerivationCheck is_graded_derivation(const GradedAlgebra& A, const Matrix& D, long d);
/// The degree of D when it is homogeneous and nonzero; 0 for D = 0.
std::optional<unsigned> derivation_degree(const GradedAlgebra& A, const Matrix& D);

/// Parts independent, spanning, and A_k A_l in A_{k+l mod m}.
bool is_grading(const GradedAlgebra& A, const Grading& g);
/// Gradings by arbitrary labels in F_q^r (root gradings): each product of
/// parts lies in the part labelled by the sum, or is zero if no such part.
bool is_labeled_grading(const GradedAlgebra& A, const std::vector<std::pair<Vector, Subspace>>& parts);

/// Image of every component under an invertible map.
Grading map_grading(const Grading& g, const Matrix& L);
Grading base_change(const Grading& g, const Embedding& e);

}  // namespace gsw
