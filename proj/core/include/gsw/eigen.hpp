#pragma once

#include <string>
#include <vector>

#include "gsw/extension.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

/// det(T I - M), via reduction to upper Hessenberg form.
Polynomial charpoly(const Matrix& m);
/// Monic minimal polynomial: lcm of the Krylov minimal polynomials of the
/// standard basis vectors.
Polynomial minpoly(const Matrix& m);
/// Minimal polynomial of v relative to m (the least monic f with f(m) v = 0).
Polynomial krylov_minpoly(const Matrix& m, const Vector& v);
/// f(m) for f over m's field.
Matrix eval_poly(const Polynomial& f, const Matrix& m);
bool is_squarefree(const Polynomial& f);
/// Diagonalizable over the algebraic closure.
bool is_semisimple(const Matrix& m);

struct Eigenspace {
  FqElement eigenvalue;
  unsigned multiplicity = 0;
  Subspace space;
};

/// Generalized eigenspaces of a square matrix over a field in which its
/// characteristic polynomial splits.
struct EigenDecomposition {
  Fq field;
  Matrix map;  // the decomposed map over `field`
  std::vector<Eigenspace> spaces;  // sorted by eigenvalue code
  std::vector<std::string> log;    // field enlargements, in order

  const Eigenspace* find(FqElement rho) const;
  /// Same decomposition over a larger field; spaces are re-sorted by the
  /// new codes and the enlargement is logged.
  EigenDecomposition base_change(const Embedding& e) const;
};

/// Splits the characteristic polynomial (enlarging the field when needed)
/// and returns ker (m - rho)^{mult} for every eigenvalue rho.
EigenDecomposition generalized_eigenspaces(const Matrix& m);

/// "F_p" or "F_{p^n}".
std::string field_name(const Fq& F);

}  // namespace gsw
