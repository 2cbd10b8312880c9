#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsw/algebra.hpp"
#include "gsw/eigen.hpp"
#include "gsw/extension.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"
#include "gsw/polynomial.hpp"

namespace gsw {

/// sum_i b_i T^{p^i}.
struct PPolynomial {
  Fq field;
  std::vector<std::pair<unsigned, FqElement>> terms;  // (i, b_i), increasing i

  bool is_zero() const { return terms.empty(); }
  FqElement eval(FqElement x) const;
  /// sum_i b_i M^{p^i}.
  Matrix eval(const Matrix& m) const;
  PPolynomial base_change(const Embedding& e) const;
  std::string to_string() const;
};

/// h(T) = sum_{i=1}^{r-1} T^{p^i} over the given field.
PPolynomial h_polynomial(const Fq& field, unsigned r);

/// D^{p^n} + a_{n-1} D^{p^{n-1}} + ... + a_r D^{p^r} = 0 with a_r != 0, or the
/// degenerate case D^{p^r} = 0 (no a_i, n = r).
struct Relation {
  Fq field;
  unsigned r = 1, n = 1;
  std::vector<FqElement> a;  // a[i - r] for r <= i < n
  bool degenerate = false;

  FqElement coeff(unsigned i) const { return a[i - r]; }
  Relation base_change(const Embedding& e) const;
  std::string to_string() const;
};

/// Least r >= 0 such that D^{p^r} is semisimple.
unsigned semisimple_exponent(const Matrix& D);

/// The relation of least degree n > r. Requires D^{p^r} semisimple; throws
/// HypothesisError otherwise.
Relation p_power_relation(const Matrix& D, unsigned r);

/// 1 + T + sum_{k=r}^{n-1} a_k^{p^{n-1-k}} T^{p^{n-k}}: its roots are the
/// admissible values of lambda.
Polynomial lambda_polynomial(const Relation& rel);

struct GConstruction {
  Fq field;  // rel.field, or the extension containing lambda
  PPolynomial g;
  std::optional<FqElement> lambda;  // absent for the degenerate relation
  std::optional<Polynomial> lambda_poly;
};

/// g with g(T)^p - g(T) = T^{p^r} modulo the relation. lambda defaults to the
/// smallest root (by code) in the splitting field of lambda_polynomial; an
/// explicit lambda must lie in rel.field and be a root.
GConstruction build_g(const Relation& rel, std::optional<FqElement> lambda = std::nullopt);

/// g(D)^p - g(D) == D^{p^r}.
bool verify_g(const PPolynomial& g, const Matrix& D, unsigned r);

struct SwitchOptions {
  std::optional<FqElement> lambda;  // over the algebra's field
  /// Use this exponent instead of the least one; D^{p^r} must be semisimple.
  std::optional<unsigned> r;
  bool check_products = true;       // run the two-sided product identity
  unsigned jobs = 1;
};

struct SwitchBlock {
  FqElement rho;
  Subspace space;
  FqElement g_rho;
  Matrix map;  // restriction of the switching map, in the stored basis of `space`
  /// (map)^{p^r} as a scalar, if it is one.
  std::optional<FqElement> power_scalar;
  FqElement laguerre_scalar;  // L^{(g^p)}(g^p - g)
  FqElement product_scalar;   // prod (1 + g/i)^i
  bool scalar_ok = false;
};

struct ProductIdentityCheck {
  bool ran = false;
  bool passed = false;
  bool coefficient_ring_ok = false;  // X^p relation, L^p = P and reconstruction
  bool vanishing = false;
  std::size_t pairs_checked = 0;
  std::optional<std::string> failure;
};

struct SwitchResult {
  std::string method;  // "general" or "special"
  Fq field;
  GradedAlgebra algebra;  // base-changed to `field`
  Matrix D;
  unsigned r_reported = 0, r = 1;
  unsigned degree = 0;  // of D in the grading
  std::optional<Relation> relation;
  PPolynomial g, h;
  std::optional<FqElement> lambda;
  std::optional<Polynomial> lambda_poly;
  bool g_verified = false;
  std::vector<SwitchBlock> blocks;
  Matrix LD;
  bool invertible = false;
  Grading old_grading, new_grading;
  bool grading_ok = false;
  ProductIdentityCheck products;
  std::vector<std::string> log;

  bool scalars_ok() const;
  bool ok() const;
};

/// Blockwise L^{(g(rho) - h(D))}(D) for a graded derivation D of A with respect
/// to `grading` (degree d with m | pd). Throws HypothesisError naming the
/// failed hypothesis.
SwitchResult build_LD(const GradedAlgebra& A, const Grading& grading, const Matrix& D,
                      const SwitchOptions& opt = {});
SwitchResult build_LD(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt = {});

/// L^{(a gamma)}(D) on A^{(a)} with gamma^p - gamma = 1. Requires D^{p^2} = D^p.
SwitchResult special_LD(const GradedAlgebra& A, const Grading& grading, const Matrix& D,
                        const SwitchOptions& opt = {});
SwitchResult special_LD(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt = {});

/// build_LD on the basis grading of A.
SwitchResult switch_grading(const GradedAlgebra& A, const Matrix& D, const SwitchOptions& opt = {});

/// The truncated exponential sum_{k<p} M^k / k!.
Matrix truncated_exp(const Matrix& M);

/// Degree of D relative to an explicit grading, if D is homogeneous.
std::optional<unsigned> homogeneous_degree(const Grading& g, const Matrix& D);

}  // namespace gsw
