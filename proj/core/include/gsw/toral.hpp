#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsw/algebra.hpp"
#include "gsw/extension.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"
#include "gsw/switching.hpp"

namespace gsw {

struct RestrictednessReport {
  bool anticommutative = false;
  bool jacobi = false;
  bool restricted = false;  // ad(e_i)^p == ad(e_i^{[p]}) for every tabulated i
  std::optional<std::size_t> failing_index;

  bool ok() const { return anticommutative && jacobi && restricted; }
};

/// Lie axioms on basis triples and restrictedness of the p-map table.
RestrictednessReport check_restricted(const GradedAlgebra& L);

/// x^{[p]}. Defined for multiples of a basis vector with a tabulated p-th
/// power, and otherwise only when ad x^{[p]} = (ad x)^p pins the value down
/// (trivial centre). Throws InvalidInput when the value is not determined.
Vector pmap(const GradedAlgebra& L, const Vector& x);
/// x^{[p]^t}.
Vector pmap_iterate(const GradedAlgebra& L, const Vector& x, unsigned t);
/// q(x) = sum_{t=1}^{r-1} x^{[p]^t}.
Vector q_of_x(const GradedAlgebra& L, const Vector& x, unsigned r);

/// Elements pairwise commuting with semisimple adjoint action.
bool is_torus(const GradedAlgebra& L, const std::vector<Vector>& T);

struct Root {
  Vector values;  // gamma(t_k) for the torus basis t_k
  Subspace space;
};

struct RootDecomposition {
  Fq field;
  GradedAlgebra algebra;       // over `field`
  std::vector<Vector> torus;   // over `field`
  std::vector<Root> roots;     // sorted by values
  std::vector<std::string> log;

  const Root* root_of(const Vector& x) const;
  /// gamma(t) for t in the span of the torus basis.
  FqElement evaluate(const Vector& gamma, const Vector& t) const;
};

/// Simultaneous eigenspaces of ad t over the torus basis, after enlarging the
/// field so that every ad t splits. Throws HypothesisError if T is not a torus.
RootDecomposition root_decomposition(const GradedAlgebra& L, const std::vector<Vector>& T);

struct TxConstruction {
  Fq field;
  Vector beta;
  std::vector<Vector> powers;  // x^{[p]^k}, k = 0..r-1
  std::vector<Vector> Tx;
  bool is_torus = false;
};

/// T_x = {t - beta(t) sum_{k<r} x^{[p]^k}} for a root vector x in L_beta
/// (beta != 0) with x^{[p]^r} in T. `dec` must be the root decomposition of T.
TxConstruction t_x_construction(const RootDecomposition& dec, const Vector& x, unsigned r);

struct Refinement {
  Vector t1;                    // toral, beta(t1) = 1
  std::vector<Vector> T0;       // basis of ker beta in T
  Grading coarse;               // L_k by t1-eigenvalue k in F_p
  struct Part {
    Vector gamma0;              // values on the T0 basis
    Subspace space;
  };
  std::vector<Part> by_gamma0;  // L_{gamma_0}
  bool t0_kills_x = false;
};

/// t1 by search over F_p-combinations of the torus basis (each basis element
/// must be toral), T0 = ker beta, and the two coarse gradings.
Refinement refine_grading(const RootDecomposition& dec, const Vector& beta, const Vector& x);

struct ToralComparison {
  Fq field;
  TxConstruction tx;
  Refinement refinement;
  SwitchResult switched;
  bool h_is_ad_q = false;           // h(D) == ad q(x)
  bool operator_form = false;       // blockwise E_{(D, lambda)} == L_D
  bool strade_symbolic = false;     // symbolic operator identity at p
  std::vector<Subspace> images;     // L_D L_gamma
  std::vector<Subspace> tx_roots;   // root spaces of T_x
  bool images_match = false;
  bool gamma0_invariant = false;    // L_D L_{gamma_0} == L_{gamma_0}
  bool refined_grading = false;     // sum L_D(L_k cap L_{gamma_0}) is a grading
  std::vector<std::string> log;
  std::optional<std::string> failure;

  bool ok() const;
};

/// Runs the switch for D = ad x on the grading by t1-eigenvalues and compares
/// with the root decomposition of T_x. `x` and `T` are over L's field.
ToralComparison compare_switch_to_toral(const GradedAlgebra& L, const std::vector<Vector>& T, const Vector& x,
                                        unsigned r, const SwitchOptions& opt = {});

}  // namespace gsw
