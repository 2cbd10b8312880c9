#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsw/algebra.hpp"
#include "gsw/matrix.hpp"

namespace gsw::cli {

/// One summand of a builtin spec such as "witt:5+line:5".
struct BuiltinPart {
  std::string kind;  // witt, tpoly, dpow, line
  unsigned p = 0, N = 0, m = 0;
  std::size_t offset = 0;  // first basis index inside the direct sum
  std::size_t dim = 0;
};

struct Builtin {
  std::string spec;
  std::vector<BuiltinPart> parts;
  GradedAlgebra algebra;
};

/// witt:p, tpoly:p:N:m, dpow:p:N:m, line:p[:m], joined with '+'. A line
/// without m takes the modulus of the other summands. Throws InvalidInput.
Builtin parse_builtin(std::string_view spec);

/// Algebra from the JSON schema {p, field_degree, dim, m, deg, sc, pmap?}.
/// Throws InvalidInput naming the offending key.
GradedAlgebra algebra_from_json(const nlohmann::json& j);
GradedAlgebra load_algebra(const std::string& path);

/// ad:i, ddx, xddx, dd, zero, or @path with a JSON matrix (row-major digit
/// strings, column j = image of basis vector j). ddx/xddx need a single
/// tpoly builtin and dd a single dpow; pass nullptr for JSON algebras.
Matrix parse_derivation(std::string_view spec, const GradedAlgebra& A, const Builtin* builtin);
Matrix matrix_from_json(const nlohmann::json& j, const Fq& field, std::size_t n);

/// "e:j" is e_j of the first Witt summand, "b:i" the i-th basis vector;
/// terms may be joined with '+'.
Vector parse_element(std::string_view spec, const Builtin& builtin);

/// Basis vectors with e_i^{[p]} = e_i.
std::vector<Vector> toral_basis(const GradedAlgebra& A);

}  // namespace gsw::cli
