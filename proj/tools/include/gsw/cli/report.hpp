#pragma once

#include <nlohmann/json.hpp>

#include "gsw/algebra.hpp"
#include "gsw/fields.hpp"
#include "gsw/matrix.hpp"
#include "gsw/polynomial.hpp"
#include "gsw/switching.hpp"
#include "gsw/toral.hpp"

namespace gsw::cli {

using nlohmann::json;

/// {p, degree, modulus}; the modulus lists F_p digits from the constant term.
json field_json(const Fq& F);
/// F_p digits of x in the field's polynomial basis.
json element_json(const Fq& F, FqElement x);
json vector_json(const Fq& F, const Vector& v);
json subspace_json(const Subspace& S);
json polynomial_json(const Polynomial& f);
json grading_json(const Grading& g);

json switch_json(const SwitchResult& r);
json toral_json(const ToralComparison& c);

}  // namespace gsw::cli
