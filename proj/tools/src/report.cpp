#include "gsw/cli/report.hpp"

namespace gsw::cli {

json field_json(const Fq& F) {
  return {{"p", F.characteristic()}, {"degree", F.degree()}, {"modulus", F.modulus()}};
}

json element_json(const Fq& F, FqElement x) { return F.digits(x); }

json vector_json(const Fq& F, const Vector& v) {
  json out = json::array();
  for (const auto x : v) out.push_back(element_json(F, x));
  return out;
}

json subspace_json(const Subspace& S) {
  json basis = json::array();
  for (const auto& v : S.basis()) basis.push_back(vector_json(S.field(), v));
  return {{"dim", S.dim()}, {"basis", basis}};
}

json polynomial_json(const Polynomial& f) { return vector_json(f.field(), f.coeffs()); }

json grading_json(const Grading& g) {
  json parts = json::array();
  for (std::size_t k = 0; k < g.parts.size(); ++k) {
    json part = subspace_json(g.parts[k]);
    part["k"] = k;
    parts.push_back(part);
  }
  return {{"m", g.m}, {"parts", parts}};
}

namespace {

json ppoly_json(const PPolynomial& g) {
  json terms = json::array();
  for (const auto& [i, b] : g.terms) terms.push_back({{"i", i}, {"b", element_json(g.field, b)}});
  return {{"terms", terms}, {"text", g.to_string()}};
}

json relation_json(const Relation& rel) {
  json a = json::array();
  for (const auto x : rel.a) a.push_back(element_json(rel.field, x));
  return {{"r", rel.r}, {"n", rel.n}, {"a", a}, {"degenerate", rel.degenerate}, {"text", rel.to_string()}};
}

json optional_element(const Fq& F, const std::optional<FqElement>& x) {
  return x ? element_json(F, *x) : json(nullptr);
}

}  // namespace

json switch_json(const SwitchResult& r) {
  const Fq& F = r.field;
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"rho", element_json(F, b.rho)},
                      {"dim", b.space.dim()},
                      {"g_rho", element_json(F, b.g_rho)},
                      {"power_scalar", optional_element(F, b.power_scalar)},
                      {"laguerre_scalar", element_json(F, b.laguerre_scalar)},
                      {"product_scalar", element_json(F, b.product_scalar)},
                      {"scalar_ok", b.scalar_ok}});
  }
  json products = {{"ran", r.products.ran},
                   {"passed", r.products.passed},
                   {"coefficient_ring_ok", r.products.coefficient_ring_ok},
                   {"vanishing", r.products.vanishing},
                   {"pairs_checked", r.products.pairs_checked},
                   {"failure", r.products.failure ? json(*r.products.failure) : json(nullptr)}};
  return {{"method", r.method},
          {"algebra", r.algebra.name()},
          {"dim", r.algebra.dim()},
          {"field", field_json(F)},
          {"r_reported", r.r_reported},
          {"r", r.r},
          {"degree", r.degree},
          {"relation", r.relation ? relation_json(*r.relation) : json(nullptr)},
          {"g", ppoly_json(r.g)},
          {"h", ppoly_json(r.h)},
          {"lambda", optional_element(F, r.lambda)},
          {"lambda_poly", r.lambda_poly ? polynomial_json(*r.lambda_poly) : json(nullptr)},
          {"g_verified", r.g_verified},
          {"blocks", blocks},
          {"invertible", r.invertible},
          {"new_grading", grading_json(r.new_grading)},
          {"grading_ok", r.grading_ok},
          {"scalars_ok", r.scalars_ok()},
          {"products", products},
          {"log", r.log},
          {"ok", r.ok()}};
}

json toral_json(const ToralComparison& c) {
  const Fq& F = c.field;
  json tx = json::array();
  for (const auto& t : c.tx.Tx) tx.push_back(vector_json(F, t));
  json images = json::array();
  for (const auto& s : c.images) images.push_back(subspace_json(s));
  json roots = json::array();
  for (const auto& s : c.tx_roots) roots.push_back(subspace_json(s));
  json t0 = json::array();
  for (const auto& t : c.refinement.T0) t0.push_back(vector_json(F, t));
  return {{"field", field_json(F)},
          {"beta", vector_json(F, c.tx.beta)},
          {"Tx", tx},
          {"Tx_is_torus", c.tx.is_torus},
          {"t1", vector_json(F, c.refinement.t1)},
          {"T0", t0},
          {"gamma0_parts", c.refinement.by_gamma0.size()},
          {"t0_kills_x", c.refinement.t0_kills_x},
          {"switch", switch_json(c.switched)},
          {"h_is_ad_q", c.h_is_ad_q},
          {"operator_form", c.operator_form},
          {"operator_form_symbolic", c.strade_symbolic},
          {"images", images},
          {"tx_roots", roots},
          {"images_match", c.images_match},
          {"gamma0_invariant", c.gamma0_invariant},
          {"refined_grading", c.refined_grading},
          {"log", c.log},
          {"failure", c.failure ? json(*c.failure) : json(nullptr)},
          {"ok", c.ok()}};
}

}  // namespace gsw::cli
