#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "gsw/cli/cli.hpp"
#include "gsw/cli/inputs.hpp"
#include "gsw/cli/report.hpp"
#include "gsw/error.hpp"
#include "gsw/laguerre.hpp"
#include "gsw/parallel.hpp"
#include "gsw/switching.hpp"
#include "gsw/toral.hpp"

namespace gsw::cli {
namespace {

void require_prime(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("--p " + std::to_string(p) + " is not prime");
}

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

json named(const std::string& name, bool passed) { return {{"name", name}, {"passed", passed}}; }

}  // namespace

json config_json(const RunConfig& cfg) {
  json j = {{"command", cfg.command}};
  if (cfg.command == "identities") {
    j["p"] = cfg.p;
  } else if (cfg.command == "coeffs") {
    j["p"] = cfg.p;
    j["field_degree"] = cfg.field_degree;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
  } else {
    j["builtin"] = cfg.builtin.empty() ? json(nullptr) : json(cfg.builtin);
    j["input"] = cfg.input.empty() ? json(nullptr) : json(cfg.input);
    j["r"] = cfg.r ? json(*cfg.r) : json(nullptr);
    j["lambda"] = cfg.lambda.empty() ? json(nullptr) : json(cfg.lambda);
    if (cfg.command == "switch") {
      j["derivation"] = cfg.derivation;
      j["special"] = cfg.special;
    } else {
      j["x"] = cfg.x;
    }
  }
  return j;
}

CommandReport cmd_identities(const RunConfig& cfg) {
  require_prime(cfg.p);
  if (cfg.p > kMaxIdentityPrime) {
    throw InvalidInput("--p " + std::to_string(cfg.p) + " exceeds the identity cap " + std::to_string(kMaxIdentityPrime));
  }
  const unsigned p = cfg.p;
  CommandReport rep;
  auto add = [&](json entry) {
    rep.text.push_back(entry["name"].get<std::string>() + ": " + verdict(entry["passed"].get<bool>()));
    rep.results.push_back(std::move(entry));
  };

  for (const Identity which : kAllIdentities) {
    const IdentityReport r = check_identity(which, p);
    json entry = named(r.name, r.passed);
    entry["difference"] = r.difference ? json(r.difference->to_string()) : json(nullptr);
    add(entry);
  }

  const Polynomial lhs = lemma_lhs(p), prod = lemma_product_form(p), binom = lemma_binomial_form(p);
  const int expected_degree = static_cast<int>(p * (p - 1) / 2);
  json lemma = named("laguerre_product", lhs == prod && prod == binom && lhs.degree() == expected_degree);
  lemma["degree"] = lhs.degree();
  lemma["expected_degree"] = expected_degree;
  add(lemma);

  const ProductIdentityReport pi = product_identity_check(p);
  json product = named("product_identity", pi.passed);
  product["product"] = pi.product.to_string("Z");
  add(product);

  const IdentityReport te = truncated_exp_congruence_check(p);
  json congruence = named("truncated_exp_congruence", te.passed);
  congruence["difference"] = te.difference ? json(te.difference->to_string()) : json(nullptr);
  add(congruence);

  const IdentityReport op = strade_operator_form_check(p);
  json form = named("operator_form", op.passed);
  form["difference"] = op.difference ? json(op.difference->to_string()) : json(nullptr);
  add(form);

  rep.passed = std::all_of(rep.results.begin(), rep.results.end(), [](const json& e) { return e["passed"].get<bool>(); });
  return rep;
}

namespace {

struct Trial {
  FqElement a, b;
  unsigned resamples = 0;
  bool reconstructs = false, vanishing = false, routes_agree = false;
  std::optional<CoefficientTable> table;
};

Trial run_trial(const Fq& F, std::uint64_t seed, unsigned index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), index};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> pick(0, F.order() - 1);
  Trial t{};
  for (;;) {
    t.a = F.element(pick(rng));
    t.b = F.element(pick(rng));
    if (is_admissible(F, t.a, t.b)) break;
    ++t.resamples;
  }
  t.table = c_coefficients(F, t.a, t.b);
  const CoefficientTable other = c_coefficients_lemma_route(F, t.a, t.b);
  t.reconstructs = reconstructs(*t.table);
  t.vanishing = t.table->vanishing_holds();
  t.routes_agree = t.table->c == other.c;
  return t;
}

}  // namespace

CommandReport cmd_coeffs(const RunConfig& cfg) {
  require_prime(cfg.p);
  if (cfg.trials < 1) throw InvalidInput("--trials must be at least 1");
  if (cfg.field_degree < 1) throw InvalidInput("--field-degree must be at least 1");
  const unsigned p = cfg.p;
  const Fq F = Fq::extension(p, cfg.field_degree);

  std::vector<Trial> trials(cfg.trials);
  parallel_for(cfg.trials, cfg.jobs, [&](std::size_t i) { trials[i] = run_trial(F, cfg.seed, static_cast<unsigned>(i)); });

  CommandReport rep;
  json rows = json::array();
  bool all = true;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const Trial& t = trials[i];
    const bool ok = t.reconstructs && t.vanishing && t.routes_agree;
    all = all && ok;
    rows.push_back({{"trial", i},
                    {"a", element_json(F, t.a)},
                    {"b", element_json(F, t.b)},
                    {"resamples", t.resamples},
                    {"reconstructs", t.reconstructs},
                    {"vanishing", t.vanishing},
                    {"routes_agree", t.routes_agree}});
    if (!ok) rep.text.push_back("trial " + std::to_string(i) + ": FAIL");
  }
  json trials_entry = named("random_tables", all);
  trials_entry["field"] = field_json(F);
  trials_entry["trials"] = rows;
  rep.results.push_back(trials_entry);
  rep.text.push_back("random tables over " + field_name(F) + ": " + std::to_string(cfg.trials) + " trials, " + verdict(all));

  const Trial& first = trials.front();
  json entries = json::array();
  std::ostringstream first_text;
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      const FqElement c = first.table->at(i, j);
      if (F.is_zero(c)) continue;
      entries.push_back({{"i", i}, {"j", j}, {"c", element_json(F, c)}});
      first_text << " c'(" << i << "," << j << ")=[" << F.to_string(c) << "]";
    }
  }
  json first_entry = named("first_table", first.reconstructs && first.vanishing);
  first_entry["a"] = element_json(F, first.a);
  first_entry["b"] = element_json(F, first.b);
  first_entry["nonzero"] = entries;
  rep.results.push_back(first_entry);
  rep.text.push_back("first table a=[" + F.to_string(first.a) + "] b=[" + F.to_string(first.b) + "]:");
  rep.detail.push_back(" " + first_text.str());

  const CoefficientTable zero = c_coefficients(F, F.zero(), F.zero());
  bool closed = F.is_one(zero.c0());
  json c = json::array({element_json(F, zero.c0())});
  json expected = json::array({element_json(F, F.one())});
  std::string closed_text = "c_0=" + F.to_string(zero.c0());
  for (unsigned i = 1; i < p; ++i) {
    const FqElement want = closed_form_ci(p, i);
    closed = closed && zero.ci(i) == want;
    c.push_back(element_json(F, zero.ci(i)));
    expected.push_back(element_json(F, want));
    closed_text += " c_" + std::to_string(i) + "=" + F.to_string(zero.ci(i));
  }
  closed = closed && reconstructs(zero) && zero.vanishing_holds();
  json closed_entry = named("closed_form_at_zero", closed);
  closed_entry["c"] = c;
  closed_entry["expected"] = expected;
  rep.results.push_back(closed_entry);
  rep.text.push_back("a=b=0: " + closed_text + " (expected (-1)^i/i): " + verdict(closed));

  rep.passed = all && closed;
  return rep;
}

namespace {

struct LoadedAlgebra {
  std::optional<Builtin> builtin;
  GradedAlgebra algebra;
};

LoadedAlgebra load(const RunConfig& cfg) {
  if (cfg.builtin.empty() == cfg.input.empty()) throw InvalidInput("give exactly one of --builtin and --input");
  if (!cfg.builtin.empty()) {
    Builtin b = parse_builtin(cfg.builtin);
    GradedAlgebra A = b.algebra;
    return {std::move(b), std::move(A)};
  }
  return {std::nullopt, load_algebra(cfg.input)};
}

SwitchOptions switch_options(const RunConfig& cfg, const Fq& F) {
  SwitchOptions opt;
  opt.jobs = cfg.jobs;
  opt.r = cfg.r;
  if (!cfg.lambda.empty()) opt.lambda = F.parse(cfg.lambda);
  return opt;
}

void describe_switch(const SwitchResult& r, CommandReport& rep) {
  const Fq& F = r.field;
  rep.text.push_back("method " + r.method + " over " + field_name(F) + ", degree d = " + std::to_string(r.degree) +
                     ", r = " + std::to_string(r.r) + " (least " + std::to_string(r.r_reported) + ")");
  if (r.relation) rep.text.push_back("relation: " + r.relation->to_string());
  rep.text.push_back("g = " + r.g.to_string() + ", h = " + r.h.to_string());
  if (r.lambda) rep.text.push_back("lambda = [" + F.to_string(*r.lambda) + "]");
  for (const auto& b : r.blocks) {
    rep.text.push_back("  rho=[" + F.to_string(b.rho) + "] dim " + std::to_string(b.space.dim()) + " g(rho)=[" +
                       F.to_string(b.g_rho) + "] scalar=[" + F.to_string(b.laguerre_scalar) + "] " +
                       verdict(b.scalar_ok));
  }
  std::string parts;
  for (const auto& s : r.new_grading.parts) parts += " " + std::to_string(s.dim());
  rep.text.push_back("new grading dims:" + parts);
  rep.text.push_back("g verified: " + verdict(r.g_verified) + ", invertible: " + verdict(r.invertible) +
                     ", grading: " + verdict(r.grading_ok));
  if (r.products.ran) {
    rep.text.push_back("product identity on " + std::to_string(r.products.pairs_checked) +
                       " basis pairs: " + verdict(r.products.passed));
  }
  if (r.products.failure) rep.text.push_back("  " + *r.products.failure);
  for (const auto& line : r.log) rep.detail.push_back("  log: " + line);
}

}  // namespace

CommandReport cmd_switch(const RunConfig& cfg) {
  if (cfg.derivation.empty()) throw InvalidInput("--derivation is required");
  const LoadedAlgebra in = load(cfg);
  const GradedAlgebra& A = in.algebra;
  const Matrix D = parse_derivation(cfg.derivation, A, in.builtin ? &*in.builtin : nullptr);
  const SwitchOptions opt = switch_options(cfg, A.field());
  const SwitchResult r = cfg.special ? special_LD(A, D, opt) : build_LD(A, D, opt);

  CommandReport rep;
  rep.results.push_back(switch_json(r));
  describe_switch(r, rep);
  rep.passed = r.ok();
  return rep;
}

CommandReport cmd_toral(const RunConfig& cfg) {
  if (cfg.builtin.empty()) throw InvalidInput("toral needs --builtin (witt, line and their sums)");
  if (cfg.x.empty()) throw InvalidInput("--x is required");
  const Builtin b = parse_builtin(cfg.builtin);
  for (const auto& part : b.parts) {
    if (part.kind != "witt" && part.kind != "line") {
      throw InvalidInput("toral supports witt and line summands only, got " + part.kind);
    }
  }
  const GradedAlgebra& L = b.algebra;
  const RestrictednessReport rr = check_restricted(L);
  if (!rr.ok()) throw HypothesisError("algebra is not a restricted Lie algebra");
  const Vector x = parse_element(cfg.x, b);
  const std::vector<Vector> T = toral_basis(L);
  if (T.empty()) throw HypothesisError("no toral basis elements to form a torus");
  const unsigned r = cfg.r.value_or(1);
  if (r < 1) throw InvalidInput("--r must be at least 1");
  SwitchOptions opt = switch_options(cfg, L.field());
  opt.r.reset();

  const ToralComparison c = compare_switch_to_toral(L, T, x, r, opt);
  CommandReport rep;
  rep.results.push_back(toral_json(c));
  const Fq& F = c.field;
  std::string tx;
  for (const auto& t : c.tx.Tx) {
    tx += " (";
    for (std::size_t i = 0; i < t.size(); ++i) tx += (i ? " " : "") + F.to_string(t[i]);
    tx += ")";
  }
  rep.text.push_back("T_x:" + tx + " torus: " + verdict(c.tx.is_torus));
  rep.text.push_back("h(D) = ad q(x): " + verdict(c.h_is_ad_q) + ", operator form: " + verdict(c.operator_form) +
                     ", symbolic: " + verdict(c.strade_symbolic));
  rep.text.push_back("images vs T_x root spaces (" + std::to_string(c.images.size()) + " vs " +
                     std::to_string(c.tx_roots.size()) + "): " + verdict(c.images_match));
  rep.text.push_back("Gamma_0 parts: " + std::to_string(c.refinement.by_gamma0.size()) +
                     ", invariant: " + verdict(c.gamma0_invariant) + ", refined grading: " + verdict(c.refined_grading));
  describe_switch(c.switched, rep);
  if (c.failure) rep.text.push_back("failure: " + *c.failure);
  for (const auto& line : c.log) rep.detail.push_back("  log: " + line);
  rep.passed = c.ok();
  return rep;
}

}  // namespace gsw::cli
