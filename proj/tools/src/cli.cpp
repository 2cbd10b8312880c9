#include "gsw/cli/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "gsw/error.hpp"

namespace gsw::cli {
namespace {

using nlohmann::json;

void add_output_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("-v,--verbose", cfg.verbosity, "Print enlargement logs and tables");
}

void add_algebra_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--builtin", cfg.builtin, "witt:p, tpoly:p:N:m, dpow:p:N:m, line:p[:m], joined with '+'");
  sub->add_option("--input", cfg.input, "Algebra as JSON {p, field_degree, dim, m, deg, sc, pmap}");
  sub->add_option("--r", cfg.r, "Exponent r (D^{p^r} semisimple)");
  sub->add_option("--lambda", cfg.lambda, "Admissible lambda as a digit string over the algebra's field");
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}, {"passed", false}};
}

void emit(const RunConfig& cfg, const CommandReport& rep, std::ostream& out) {
  if (cfg.output == "json") {
    const json doc = {{"schema", 1},
                      {"command", cfg.command},
                      {"config", config_json(cfg)},
                      {"results", rep.results},
                      {"verdict", rep.passed ? "pass" : "fail"}};
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& line : rep.text) out << line << '\n';
  if (cfg.verbosity > 0) {
    for (const auto& line : rep.detail) out << line << '\n';
  }
  out << "verdict: " << (rep.passed ? "pass" : "FAIL") << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Grading switching via Laguerre polynomials of derivations, in exact arithmetic", "gswitch"};
  app.require_subcommand(1);

  auto* identities = app.add_subcommand("identities", "Symbolic Laguerre identity suite at p");
  identities->add_option("--p", cfg.p, "Characteristic")->required();
  add_output_flags(identities, cfg);

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient tables for random admissible (a, b)");
  coeffs->add_option("--p", cfg.p, "Characteristic")->required();
  coeffs->add_option("--field-degree", cfg.field_degree, "Draw a, b from F_{p^n}");
  coeffs->add_option("--trials", cfg.trials, "Number of random pairs");
  coeffs->add_option("--seed", cfg.seed, "RNG seed");
  coeffs->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_output_flags(coeffs, cfg);

  auto* sw = app.add_subcommand("switch", "Switch the grading of an algebra along a derivation");
  add_algebra_flags(sw, cfg);
  sw->add_option("--derivation", cfg.derivation, "ad:i, ddx, xddx, dd, zero or @matrix.json")->required();
  sw->add_flag("--special", cfg.special, "Use L^{(a gamma)}(D) (needs D^{p^2} = D^p)");
  add_output_flags(sw, cfg);

  auto* toral = app.add_subcommand("toral", "Compare the switch along ad x with toral switching");
  add_algebra_flags(toral, cfg);
  toral->add_option("--x", cfg.x, "Root vector: e:j (Witt e_j) or b:i (basis index)")->required();
  add_output_flags(toral, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    CommandReport rep;
    if (cfg.command == "identities") rep = cmd_identities(cfg);
    else if (cfg.command == "coeffs") rep = cmd_coeffs(cfg);
    else if (cfg.command == "switch") rep = cmd_switch(cfg);
    else rep = cmd_toral(cfg);
    emit(cfg, rep, out);
    return rep.passed ? kExitOk : kExitFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    CommandReport rep;
    rep.results.push_back(error_json("hypothesis", e.what()));
    rep.text.push_back(std::string("hypothesis failed: ") + e.what());
    emit(cfg, rep, out);
    return kExitFailure;
  } catch (const VerificationError& e) {
    CommandReport rep;
    rep.results.push_back(error_json("verification", e.what()));
    rep.text.push_back(std::string("verification failed: ") + e.what());
    emit(cfg, rep, out);
    return kExitFailure;
  }
}

}  // namespace gsw::cli
