#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gsw::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Largest p accepted by `identities`.
inline constexpr unsigned kMaxIdentityPrime = 31;

struct RunConfig {
  std::string command;
  unsigned p = 0;
  unsigned field_degree = 2;
  unsigned trials = 50;
  std::uint64_t seed = 0;
  std::string builtin, input, derivation, x;
  std::optional<unsigned> r;
  std::string lambda;  // digit string over the algebra's field
  bool special = false;
  std::string output = "text";
  unsigned jobs = 1;
  int verbosity = 0;
};

struct CommandReport {
  nlohmann::json results = nlohmann::json::array();
  bool passed = false;
  std::vector<std::string> text;  // human-readable summary
  std::vector<std::string> detail;  // printed with --verbose
};

/// Each command validates its part of the config (InvalidInput) and lets
/// HypothesisError and VerificationError escape.
CommandReport cmd_identities(const RunConfig& cfg);
CommandReport cmd_coeffs(const RunConfig& cfg);
CommandReport cmd_switch(const RunConfig& cfg);
CommandReport cmd_toral(const RunConfig& cfg);

/// The config fields that affect results (no jobs, no verbosity).
nlohmann::json config_json(const RunConfig& cfg);

/// Parses arguments, runs the command and writes the report to `out`.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsw::cli
