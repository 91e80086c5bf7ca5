#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeboole/core.hpp"
#include "freeboole/graphs.hpp"

namespace freeboole {

/// One CLI invocation.  Budgets default from the library constants; the
/// FREEBOOLE_BUDGET_DEFAULT environment variable raises the enumeration caps.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;

  std::optional<Degree> n;
  std::uint64_t anticlique_cap = kDefaultAnticliqueCap;
  int member_budget = 20;
  int atom_budget = 6;
  std::uint64_t seed = 1729;

  // compose
  std::string compose_op = "free";  // product | free | amalgam
  std::string shared_path;
  std::vector<std::string> embeddings;  // "FACTOR:v1,v2,..." with 1-based ids

  // algebra
  std::string algebra_kind = "ba";  // ba | bc

  // topology
  std::optional<int> nary;
  bool cmpn = false;
};

struct RunResult {
  int exit_code = 0;    // 0 ok, 1 a theorem check failed, 2 budget/parse error
  std::string output;   // JSON report, or wire format for `perp`
};

/// Executes one command.  Budget and parse failures surface as exceptions for
/// the caller to map to exit code 2.
RunResult run(const RunConfig& config);

/// Reads FREEBOOLE_BUDGET_DEFAULT; engaged when set to a positive integer.
std::optional<std::uint64_t> budget_override_from_env();

}  // namespace freeboole
