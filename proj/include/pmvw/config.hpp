#pragma once

#include <string>
#include <vector>

#include "pmvw/pmv.hpp"

namespace pmvw {

/// Names of the suites `run` knows, in report order.
const std::vector<std::string>& all_suite_names();

/// A fully resolved run configuration. A fixed (config, seed) pair makes the
/// whole run deterministic byte for byte.
struct WorkbenchConfig {
  std::string carrier_text;
  std::string unit_text;
  PmvAlgebraPtr algebra;
  std::vector<std::string> suites;  // validated, deduplicated, sorted
  long samples = 500;
  std::uint64_t seed = 1;
  long sample_size = 6;
  Int infinitesimal_budget = 100;
  Int ideal_depth = 8;
  Int root_bound = 6;
};

/// Parses the carrier expression grammar:
///   Z | Q | O | plaut | H(hspec) | lex(hspec, carrier) | product(c1, ..., ck)
/// with hspec = cyclic:n | quadratic:p,q,d.
LGroupPtr parse_carrier(std::string_view text);

/// Parses the declarative key/value config with [algebra], [suites],
/// [sampling] and [budgets] sections. Errors carry 1-based line numbers.
WorkbenchConfig parse_config(const std::string& text);

WorkbenchConfig parse_config_file(const std::string& path);

}  // namespace pmvw
