#pragma once

#include "pmvw/config.hpp"
#include "pmvw/verdict.hpp"

namespace pmvw {

struct SuiteResult {
  std::string name;
  CheckReport report;
  double wall_ms = 0;  // console metadata; excluded from the canonical document

  long checks() const { return static_cast<long>(report.rows.size()); }
  long failures() const { return report.failures(); }
  long passes() const { return checks() - failures(); }
};

/// One run of the selected suites. The canonical document is the
/// machine-readable artifact: exact values only, no wall-clock data, ordered
/// by suite name, so identical (config, seed) runs are byte-identical.
struct RunReport {
  std::string algebra;
  std::string carrier;
  std::string unit;
  std::uint64_t seed = 0;
  long samples = 0;
  std::string budgets;
  std::vector<SuiteResult> suites;

  long total_checks() const;
  long total_failures() const;
  bool ok() const { return total_failures() == 0; }

  std::string render_document() const;
  std::string render_timing() const;
};

/// Executes the configured suites against the configured algebra.
RunReport run(const WorkbenchConfig& config);

}  // namespace pmvw
