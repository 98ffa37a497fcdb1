#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pmvw {

/// How a verdict was obtained. Sampled/budgeted verdicts are evidence, not
/// proofs; analytic verdicts are exact.
enum class Method { Analytic, Sampled, Budgeted };

std::string method_name(Method m);

/// Outcome of a single named check over a batch of sampled inputs.
struct CheckRow {
  std::string name;
  long samples = 0;
  long passes = 0;
  std::optional<std::string> counterexample;  // exact operand dump of first failure
  Method method = Method::Sampled;

  bool passed() const { return passes == samples && !counterexample; }
};

/// A bundle of check rows plus free-form notes (informational verdicts that
/// are not pass/fail, e.g. a commutativity witness on a pseudo algebra).
struct CheckReport {
  std::string title;
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;

  bool all_passed() const;
  long failures() const;
  void add(CheckRow row) { rows.push_back(std::move(row)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const CheckReport& other);
  std::string render() const;
};

}  // namespace pmvw
