#include "pmvw/verdict.hpp"

namespace pmvw {

std::string method_name(Method m) {
  switch (m) {
    case Method::Analytic: return "analytic";
    case Method::Sampled: return "sampled";
    case Method::Budgeted: return "budgeted";
  }
  return "?";
}

bool CheckReport::all_passed() const {
  for (const auto& r : rows)
    if (!r.passed()) return false;
  return true;
}

long CheckReport::failures() const {
  long n = 0;
  for (const auto& r : rows)
    if (!r.passed()) ++n;
  return n;
}

void CheckReport::merge(const CheckReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string CheckReport::render() const {
  std::string out;
  if (!title.empty()) out += title + "\n";
  for (const auto& r : rows) {
    out += "  " + r.name + " [" + method_name(r.method) + "]: " + std::to_string(r.passes) + "/" +
           std::to_string(r.samples);
    if (r.counterexample) out += "  FAIL " + *r.counterexample;
    out += "\n";
  }
  for (const auto& n : notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace pmvw
