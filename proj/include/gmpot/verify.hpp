#pragma once

#include <string>
#include <vector>

namespace gmpot {

/// Outcome of one invariant check.
struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Run one of the named invariant suites: "core", "wavefunction", "algebra",
/// "susyqm", "numerics", or "all". Throws DomainError for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

}  // namespace gmpot
