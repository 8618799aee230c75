#pragma once

#include <string>
#include <vector>

namespace fracshift {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Oracle suites behind the CLI `verify` command. Suites: "im", "mellin",
/// "fock", "supershift", or "all".
std::vector<CheckResult> run_verify_suite(const std::string& suite, double rel_tol);

}  // namespace fracshift
