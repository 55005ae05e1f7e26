#pragma once

#include <string>
#include <vector>

namespace parfus {

// One verified identity: how many instances were checked and, on failure,
// a human-readable witness.
struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string counterexample;  // empty when pass
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  long total_cases() const {
    long t = 0;
    for (const auto& c : checks) t += c.cases;
    return t;
  }
};

}  // namespace parfus
