#pragma once
/*
 * Pass/fail check lists produced by validators and verification suites.
 */

#include <string>
#include <utility>
#include <vector>

namespace qaff {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // failure evidence, empty on pass
  std::string value;    // optional computed value worth reporting
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, std::string witness = "",
           std::string value = "") {
    checks.push_back(Check{name, pass, pass ? "" : std::move(witness), std::move(value)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool allPass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failCount() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
};

}  // namespace qaff
