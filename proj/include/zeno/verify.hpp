#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zeno::verify {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

/// The cross-validation suite: bridge identities, correction gates, convergence
/// and dominance checks. Order matches the acceptance criteria.
const std::vector<Check>& checks();

}  // namespace zeno::verify
