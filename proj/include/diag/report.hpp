#pragma once

// The reproduction checks behind `diag report` and the acceptance binary.

#include <ostream>
#include <string>
#include <vector>

namespace diag {

struct CheckResult {
  int id = 0;  // acceptance criterion number, 0 for supplementary checks
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// The eleven acceptance criteria, in order.
std::vector<CheckResult> acceptance_checks();
CheckResult acceptance_check(int id);

/// Acceptance checks plus supplementary ones. `fast` drops the cone suite
/// and the sextic scan.
std::vector<CheckResult> report_checks(bool fast);

/// Prints a table (or JSON lines) and returns 0 iff every check passed.
int run_report(std::ostream& out, bool fast, bool json);

}  // namespace diag
