#pragma once

#include <string>
#include <vector>

namespace mandelmat {

struct CheckResult {
  std::string name;
  int n = 0;
  double statistic = 0.0;  // measured residual / deviation / slack
  bool pass = false;
};

struct VerifyOptions {
  int max_n = 10;
  bool allow_large = false;
};

/// Deterministic invariant sweep over the whole family up to max_n:
/// construction facts, polynomial identities, eigenvector structure,
/// singular spectra. Fixed start vectors and fixed ordering, so two runs
/// produce byte-identical reports.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// Fixed-width table with one line per check and a tail summary.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace mandelmat
