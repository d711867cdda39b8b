#include <doctest.h>

#include "mandelmat/verify.hpp"

using namespace mandelmat;

TEST_CASE("verification sweep passes and is deterministic") {
  VerifyOptions opts;
  opts.max_n = 6;
  const auto first = run_verification(opts);
  CHECK(all_passed(first));
  CHECK(first.size() > 100);

  const auto second = run_verification(opts);
  CHECK(format_report(first) == format_report(second));
}

TEST_CASE("report formatting") {
  const std::vector<CheckResult> results = {
      {"demo/pass", 3, 1.25, true},
      {"demo/fail", 4, -0.5, false},
  };
  const std::string report = format_report(results);
  CHECK(report.find("demo/pass") != std::string::npos);
  CHECK(report.find("FAIL") != std::string::npos);
  CHECK(report.find("1/2 checks passed") != std::string::npos);
  CHECK_FALSE(all_passed(results));
}
