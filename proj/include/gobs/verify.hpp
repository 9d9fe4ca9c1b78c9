#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gobs/rational.hpp"

namespace gobs {

struct SuiteResult {
  std::string name;
  size_t checked = 0;
  size_t failures = 0;
  std::string detail;
  bool pass() const { return failures == 0 && checked > 0; }
};

struct VerifyOptions {
  Rational b_max = Rational(15);
  long long r_max = 50;
  std::vector<int> orders = {1, 2, 3};
  bool widen = false;
  long long cancellation_q_cap = 60;
  int cancellation_probes = 10;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

// Umbrella runner for the exact property suites: parameterization
// equivalence, density bounds, local gaps, tile containment, partly
// partition of unity, and column-group cancellation.
VerifyReport run_verify_suites(const VerifyOptions& opt);

void print_report(std::ostream& os, const VerifyReport& rep);

}  // namespace gobs
