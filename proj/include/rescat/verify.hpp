#pragma once

// Built-in verification suites. Each suite is a list of independent checks
// over fixed rings and module pools; checks run on a worker pool and are
// reported in a fixed order, so the report text does not depend on the
// number of threads.

#include <cstdint>
#include <string>
#include <vector>

#include "rescat/classification.hpp"

namespace rescat {

struct VerifyOptions {
  int threads = 1;
  uint32_t p = 101;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool resource = false;  // aborted by a resource cutoff
  std::string detail;
};

// lemma4, thm1.1, thm1.2, thm1.4, hyper, props
const std::vector<std::string>& suite_names();

// One suite by name, or every suite for "all".
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

// The checks behind acceptance criterion `id` (1..10).
std::vector<CheckResult> run_criterion(int id, const VerifyOptions& opt);

std::string format_report(const std::vector<CheckResult>& results);
// 0 all pass, 3 when a failure came from a resource cutoff, else 1.
int report_exit_code(const std::vector<CheckResult>& results);

// Seeded random homogeneous module with 1-2 generators in degrees 0-1 and
// 1-3 relations of positive degree; never zero.
Module random_module(const GradedRingPtr& R, uint64_t seed);

// Differential K_i -> K_{i-1} of the Koszul complex on the variables,
// bases indexed by lexicographically ordered subsets.
Matrix koszul_differential(const GradedRingPtr& R, int i);

}  // namespace rescat
