#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diskemb {

// One randomized property check. `max_residual` is the worst violation seen
// (0 when clean); boolean properties report any violation as 1.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  double cone_constant = 0.1;
  int threads = 1;
};

// Trial t always draws from derive_seed(seed, t), so results are identical
// for every thread count.
std::vector<CheckResult> verify_geometry(const VerifyOptions& opt);
std::vector<CheckResult> verify_disks(const VerifyOptions& opt);
std::vector<CheckResult> verify_equivalence(const VerifyOptions& opt);
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

}  // namespace diskemb
