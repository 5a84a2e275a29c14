#pragma once

// The property suite behind `pbm verify`: every structural law the library
// is built on, each checked against an independent route (brute-force
// enumeration, Cayley-table reachability, or exhaustive search) at desk
// scale. Checks are pure and can run in parallel; results are reported in
// a fixed order.

#include <cstdint>
#include <string>
#include <vector>

namespace pbm {

struct VerifyOptions {
  int max_n = 3;           // cap for table/enumeration sweeps (2..4)
  int mu_oracle_max_n = 6; // cap for the mu brute-force comparison
  std::uint64_t seed = 0x5eed0f42u;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<std::string> verification_check_names();

/// Runs the whole suite (optionally on several worker threads) and
/// returns one result per check, in the order of
/// verification_check_names().
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace pbm
