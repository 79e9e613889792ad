#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapcert/rng.hpp"

namespace gapcert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Full deterministic property suite over the analytic modules; runs in well
/// under a minute. Returns one entry per check.
std::vector<CheckResult> run_selftest(std::uint64_t seed = kDefaultSeed);

}  // namespace gapcert
