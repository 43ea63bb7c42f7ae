#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Seeded property sweeps shared by the CLI `verify` command and the tests.

namespace srlie {

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  bool pass = false;
};

/// Known suites: ode, roundtrip, covering, splitting, monotonicity,
/// shooting, and "all" (everything but shooting unless deep is set).
/// Deterministic for a fixed (count, seed). Throws std::invalid_argument on
/// an unknown suite name.
std::vector<SuiteResult> run_verification(const std::string& suite, int count,
                                          std::uint64_t seed,
                                          bool deep = false);

}  // namespace srlie
