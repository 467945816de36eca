#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetpack/config.hpp"

namespace posetpack {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Seeded randomized invariant suites: closure operator laws, preservation
// of unrelatedness under closure, agreement of the two chain-counting
// routes, the chain-count lower bound, and determinism of the searches.
std::vector<SuiteResult> run_selftest(std::uint64_t seed,
                                      const RunConfig& cfg = {});

}  // namespace posetpack
