#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cylwalk/lattice.hpp"
#include "cylwalk/numeric.hpp"

namespace cylwalk {

/// Every valid configuration with r walkers on the M-cylinder with length N.
std::vector<CylinderConfig> valid_configs(int M, int N, int r);

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  bool ok() const { return failed == 0; }
  void record(bool ok, const std::string& what);
};

/// Suite names: "lgv", "circulant", "trig", "asym". Results are a pure
/// function of (name, seed, tol).
SuiteResult run_suite(const std::string& name, std::uint64_t seed, const Tolerance& tol = {});

/// "all" expands to every suite in the order above.
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace cylwalk
