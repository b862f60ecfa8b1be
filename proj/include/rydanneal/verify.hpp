#pragma once

#include <string>
#include <vector>

#include "rydanneal/result_io.hpp"

namespace rydanneal::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool passed() const;
};

// Normalisation, non-negativity, stored classification against a fresh
// oracle, argmax membership in the MWIS set, density consistency and run
// status.
VerifyReport verify_result(const LoadedResult& result, double tolerance = 1e-6);

}  // namespace rydanneal::cli
