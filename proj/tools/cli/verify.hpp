#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylgraded/fin_set.hpp"

namespace weylgraded::cli {

struct VerifyOptions {
  Int window = 3;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // The first few failing checks, for diagnostics.
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

std::vector<std::string> suite_names();

// Runs one invariant sweep; throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

// The requested window clamped to WEYLGRADED_MAX_WINDOW when that is set.
Int capped_window(Int requested);

}  // namespace weylgraded::cli
