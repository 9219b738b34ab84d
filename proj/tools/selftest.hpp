#pragma once

#include <cstddef>

#include "bilateral/serialization.hpp"
#include "cli.hpp"

namespace bilateral::cli {

struct SelftestResult {
  Json json;  // {"config": ..., "suites": [{name, passed, failed, undecided, checks}], "summary": ...}
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;

  bool ok() const { return failed == 0 && undecided == 0; }
};

/// Runs every invariant suite at the given configuration. The output holds no
/// timings or thread-dependent data, so equal configs give equal JSON.
SelftestResult run_selftest(const RunConfig& config);

}  // namespace bilateral::cli
