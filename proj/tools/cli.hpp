#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bilateral/exact.hpp"

namespace bilateral::cli {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  unsigned precision_bits = 128;
  unsigned precision_cap = 1024;
  int k_min = 2;
  int k_max = 11;
  int q_max = 12;
  OutputFormat format = OutputFormat::Json;
  Rational grid_step = Rational(1, 10);

  /// Throws Error{Usage} unless 64 <= precision_bits <= precision_cap,
  /// 2 <= k_min <= k_max <= 64, q_max >= 2 and grid_step = 1/n with n >= 2.
  void validate() const;
};

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_eval(const std::string& k, const std::string& alpha, const RunConfig& config, std::ostream& out,
             std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_zeta_audit(const std::string& m, const std::string& z, const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bilateral::cli
