#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bilateral {

enum class ErrorCode {
  DivisionByZero,
  ExactModeUnavailable,  // denominator outside {2, 3, 4, 6}; fall back to numerics
  Domain,
  Pole,                  // integer argument of S_k or cot(pi x)
  UnsupportedOrder,
  InsufficientPrecision,
  Usage,
};

std::string_view to_string(ErrorCode code);

/// Every failure the library reports carries one of the codes above so callers
/// can branch on it (e.g. retry at higher precision, or switch to numerics).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bilateral
