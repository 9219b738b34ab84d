#pragma once

// Classification of S_k(alpha) for rational non-integral alpha, and the
// machine checks around it.
//
// S_k(alpha) is an algebraic multiple of pi^k, and it vanishes exactly when k
// is odd and alpha is a half-integer. A certificate pairs that verdict with a
// certified numeric enclosure of the series and, where available, the exact
// closed form c * pi^k.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilateral/ball.hpp"
#include "bilateral/cotpoly.hpp"
#include "bilateral/exact.hpp"

namespace bilateral {

enum class NullityReason {
  OddOrderHalfInteger,  // k odd and 2 alpha odd: the series vanishes
  NonNull,              // every other (k, alpha): nonzero algebraic multiple of pi^k
};

std::string_view to_string(NullityReason reason);

struct NullityVerdict {
  bool is_null = false;
  NullityReason reason = NullityReason::NonNull;

  friend bool operator==(const NullityVerdict&, const NullityVerdict&) = default;
};

/// is_null = k odd and 2*alpha an odd integer. Integer alpha throws
/// Error{Pole}; k < 2 throws Error{Domain}.
NullityVerdict classify(int k, const Rational& alpha);

enum class CertificateStatus { Verified, Failed, Undecided };

std::string_view to_string(CertificateStatus status);

struct Certificate {
  int k = 0;
  Rational alpha;
  NullityVerdict verdict;
  std::optional<PiMultiple> exact;  // present for denominators 2, 3, 4, 6
  Ball numeric;                     // direct series enclosure
  Ball closed_form;                 // exact * pi^k, or the cotangent-ball closed form
  bool pi_power_check = false;      // numeric and closed_form overlap
  bool separation = false;          // null: numeric contains 0; otherwise excludes 0
  unsigned precision_bits = 0;
  CertificateStatus status = CertificateStatus::Failed;
  std::string note;

  bool verified() const { return pi_power_check && separation; }
};

/// One certification attempt at a fixed precision. A non-null verdict whose
/// ball still contains 0 throws Error{InsufficientPrecision}.
Certificate certify(int k, const Rational& alpha, Precision prec);

/// Doubles the precision from prec up to cap while the separation is
/// inconclusive; at the cap the certificate comes back Undecided (never null).
Certificate certify(int k, const Rational& alpha, Precision prec, Precision cap);

struct ScanOptions {
  int k_min = 2;
  int k_max = 11;
  int q_max = 12;
  unsigned precision_bits = 128;
  unsigned precision_cap = 1024;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct NullCase {
  int k = 0;
  Rational alpha;
};

struct ScanReport {
  std::vector<Certificate> certificates;  // ordered by (k, q, a)
  std::size_t verified = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;
  std::vector<NullCase> null_cases;
  std::size_t disagreements = 0;  // classify verdict not confirmed numerically

  std::size_t cells() const { return certificates.size(); }
  bool all_verified() const { return failed == 0 && undecided == 0; }
};

/// Certifies every (k, a/q) with k in [k_min, k_max], 1 <= a < q <= q_max and
/// gcd(a, q) = 1. Cells run in parallel; the report order is deterministic.
/// Invalid ranges throw Error{Usage}.
ScanReport scan(const ScanOptions& options);

/// (k-1)! S_k(alpha) - psi_{k-1}(1 - alpha) - (-1)^k psi_{k-1}(alpha); contains 0
/// when the reflection identity holds. Requires 0 < alpha < 1.
Ball reflection_residual(int k, const Rational& alpha, Precision prec);

/// [1/alpha + (-1)^k/(k-1)! D^(k-1)(pi cot pi z)|alpha] - S_k(alpha): the
/// discrepancy of the formula 1/alpha + ... once proposed for S_k. Excludes 0
/// for the inputs it gets wrong.
Ball gmr_formula_residual(int k, const Rational& alpha, Precision prec);

struct DerivativeCheck {
  int k = 0;             // odd order 2m+1
  Rational alpha;
  Rational step;         // h
  Ball residual;         // [S_k(a+h) - S_k(a-h)]/(2h) + k S_{k+1}(a)
  Rational tolerance;    // C h^2
  bool pass = false;
};

/// Central-difference check of d/dz S_{2m+1} = -(2m+1) S_{2m+2} at alpha.
/// C = k(k+1)(k+2)/6 * max S_{k+3} over the endpoints alpha +- h (S_{k+3} is
/// convex there), evaluated at 64 bits.
DerivativeCheck derivative_check(unsigned m, const Rational& alpha, const Rational& step, Precision prec);

enum class PropertyKind { Periodicity, Positivity, Monotonicity, DerivativeIdentity };
enum class PropertyStatus { Pass, Fail, Vacuous };

std::string_view to_string(PropertyKind kind);
std::string_view to_string(PropertyStatus status);

struct PropertyCheck {
  PropertyKind kind = PropertyKind::Periodicity;
  int k = 0;
  Rational alpha;             // the first grid point involved
  PropertyStatus status = PropertyStatus::Fail;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;

  bool all_passed() const { return failed == 0; }
};

/// The grid {j * step : 0 < j * step < 1}; step must be 1/n with n >= 2, any
/// other step throws Error{Domain}.
std::vector<Rational> unit_grid(const Rational& step);

/// Periodicity (unreduced windows at alpha and alpha + 1 overlap), positivity of
/// even k, strict decrease of odd k along the grid, and the derivative identity
/// for odd k, for every 2 <= k <= k_max.
PropertyReport property_audit(int k_max, const Rational& grid_step, Precision prec);

}  // namespace bilateral
