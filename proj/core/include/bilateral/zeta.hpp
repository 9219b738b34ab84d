#pragma once

// Bernoulli numbers, even zeta values, and the zeta series obtained from the
// Taylor expansion of pi cot(pi z) around 0:
//
//   pi cot(pi z) = 1/z - 2 sum_{n>=1} zeta(2n) z^(2n-1),   0 < |z| < 1.
//
// Differentiating 2m (resp. 2m+1) times and solving for the remaining series
// gives, with t = cot(pi z),
//
//   E_m(z) = sum_{n>m} zeta(2n) (2n-1)...(2n-2m)   z^(2n-2m-1)
//          =  (2m)!  / (2 z^(2m+1)) - pi^(2m+1) Q_2m(t)   / 2
//   O_m(z) = sum_{n>m} zeta(2n) (2n-1)...(2n-2m-1) z^(2n-2m-2)
//          = -(2m+1)! / (2 z^(2m+2)) - pi^(2m+2) Q_2m+1(t) / 2

#include <array>
#include <optional>
#include <string_view>

#include "bilateral/ball.hpp"
#include "bilateral/exact.hpp"

namespace bilateral {

/// B_n with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0. Memoized.
Rational bernoulli(unsigned n);

/// zeta(2n) = coefficient * pi^(2n).
struct ZetaEvenValue {
  unsigned n = 0;
  Rational coefficient;
};

/// Euler: zeta(2n) = (-1)^(n-1) 2^(2n-1) B_2n pi^(2n) / (2n)!. Requires n >= 1.
ZetaEvenValue zeta_even(unsigned n);

/// Ball of pi cot(pi z) - [1/z - 2 sum_{n=1}^{terms} zeta(2n) z^(2n-1)] with the
/// omitted tail folded into the radius; contains 0 when the expansion holds.
/// z = 0 throws Error{Pole}; |z| >= 1 throws Error{Domain}.
Ball cot_taylor_residual(const Rational& z, unsigned terms, Precision prec);

enum class SeriesParity { EvenOrder, OddOrder };

std::string_view to_string(SeriesParity parity);

/// Direct summation of E_m(z) or O_m(z) with exact zeta(2n) coefficients and a
/// certified geometric tail. Requires m >= 1 and 0 < |z| < 1.
Ball zeta_series_sum(unsigned m, const Rational& z, SeriesParity parity, Precision prec);

/// rational_part + pi_coefficient * pi^pi_power.
struct SeriesDecomposition {
  Rational rational_part;
  QuadraticNumber pi_coefficient;
  int pi_power = 0;
};

Ball to_ball(const SeriesDecomposition& value, Precision prec);

/// Exact closed form of E_m(z) / O_m(z). Needs z with denominator 2, 3, 4 or 6
/// (Error{ExactModeUnavailable} otherwise) and 0 < |z| < 1.
SeriesDecomposition zeta_series_closed(unsigned m, const Rational& z, SeriesParity parity);

/// The same closed form evaluated through the cotangent ball; any rational z.
Ball zeta_series_closed_ball(unsigned m, const Rational& z, SeriesParity parity, Precision prec);

enum class SeriesCategory { Null, Rational, PiMultiple, Mixed, Undetermined };

std::string_view to_string(SeriesCategory category);

struct AuditEntry {
  unsigned m = 0;
  Rational z;
  SeriesParity parity = SeriesParity::EvenOrder;
  Ball direct;
  std::optional<SeriesDecomposition> closed;  // absent outside exact mode
  Ball closed_ball;
  bool agree = false;        // direct and closed enclosures overlap
  SeriesCategory category = SeriesCategory::Undetermined;
  SeriesCategory claimed = SeriesCategory::PiMultiple;  // category asserted by the audited claim
  bool match = false;        // category == claimed
};

struct AuditReport {
  std::array<AuditEntry, 2> entries;  // even order, odd order

  bool all_agree() const { return entries[0].agree && entries[1].agree; }
};

/// Evaluates both zeta series at (m, z) by direct summation and by the closed
/// form, classifies the value and compares it with the claim under audit:
/// both series are pure algebraic multiples of pi^(2m+1) / pi^(2m+2), except
/// the even series at z = +-1/2, which is claimed to vanish. Mismatches are
/// reported, never corrected.
AuditReport zeta_series_audit(unsigned m, const Rational& z, Precision prec);

}  // namespace bilateral
