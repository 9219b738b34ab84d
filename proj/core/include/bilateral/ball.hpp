#pragma once

/**
 * Certified real arithmetic on midpoint-radius balls.
 *
 * A Ball at precision P stores two integers: the midpoint M and the radius R,
 * both in units of 2^-P. The exact value it stands for lies in
 * [(M - R) 2^-P, (M + R) 2^-P]. Every primitive rounds the midpoint by at
 * most one unit and rounds the radius up, so enclosures survive any sequence
 * of operations. Identical inputs give bit-identical midpoints.
 *
 * Binary operations require both operands at the same precision; internal
 * routines work at P plus guard bits and round back with with_precision().
 */

#include <string>

#include "bilateral/cotpoly.hpp"
#include "bilateral/exact.hpp"

namespace bilateral {

struct Precision {
  static constexpr unsigned kMinBits = 64;

  explicit Precision(unsigned b) : bits(b) {
    if (b < kMinBits) throw Error(ErrorCode::Usage, "precision must be at least 64 bits");
  }

  Precision plus(unsigned guard) const { return Precision(bits + guard); }

  unsigned bits;
};

class Ball {
 public:
  Ball() : bits_(Precision::kMinBits) {}
  explicit Ball(Precision prec) : bits_(prec.bits) {}
  Ball(Integer midpoint_ulps, Integer radius_ulps, Precision prec);

  static Ball from_integer(const Integer& n, Precision prec);
  static Ball from_rational(const Rational& r, Precision prec);
  static Ball from_quadratic(const QuadraticNumber& x, Precision prec);

  Precision precision() const { return Precision(bits_); }
  const Integer& midpoint_ulps() const { return mid_; }
  const Integer& radius_ulps() const { return rad_; }

  /// Exact dyadic midpoint and endpoints.
  Rational midpoint() const;
  Rational radius() const;
  Rational lower() const;
  Rational upper() const;
  /// Upper bound on |x| for every x in the ball.
  Rational magnitude() const;

  /// Rounds to another precision; the new ball contains the old one.
  Ball with_precision(Precision prec) const;
  /// Widens the radius by an exact nonnegative bound.
  Ball inflated(const Rational& bound) const;

  bool contains_zero() const { return abs(mid_) <= rad_; }
  bool excludes_zero() const { return !contains_zero(); }
  bool certainly_positive() const { return mid_ > rad_; }
  bool certainly_negative() const { return -mid_ > rad_; }
  bool contains(const Rational& value) const;
  /// True when the two balls share at least one point.
  bool overlaps(const Ball& other) const;
  /// Every point of *this is strictly greater than every point of other.
  bool certainly_greater(const Ball& other) const;
  /// The whole ball lies inside other.
  bool inside(const Ball& other) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& rhs);
  Ball& operator-=(const Ball& rhs);
  Ball& operator*=(const Ball& rhs);
  /// Throws Error{DivisionByZero} when the divisor ball contains 0.
  Ball& operator/=(const Ball& rhs);

  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
  friend Ball operator/(Ball a, const Ball& b) { return a /= b; }

  /// Multiplication by an exact rational (one rounding).
  Ball scaled(const Rational& factor) const;
  Ball pow(unsigned exponent) const;

  /// Midpoint as a decimal string with enough digits to resolve 2^-P.
  std::string midpoint_decimal() const;
  /// Smallest integer e with radius <= 2^e (-P for a zero radius).
  long radius_log2() const;
  /// Nearest double to the midpoint, for diagnostics only.
  double approx() const;

 private:
  void require_same_precision(const Ball& other) const;

  Integer mid_;
  Integer rad_;
  unsigned bits_;
};

/// Ball containing pi with radius <= 2^(4-P). Machin's formula
/// pi/4 = 4 arctan(1/5) - arctan(1/239) with alternating-series remainders.
Ball pi_ball(Precision prec);

/// sqrt(3) from the integer square root of 3 * 4^P.
Ball sqrt3_ball(Precision prec);

/// cot(pi * alpha): exact reduction of alpha into (0, 1/2], Taylor series for
/// sin and cos with Lagrange remainders, then ball division.
/// Integer alpha throws Error{Pole}.
Ball cot_pi_ball(const Rational& alpha, Precision prec);

/// Horner evaluation of an integer polynomial on a ball.
Ball evaluate(const IntPolynomial& p, const Ball& t);

/// coefficient * pi^pi_power.
Ball to_ball(const PiMultiple& value, Precision prec);

/// D^m (pi cot pi z) at z = alpha, i.e. pi^(m+1) Q_m(cot pi alpha), through
/// the cotangent ball (works for every non-integral rational alpha).
Ball cot_derivative_ball(unsigned m, const Rational& alpha, Precision prec);

/// Hurwitz tail zeta(s, x) = sum_{n >= 0} (x + n)^-s for rational x > 0 and
/// integer s >= 2: a head of explicit terms summed exactly, then an
/// Euler-Maclaurin enclosure of the rest.
Ball hurwitz_zeta_ball(int s, const Rational& x, Precision prec);

/// Bilateral sum over the window n in [-N-1, N] around alpha (alpha is not
/// reduced), plus certified enclosures of both omitted tails. Requires
/// |alpha| < N.
Ball bilateral_window_ball(int k, const Rational& alpha, unsigned window, Precision prec);

/// Head length used by s_series_ball at a given precision.
unsigned series_window(Precision prec);

/// S_k(alpha) = sum over all integers n of (n + alpha)^-k, summed with the
/// fractional part of alpha on the window [-N-1, N].
/// Integer alpha throws Error{Pole}; k < 2 throws Error{Domain}.
Ball s_series_ball(int k, const Rational& alpha, Precision prec);

/// 2 (N + min(a, 1 - a))^(1-k) / (k - 1) with a = alpha mod 1: an upper bound
/// on the absolute sum of both tails omitted by the window [-N-1, N].
Rational integral_tail_bound(int k, const Rational& alpha, unsigned window);

/// Both omitted tails of the reduced window, as one enclosure.
Ball series_tail_ball(int k, const Rational& alpha, unsigned window, Precision prec);

/// psi_k(alpha) = (-1)^(k+1) k! zeta(k+1, alpha) for k >= 1 and 0 < alpha < 1.
/// k = 0 throws Error{UnsupportedOrder}; alpha outside (0, 1) Error{Domain}.
Ball polygamma_ball(int k, const Rational& alpha, Precision prec);

}  // namespace bilateral
