#pragma once

/**
 * Exact arithmetic used by the closed-form side of every check.
 *
 *  - Rational: reduced fraction of arbitrary-precision integers, zero is 0/1.
 *  - QuadraticNumber: a + b*sqrt(3) with a, b rational. The field Q(sqrt 3)
 *    holds cot(pi*a/q) for every q in {2, 3, 4, 6}.
 *  - IntPolynomial: dense integer polynomial in one variable.
 *
 * Integers are GMP integers throughout; coefficients of the cotangent
 * polynomials grow factorially so there is no fixed-width fast path.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bilateral/error.hpp"

namespace bilateral {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p/q" or "p" (optional sign on p, q > 0 not required to be reduced).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer <= *this.
  Integer floor() const;
  /// *this - floor(*this), always in [0, 1).
  Rational frac() const;

  Rational abs() const;
  Rational reciprocal() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { Add, Sub, Mul, Div };

/// Single entry point for the four field operations; Div by zero throws
/// Error{DivisionByZero}.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Element rat + coef_sqrt3 * sqrt(3) of Q(sqrt 3).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long value) : rat_(value) {}             // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational rat, Rational coef_sqrt3)
      : rat_(std::move(rat)), sqrt3_(std::move(coef_sqrt3)) {}

  static QuadraticNumber sqrt3() { return {Rational{0}, Rational{1}}; }

  /// Parses the serialized form "p/q + r/s*sqrt3"; a bare rational is accepted too.
  static QuadraticNumber parse(std::string_view text);

  const Rational& rational_part() const { return rat_; }
  const Rational& sqrt3_part() const { return sqrt3_; }

  bool is_zero() const { return rat_.is_zero() && sqrt3_.is_zero(); }
  bool is_rational() const { return sqrt3_.is_zero(); }

  /// Exact sign of the real number rat + coef*sqrt(3).
  int sign() const;

  QuadraticNumber conjugate() const { return {rat_, -sqrt3_}; }
  /// rat^2 - 3 coef^2; nonzero for every nonzero element.
  Rational norm() const;

  QuadraticNumber operator-() const { return {-rat_, -sqrt3_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.rat_ == b.rat_ && a.sqrt3_ == b.sqrt3_;
  }

  /// "p/q + r/s*sqrt3" with both parts always present.
  std::string str() const;

 private:
  Rational rat_;
  Rational sqrt3_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

QuadraticNumber quad_arith(const QuadraticNumber& x, const QuadraticNumber& y, ArithOp op);

/// Dense polynomial sum c_i t^i with integer coefficients; index = degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (then no coefficients are stored).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i (zero past the degree).
  Integer coefficient(std::size_t i) const;
  Integer leading_coefficient() const;

  IntPolynomial derivative() const;
  /// p(-t)
  IntPolynomial reflect() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  Rational evaluate(const Rational& t) const;
  QuadraticNumber evaluate(const QuadraticNumber& t) const;

  /// Human-readable, lowest degree first, e.g. "-1 - t^2".
  std::string str() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// True when cot(pi*alpha) lies in Q(sqrt 3), i.e. alpha is non-integral with
/// reduced denominator 2, 3, 4 or 6.
bool has_exact_cot(const Rational& alpha);

/// Exact cot(pi*alpha). Integer alpha throws Error{Pole}; any other
/// denominator outside {2, 3, 4, 6} throws Error{ExactModeUnavailable}.
QuadraticNumber cot_exact(const Rational& alpha);

Integer factorial(unsigned long n);

}  // namespace bilateral
