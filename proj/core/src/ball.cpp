#include "bilateral/ball.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bilateral/zeta.hpp"

namespace bilateral {

namespace {

Integer shl(const Integer& a, unsigned n) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

Integer floor_shr(const Integer& a, unsigned n) {
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

Integer ceil_shr(const Integer& a, unsigned n) {
  Integer r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), n);
  return r;
}

bool divisible_2exp(const Integer& a, unsigned n) {
  return mpz_divisible_2exp_p(a.get_mpz_t(), n) != 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divisible(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

unsigned bit_length(const Integer& a) {
  return a == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

Rational pow2(long e) { return Rational{2}.pow(e); }

void check_order(int k) {
  if (k < 2) throw Error(ErrorCode::Domain, "S_k needs k >= 2, got " + std::to_string(k));
}

// Exact center plus exact error bound; converted to a Ball with one rounding.
struct Enclosure {
  Rational center;
  Rational radius;

  Ball to_ball(Precision prec) const { return Ball::from_rational(center, prec).inflated(radius); }
};

// Euler-Maclaurin for zeta(s, x) = sum_{n>=0} (x+n)^-s, x > 0:
//
//   x^(1-s)/(s-1) + x^-s/2 + sum_{j=1}^{M} B_2j/(2j)! (s)_{2j-1} x^(1-s-2j) + R_M.
//
// Every even derivative of x^-s is positive and decreasing, so |R_M| is at
// most the first omitted term; the enclosure uses twice that. Terms are added
// until the next one falls below `tolerance`.
Enclosure euler_maclaurin_tail(int s, const Rational& x, const Rational& tolerance) {
  if (x.sign() <= 0) throw Error(ErrorCode::Domain, "Hurwitz tail needs x > 0");
  Enclosure out;
  out.center = x.pow(1 - s) / Rational{s - 1} + x.pow(-s) / Rational{2};

  const Rational inv_x2 = (x * x).reciprocal();
  Rational x_power = x.pow(-s - 1);  // x^(1-s-2j) at j = 1
  Integer rising = s;                 // (s)_{2j-1} at j = 1
  Rational previous;
  for (unsigned j = 1;; ++j) {
    const Rational term = bernoulli(2 * j) / Rational(factorial(2 * j)) * Rational(rising) * x_power;
    const Rational magnitude = term.abs();
    if (magnitude < tolerance) {
      out.radius = Rational{2} * magnitude;
      return out;
    }
    if (j > 1 && magnitude > previous) {
      // The asymptotic series turned around before reaching the tolerance;
      // callers choose x large enough that this does not happen.
      throw Error(ErrorCode::InsufficientPrecision, "Euler-Maclaurin tail diverged; increase the window");
    }
    previous = magnitude;
    out.center += term;
    rising *= Integer(s + 2 * static_cast<long>(j) - 1) * Integer(s + 2 * static_cast<long>(j));
    x_power *= inv_x2;
  }
}

Rational tail_tolerance(Precision prec) { return pow2(-static_cast<long>(prec.bits) - 16); }

// sum_{n=0}^{head-1} (x+n)^-s + zeta(s, x + head), all exact except the tail remainder.
Enclosure hurwitz_enclosure(int s, const Rational& x, unsigned head, const Rational& tolerance) {
  Rational sum;
  for (unsigned n = 0; n < head; ++n) sum += (x + Rational{static_cast<long>(n)}).pow(-s);
  Enclosure tail = euler_maclaurin_tail(s, x + Rational{static_cast<long>(head)}, tolerance);
  tail.center += sum;
  return tail;
}

// Both tails of the window [-N-1, N] around alpha:
// zeta(k, N+1+alpha) + (-1)^k zeta(k, N+2-alpha).
Enclosure window_tails(int k, const Rational& alpha, unsigned window, const Rational& tolerance) {
  const Rational n{static_cast<long>(window)};
  Enclosure right = euler_maclaurin_tail(k, n + Rational{1} + alpha, tolerance);
  Enclosure left = euler_maclaurin_tail(k, n + Rational{2} - alpha, tolerance);
  if (k % 2 == 1) left.center = -left.center;
  return {right.center + left.center, right.radius + left.radius};
}

Enclosure window_enclosure(int k, const Rational& alpha, unsigned window, Precision prec) {
  // Pair n = j with n = -j-1; for odd k and alpha = 1/2 each pair is exactly 0.
  Rational head;
  for (unsigned j = 0; j <= window; ++j) {
    const Rational right = Rational{static_cast<long>(j)} + alpha;
    const Rational left = alpha - Rational{static_cast<long>(j) + 1};
    head += right.pow(-k) + left.pow(-k);
  }
  Enclosure tails = window_tails(k, alpha, window, tail_tolerance(prec));
  tails.center += head;
  return tails;
}

}  // namespace

// -------------------------------------------------------------------- Ball

Ball::Ball(Integer midpoint_ulps, Integer radius_ulps, Precision prec)
    : mid_(std::move(midpoint_ulps)), rad_(std::move(radius_ulps)), bits_(prec.bits) {
  if (rad_ < 0) throw Error(ErrorCode::Domain, "negative ball radius");
}

Ball Ball::from_integer(const Integer& n, Precision prec) { return {shl(n, prec.bits), Integer(0), prec}; }

Ball Ball::from_rational(const Rational& r, Precision prec) {
  const Integer scaled = shl(r.numerator(), prec.bits);
  const Integer& den = r.denominator();
  return {floor_div(scaled, den), Integer(divisible(scaled, den) ? 0 : 1), prec};
}

Ball Ball::from_quadratic(const QuadraticNumber& x, Precision prec) {
  Ball out = from_rational(x.rational_part(), prec);
  if (!x.sqrt3_part().is_zero()) out += sqrt3_ball(prec).scaled(x.sqrt3_part());
  return out;
}

Rational Ball::midpoint() const { return Rational(mid_) * pow2(-static_cast<long>(bits_)); }
Rational Ball::radius() const { return Rational(rad_) * pow2(-static_cast<long>(bits_)); }
Rational Ball::lower() const { return Rational(mid_ - rad_) * pow2(-static_cast<long>(bits_)); }
Rational Ball::upper() const { return Rational(mid_ + rad_) * pow2(-static_cast<long>(bits_)); }
Rational Ball::magnitude() const {
  return Rational(Integer(abs(mid_)) + rad_) * pow2(-static_cast<long>(bits_));
}

Ball Ball::with_precision(Precision prec) const {
  if (prec.bits >= bits_) {
    const unsigned shift = prec.bits - bits_;
    return {shl(mid_, shift), shl(rad_, shift), prec};
  }
  const unsigned shift = bits_ - prec.bits;
  const bool exact = divisible_2exp(mid_, shift);
  return {floor_shr(mid_, shift), ceil_shr(rad_, shift) + (exact ? 0 : 1), prec};
}

Ball Ball::inflated(const Rational& bound) const {
  if (bound.sign() < 0) throw Error(ErrorCode::Domain, "negative inflation");
  Ball out = *this;
  out.rad_ += ceil_div(shl(bound.numerator(), bits_), bound.denominator());
  return out;
}

bool Ball::contains(const Rational& value) const {
  const Integer scaled = shl(value.numerator(), bits_);
  const Integer& den = value.denominator();
  return (mid_ - rad_) * den <= scaled && scaled <= (mid_ + rad_) * den;
}

bool Ball::overlaps(const Ball& other) const {
  require_same_precision(other);
  return abs(mid_ - other.mid_) <= rad_ + other.rad_;
}

bool Ball::certainly_greater(const Ball& other) const {
  require_same_precision(other);
  return mid_ - rad_ > other.mid_ + other.rad_;
}

bool Ball::inside(const Ball& other) const {
  require_same_precision(other);
  return mid_ - rad_ >= other.mid_ - other.rad_ && mid_ + rad_ <= other.mid_ + other.rad_;
}

void Ball::require_same_precision(const Ball& other) const {
  if (bits_ != other.bits_) {
    throw Error(ErrorCode::Domain, "ball precision mismatch: " + std::to_string(bits_) + " vs " +
                                       std::to_string(other.bits_));
  }
}

Ball Ball::operator-() const { return {-mid_, rad_, Precision(bits_)}; }

Ball& Ball::operator+=(const Ball& rhs) {
  require_same_precision(rhs);
  mid_ += rhs.mid_;
  rad_ += rhs.rad_;
  return *this;
}

Ball& Ball::operator-=(const Ball& rhs) {
  require_same_precision(rhs);
  mid_ -= rhs.mid_;
  rad_ += rhs.rad_;
  return *this;
}

Ball& Ball::operator*=(const Ball& rhs) {
  require_same_precision(rhs);
  const Integer product = mid_ * rhs.mid_;
  const bool exact = divisible_2exp(product, bits_);
  const Integer err = Integer(abs(mid_)) * rhs.rad_ + Integer(abs(rhs.mid_)) * rad_ + rad_ * rhs.rad_;
  mid_ = floor_shr(product, bits_);
  rad_ = ceil_shr(err, bits_) + (exact ? 0 : 1);
  return *this;
}

Ball& Ball::operator/=(const Ball& rhs) {
  require_same_precision(rhs);
  const Integer b_abs = abs(rhs.mid_);
  if (b_abs <= rhs.rad_) throw Error(ErrorCode::DivisionByZero, "divisor ball contains zero");
  const Integer numerator = shl(mid_, bits_);
  const bool exact = divisible(numerator, rhs.mid_);
  Integer err(0);
  if (rad_ != 0 || rhs.rad_ != 0) {
    // |x/y - A/B| <= (R_A |B| + |A| R_B) / ((|B| - R_B) |B|), in units of 2^-P.
    err = ceil_div(shl(rad_ * b_abs + Integer(abs(mid_)) * rhs.rad_, bits_), (b_abs - rhs.rad_) * b_abs);
  }
  mid_ = floor_div(numerator, rhs.mid_);
  rad_ = err + (exact ? 0 : 1);
  return *this;
}

Ball Ball::scaled(const Rational& factor) const {
  const Integer p = factor.numerator();
  const Integer q = factor.denominator();
  const Integer product = mid_ * p;
  const bool exact = divisible(product, q);
  return {floor_div(product, q), ceil_div(rad_ * Integer(abs(p)), q) + (exact ? 0 : 1), Precision(bits_)};
}

Ball Ball::pow(unsigned exponent) const {
  Ball result = from_integer(Integer(1), Precision(bits_));
  Ball base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Ball::midpoint_decimal() const {
  const unsigned digits = bits_ * 30103u / 100000u + 2;
  const Integer magnitude = abs(mid_);
  const Integer int_part = floor_shr(magnitude, bits_);
  const Integer frac_part = magnitude - shl(int_part, bits_);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
  std::string frac_digits = floor_shr(frac_part * ten_pow, bits_).get_str();
  frac_digits.insert(0, digits - frac_digits.size(), '0');
  while (frac_digits.size() > 1 && frac_digits.back() == '0') frac_digits.pop_back();
  return (mid_ < 0 ? "-" : "") + int_part.get_str() + "." + frac_digits;
}

long Ball::radius_log2() const {
  if (rad_ == 0) return -static_cast<long>(bits_);
  const unsigned len = bit_length(rad_);
  const bool power_of_two = mpz_scan1(rad_.get_mpz_t(), 0) == len - 1;
  return static_cast<long>(power_of_two ? len - 1 : len) - static_cast<long>(bits_);
}

double Ball::approx() const { return midpoint().raw().get_d(); }

// ------------------------------------------------------------- constants

namespace {

// floor(2^W arctan(1/x)) up to the returned error (in units of 2^-W).
std::pair<Integer, Integer> arctan_inverse(unsigned long x, unsigned bits) {
  const Integer x2 = Integer(x) * Integer(x);
  Integer power = floor_div(shl(Integer(1), bits), Integer(x));  // floor(2^W / x^(2j+1))
  Integer sum(0);
  Integer err(0);
  for (unsigned long j = 0; power != 0; ++j) {
    const Integer term = floor_div(power, Integer(2 * j + 1));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    err += 2;  // both floors
    power = floor_div(power, x2);
  }
  err += 1;  // alternating remainder, below one unit once power hits 0
  return {sum, err};
}

}  // namespace

Ball pi_ball(Precision prec) {
  const Precision work = prec.plus(32);
  const auto [a5, e5] = arctan_inverse(5, work.bits);
  const auto [a239, e239] = arctan_inverse(239, work.bits);
  const Ball pi(16 * a5 - 4 * a239, 16 * e5 + 4 * e239, work);
  return pi.with_precision(prec);
}

Ball sqrt3_ball(Precision prec) {
  Integer root;
  const Integer three_scaled = shl(Integer(3), 2 * prec.bits);
  mpz_sqrt(root.get_mpz_t(), three_scaled.get_mpz_t());
  return {root, Integer(1), prec};
}

Ball cot_pi_ball(const Rational& alpha, Precision prec) {
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "cot(pi*alpha) has a pole at alpha = " + alpha.str());
  Rational x = alpha.frac();
  bool negate = false;
  if (x > Rational(1, 2)) {
    x = Rational{1} - x;
    negate = true;
  }
  // 1/sin^2 amplifies errors by up to q^2.
  const Precision work = prec.plus(64 + 2 * bit_length(x.denominator()));
  const Ball theta = pi_ball(work).scaled(x);  // in (0, pi/2], below 2
  const Ball theta2 = theta * theta;
  const Rational tolerance = pow2(-static_cast<long>(work.bits) - 8);

  Ball sin_sum = theta;
  Ball sin_term = theta;
  Ball cos_sum = Ball::from_integer(Integer(1), work);
  Ball cos_term = cos_sum;
  Rational cos_remainder;  // 2^(2j+2) / (2j+2)!
  Rational sin_remainder;  // 2^(2j+3) / (2j+3)!
  for (long j = 1;; ++j) {
    cos_term = (cos_term * theta2).scaled(Rational(-1, (2 * j - 1) * (2 * j)));
    cos_sum += cos_term;
    sin_term = (sin_term * theta2).scaled(Rational(-1, (2 * j) * (2 * j + 1)));
    sin_sum += sin_term;
    cos_remainder = pow2(2 * j + 2) / Rational(factorial(static_cast<unsigned long>(2 * j + 2)));
    sin_remainder = pow2(2 * j + 3) / Rational(factorial(static_cast<unsigned long>(2 * j + 3)));
    if (cos_remainder < tolerance) break;
  }
  const Ball cot = cos_sum.inflated(cos_remainder) / sin_sum.inflated(sin_remainder);
  return (negate ? -cot : cot).with_precision(prec);
}

Ball evaluate(const IntPolynomial& p, const Ball& t) {
  Ball acc(t.precision());
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= t;
    acc += Ball::from_integer(*it, t.precision());
  }
  return acc;
}

Ball to_ball(const PiMultiple& value, Precision prec) {
  if (value.is_zero()) return Ball(prec);
  const auto& c = value.coefficient;
  const unsigned size = bit_length(c.rational_part().numerator()) + bit_length(c.rational_part().denominator()) +
                        bit_length(c.sqrt3_part().numerator()) + bit_length(c.sqrt3_part().denominator());
  const Precision work = prec.plus(64 + size + 3 * static_cast<unsigned>(std::max(value.pi_power, 0)));
  const Ball result = Ball::from_quadratic(c, work) * pi_ball(work).pow(static_cast<unsigned>(value.pi_power));
  return result.with_precision(prec);
}

Ball cot_derivative_ball(unsigned m, const Rational& alpha, Precision prec) {
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "cot(pi*alpha) has a pole at alpha = " + alpha.str());
  const unsigned q_bits = bit_length(alpha.denominator());
  const Precision work = prec.plus(64 + (m + 2) * (q_bits + 3) + bit_length(factorial(m)));
  const Ball t = cot_pi_ball(alpha, work);
  const Ball value = evaluate(q_polynomial(m), t) * pi_ball(work).pow(m + 1);
  return value.with_precision(prec);
}

// ------------------------------------------------------------------ series

unsigned series_window(Precision prec) { return std::max(64u, prec.bits / 4 + 16); }

Ball hurwitz_zeta_ball(int s, const Rational& x, Precision prec) {
  if (s < 2) throw Error(ErrorCode::Domain, "Hurwitz zeta needs s >= 2");
  if (x.sign() <= 0) throw Error(ErrorCode::Domain, "Hurwitz zeta needs x > 0");
  return hurwitz_enclosure(s, x, series_window(prec), tail_tolerance(prec)).to_ball(prec);
}

Ball bilateral_window_ball(int k, const Rational& alpha, unsigned window, Precision prec) {
  check_order(k);
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  if (alpha.abs() >= Rational{static_cast<long>(window)}) {
    throw Error(ErrorCode::Domain, "window too short for alpha = " + alpha.str());
  }
  return window_enclosure(k, alpha, window, prec).to_ball(prec);
}

Ball s_series_ball(int k, const Rational& alpha, Precision prec) {
  check_order(k);
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  return bilateral_window_ball(k, alpha.frac(), series_window(prec), prec);
}

Rational integral_tail_bound(int k, const Rational& alpha, unsigned window) {
  check_order(k);
  const Rational a = alpha.frac();
  const Rational nearest = std::min(a, Rational{1} - a);
  return Rational{2} * (Rational{static_cast<long>(window)} + nearest).pow(1 - k) / Rational{k - 1};
}

Ball series_tail_ball(int k, const Rational& alpha, unsigned window, Precision prec) {
  check_order(k);
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  return window_tails(k, alpha.frac(), window, tail_tolerance(prec)).to_ball(prec);
}

Ball polygamma_ball(int k, const Rational& alpha, Precision prec) {
  if (k == 0) throw Error(ErrorCode::UnsupportedOrder, "digamma (k = 0) is not supported");
  if (k < 0) throw Error(ErrorCode::Domain, "polygamma order must be positive");
  if (alpha.sign() <= 0 || alpha >= Rational{1}) {
    throw Error(ErrorCode::Domain, "polygamma needs 0 < alpha < 1, got " + alpha.str());
  }
  // A different head length than s_series_ball, so reflection checks compare
  // two distinct truncations.
  const Rational scale = Rational(factorial(static_cast<unsigned long>(k))) * Rational{k % 2 == 1 ? 1 : -1};
  const Rational tolerance = tail_tolerance(prec) / scale.abs();
  Enclosure zeta = hurwitz_enclosure(k + 1, alpha, series_window(prec) + 17, tolerance);
  return Enclosure{zeta.center * scale, zeta.radius * scale.abs()}.to_ball(prec);
}

}  // namespace bilateral
