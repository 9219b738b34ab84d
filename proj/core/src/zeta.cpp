#include "bilateral/zeta.hpp"

#include <mutex>
#include <vector>

#include "bilateral/cotpoly.hpp"

namespace bilateral {

namespace {

void check_open_unit(const Rational& z) {
  if (z.is_zero()) throw Error(ErrorCode::Pole, "z = 0: the 1/z term is singular");
  if (z.abs() >= Rational{1}) throw Error(ErrorCode::Domain, "zeta series need |z| < 1, got " + z.str());
}

Rational pow2(long e) { return Rational{2}.pow(e); }

// (2n-1)(2n-2)...(2n-len)
Integer falling(long n, unsigned len) {
  Integer out(1);
  for (unsigned i = 1; i <= len; ++i) out *= Integer(2 * n - static_cast<long>(i));
  return out;
}

unsigned falling_length(unsigned m, SeriesParity parity) {
  return parity == SeriesParity::EvenOrder ? 2 * m : 2 * m + 1;
}

long z_exponent(long n, unsigned m, SeriesParity parity) {
  return parity == SeriesParity::EvenOrder ? 2 * n - 2 * static_cast<long>(m) - 1
                                           : 2 * n - 2 * static_cast<long>(m) - 2;
}

}  // namespace

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational{1}};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational sum;
    Integer binom(1);  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      if (!cache[j].is_zero()) sum += Rational(binom) * cache[j];
      binom = binom * Integer(m + 1 - j) / Integer(j + 1);
    }
    cache.push_back(-sum / Rational{static_cast<long>(m) + 1});
  }
  return cache[n];
}

ZetaEvenValue zeta_even(unsigned n) {
  if (n == 0) throw Error(ErrorCode::Domain, "zeta_even needs n >= 1");
  const long two_n = 2 * static_cast<long>(n);
  Rational coefficient = pow2(two_n - 1) * bernoulli(2 * n) / Rational(factorial(2 * n));
  if (n % 2 == 0) coefficient = -coefficient;
  return {n, coefficient};
}

Ball cot_taylor_residual(const Rational& z, unsigned terms, Precision prec) {
  check_open_unit(z);
  const Precision work = prec.plus(32 + 2 * terms / 16);
  const Ball pi = pi_ball(work);
  const Ball pi2 = pi * pi;

  Ball rhs = Ball::from_rational(z.reciprocal(), work);
  Ball pi_power = Ball::from_integer(Integer(1), work);
  for (unsigned n = 1; n <= terms; ++n) {
    pi_power *= pi2;
    const Rational factor = Rational{2} * zeta_even(n).coefficient * z.pow(2 * static_cast<long>(n) - 1);
    rhs -= pi_power.scaled(factor);
  }
  // For n > terms, zeta(2n) <= 1 + 2^(-2N-1).
  const Rational z2 = z * z;
  const long big_n = static_cast<long>(terms);
  const Rational tail = Rational{2} * (Rational{1} + pow2(-2 * big_n - 1)) * z.abs().pow(2 * big_n + 1) /
                        (Rational{1} - z2);

  const Ball lhs = pi * cot_pi_ball(z, work);
  return (lhs - rhs).inflated(tail).with_precision(prec);
}

std::string_view to_string(SeriesParity parity) {
  return parity == SeriesParity::EvenOrder ? "even_order" : "odd_order";
}

Ball zeta_series_sum(unsigned m, const Rational& z, SeriesParity parity, Precision prec) {
  if (m == 0) throw Error(ErrorCode::Domain, "zeta series need m >= 1");
  check_open_unit(z);
  const Precision work = prec.plus(64);
  const Rational tolerance = pow2(-static_cast<long>(work.bits));
  const unsigned len = falling_length(m, parity);
  const Rational z2 = z * z;

  const Ball pi2 = [&] {
    const Ball pi = pi_ball(work);
    return pi * pi;
  }();
  Ball pi_power = pi2.pow(m + 1);
  Ball sum(work);
  for (long n = static_cast<long>(m) + 1;; ++n) {
    const Integer ff = falling(n, len);
    const Rational weight = Rational(ff) * z.pow(z_exponent(n, m, parity));
    if (2 * n > 4 * static_cast<long>(m)) {
      // Term ratio <= z^2 ff(n+1)/ff(n) for every later index (zeta(2n)
      // decreases and the factorial ratio decreases in n). Once that is below
      // 1/2 the rest is at most twice this term, itself below 2 * weight.
      const Rational ratio = z2 * Rational(falling(n + 1, len)) / Rational(ff);
      const Rational tail = Rational{4} * weight.abs();
      if (ratio < Rational(1, 2) && tail < tolerance) {
        return sum.inflated(tail).with_precision(prec);
      }
    }
    sum += pi_power.scaled(zeta_even(static_cast<unsigned>(n)).coefficient * weight);
    pi_power *= pi2;
  }
}

Ball to_ball(const SeriesDecomposition& value, Precision prec) {
  return Ball::from_rational(value.rational_part, prec) + to_ball(PiMultiple{value.pi_coefficient, value.pi_power}, prec);
}

SeriesDecomposition zeta_series_closed(unsigned m, const Rational& z, SeriesParity parity) {
  if (m == 0) throw Error(ErrorCode::Domain, "zeta series need m >= 1");
  check_open_unit(z);
  const QuadraticNumber t = cot_exact(z);
  const unsigned order = parity == SeriesParity::EvenOrder ? 2 * m : 2 * m + 1;
  const Rational half(1, 2);
  Rational rational_part = Rational(factorial(order)) * half / z.pow(static_cast<long>(order) + 1);
  if (parity == SeriesParity::OddOrder) rational_part = -rational_part;
  const QuadraticNumber pi_coefficient = -(q_polynomial(order).evaluate(t) * QuadraticNumber(half));
  return {rational_part, pi_coefficient, static_cast<int>(order) + 1};
}

Ball zeta_series_closed_ball(unsigned m, const Rational& z, SeriesParity parity, Precision prec) {
  if (m == 0) throw Error(ErrorCode::Domain, "zeta series need m >= 1");
  check_open_unit(z);
  const unsigned order = parity == SeriesParity::EvenOrder ? 2 * m : 2 * m + 1;
  Rational rational_part = Rational(factorial(order)) / (Rational{2} * z.pow(static_cast<long>(order) + 1));
  if (parity == SeriesParity::OddOrder) rational_part = -rational_part;
  const Precision work = prec.plus(8);
  const Ball derivative = cot_derivative_ball(order, z, work);
  return (Ball::from_rational(rational_part, work) - derivative.scaled(Rational(1, 2))).with_precision(prec);
}

std::string_view to_string(SeriesCategory category) {
  switch (category) {
    case SeriesCategory::Null: return "null";
    case SeriesCategory::Rational: return "rational";
    case SeriesCategory::PiMultiple: return "pi_multiple";
    case SeriesCategory::Mixed: return "mixed";
    case SeriesCategory::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

SeriesCategory categorize(bool rational_nonzero, bool pi_nonzero) {
  if (rational_nonzero && pi_nonzero) return SeriesCategory::Mixed;
  if (rational_nonzero) return SeriesCategory::Rational;
  if (pi_nonzero) return SeriesCategory::PiMultiple;
  return SeriesCategory::Null;
}

AuditEntry audit_one(unsigned m, const Rational& z, SeriesParity parity, Precision prec) {
  AuditEntry entry;
  entry.m = m;
  entry.z = z;
  entry.parity = parity;
  entry.direct = zeta_series_sum(m, z, parity, prec);
  if (has_exact_cot(z)) {
    entry.closed = zeta_series_closed(m, z, parity);
    entry.closed_ball = to_ball(*entry.closed, prec);
    entry.category = categorize(!entry.closed->rational_part.is_zero(), !entry.closed->pi_coefficient.is_zero());
  } else {
    entry.closed_ball = zeta_series_closed_ball(m, z, parity, prec);
    // The rational part is exact; the pi part is known only as a ball.
    const unsigned order = falling_length(m, parity);
    const Ball pi_part = cot_derivative_ball(order, z, prec);
    entry.category = pi_part.excludes_zero() ? SeriesCategory::Mixed : SeriesCategory::Undetermined;
  }
  entry.agree = entry.direct.overlaps(entry.closed_ball);
  const bool half = z.abs() == Rational(1, 2);
  entry.claimed = (parity == SeriesParity::EvenOrder && half) ? SeriesCategory::Null : SeriesCategory::PiMultiple;
  entry.match = entry.category == entry.claimed;
  return entry;
}

}  // namespace

AuditReport zeta_series_audit(unsigned m, const Rational& z, Precision prec) {
  if (m == 0) throw Error(ErrorCode::Domain, "zeta series need m >= 1");
  check_open_unit(z);
  return {{audit_one(m, z, SeriesParity::EvenOrder, prec), audit_one(m, z, SeriesParity::OddOrder, prec)}};
}

}  // namespace bilateral
