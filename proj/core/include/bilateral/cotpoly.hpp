#pragma once

// Cotangent derivative polynomials.
//
// With t = cot(pi z) and dt/dz = -pi (1 + t^2), every derivative of pi cot(pi z)
// is a polynomial in t:
//
//   D^m (pi cot pi z) = pi^(m+1) Q_m(cot pi z),
//   Q_0(t) = t,   Q_{m+1}(t) = -(1 + t^2) Q_m'(t).
//
// The bilateral series then has the closed form
//
//   S_k(z) = sum_n (n + z)^-k = (-1)^(k-1) / (k-1)! * D^(k-1)(pi cot pi z)
//          = c * pi^k,   c = (-1)^(k-1) Q_{k-1}(t) / (k-1)!.

#include <string>

#include "bilateral/exact.hpp"

namespace bilateral {

/// coefficient * pi^pi_power, kept symbolic. A zero coefficient is the exact
/// value 0 whatever the power.
struct PiMultiple {
  QuadraticNumber coefficient;
  int pi_power = 0;

  bool is_zero() const { return coefficient.is_zero(); }
  friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
    return a.coefficient == b.coefficient && (a.is_zero() || a.pi_power == b.pi_power);
  }
};

/// Q_m, memoized in a process-wide cache guarded by a mutex.
IntPolynomial q_polynomial(unsigned m);

/// Same polynomial computed without touching the cache.
IntPolynomial q_polynomial_uncached(unsigned m);

/// Exact c with S_k(z) = c pi^k when t = cot(pi z). Requires k >= 2.
QuadraticNumber s_coefficient(int k, const QuadraticNumber& t);

/// Exact S_k(alpha) for alpha with denominator 2, 3, 4 or 6.
/// Integer alpha throws Error{Pole}; other denominators Error{ExactModeUnavailable}.
PiMultiple s_exact(int k, const Rational& alpha);

}  // namespace bilateral
