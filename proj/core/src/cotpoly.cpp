#include "bilateral/cotpoly.hpp"

#include <mutex>
#include <vector>

namespace bilateral {

namespace {

const IntPolynomial& one_plus_t_squared() {
  static const IntPolynomial p(std::vector<Integer>{1, 0, 1});
  return p;
}

IntPolynomial next_q(const IntPolynomial& q) { return -(one_plus_t_squared() * q.derivative()); }

void check_order(int k) {
  if (k < 2) throw Error(ErrorCode::Domain, "S_k needs k >= 2, got " + std::to_string(k));
}

}  // namespace

IntPolynomial q_polynomial_uncached(unsigned m) {
  IntPolynomial q(std::vector<Integer>{0, 1});
  for (unsigned i = 0; i < m; ++i) q = next_q(q);
  return q;
}

IntPolynomial q_polynomial(unsigned m) {
  static std::mutex mutex;
  static std::vector<IntPolynomial> cache{IntPolynomial(std::vector<Integer>{0, 1})};
  std::lock_guard lock(mutex);
  while (cache.size() <= m) cache.push_back(next_q(cache.back()));
  return cache[m];
}

QuadraticNumber s_coefficient(int k, const QuadraticNumber& t) {
  check_order(k);
  const auto m = static_cast<unsigned>(k - 1);
  QuadraticNumber c = q_polynomial(m).evaluate(t) / QuadraticNumber(Rational(factorial(m)));
  return (m % 2 == 1) ? -c : c;
}

PiMultiple s_exact(int k, const Rational& alpha) {
  check_order(k);
  if (alpha.is_integer()) {
    throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  }
  return PiMultiple{s_coefficient(k, cot_exact(alpha)), k};
}

}  // namespace bilateral
