#include <random>

#include "bilateral/exact.hpp"
#include "doctest.h"

using namespace bilateral;

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 500);
  for (;;) {
    Rational r(Integer(num(rng)), Integer(den(rng)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

QuadraticNumber random_quad(std::mt19937_64& rng, bool nonzero = false) {
  for (;;) {
    QuadraticNumber x(random_rational(rng), random_rational(rng));
    if (!nonzero || !x.is_zero()) return x;
  }
}

bool reduced(const Rational& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return r.denominator() > 0 && g == 1 && (!r.is_zero() || r.denominator() == 1);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational arithmetic examples") {
    CHECK(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add) == Rational(5, 6));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(rational_arith(Rational(1, 2), Rational(0), ArithOp::Div), Error);
    try {
      (void)(Rational(1, 2) / Rational(0));
      FAIL("expected division error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
  }

  TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK(Rational::parse(" +3/9 ") == Rational(1, 3));
    for (const char* bad : {"", "1/", "/2", "a/b", "1/0", "1/-2", "1.5", "1//2", "1/2/3"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Rational::parse(bad), Error);
    }
  }

  TEST_CASE("floor and fractional part") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-1, 2).floor() == -1);
    CHECK(Rational(-1, 2).frac() == Rational(1, 2));
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(Rational(5).frac().is_zero());
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  }

  TEST_CASE("random rationals stay reduced") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 2000; ++i) {
      const Rational a = random_rational(rng);
      const Rational b = random_rational(rng, true);
      for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
        const Rational r = rational_arith(a, b, op);
        CHECK(reduced(r));
      }
      CHECK((a + b) - b == a);
      CHECK((a * b) / b == a);
      CHECK(Rational::parse(a.str()) == a);
    }
  }

  TEST_CASE("quadratic field examples") {
    const QuadraticNumber s = QuadraticNumber::sqrt3();
    CHECK(quad_arith(QuadraticNumber(1, 1), QuadraticNumber(1, -1), ArithOp::Mul) == QuadraticNumber(-2));
    CHECK(quad_arith(s, QuadraticNumber(3), ArithOp::Div) == QuadraticNumber(0, Rational(1, 3)));
    CHECK(s * s == QuadraticNumber(3));
    CHECK(QuadraticNumber(1, -1).norm() == Rational(-2));
    CHECK_THROWS_AS(quad_arith(s, QuadraticNumber(0), ArithOp::Div), Error);
    CHECK(QuadraticNumber(Rational(1, 2), Rational(-3, 4)).str() == "1/2 + -3/4*sqrt3");
    CHECK(QuadraticNumber::parse("1/2 + -3/4*sqrt3") == QuadraticNumber(Rational(1, 2), Rational(-3, 4)));
  }

  TEST_CASE("quadratic sign is exact") {
    CHECK(QuadraticNumber(2, -1).sign() == 1);    // 2 - 1.732
    CHECK(QuadraticNumber(-2, 1).sign() == -1);
    CHECK(QuadraticNumber(Rational(-7, 4), 1).sign() == -1);
    CHECK(QuadraticNumber(Rational(-17, 10), 1).sign() == 1);
    CHECK(QuadraticNumber(0).sign() == 0);
    // convergents of sqrt3: 989/571 from below, 1351/780 from above
    CHECK(QuadraticNumber(Rational(-989, 571), 1).sign() == 1);
    CHECK(QuadraticNumber(Rational(-1351, 780), 1).sign() == -1);
  }

  TEST_CASE("quadratic multiply then divide round trip") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000; ++i) {
      const QuadraticNumber x = random_quad(rng);
      const QuadraticNumber y = random_quad(rng, true);
      CHECK((x * y) / y == x);
      CHECK((x + y) - y == x);
      CHECK(QuadraticNumber::parse(x.str()) == x);
    }
  }

  TEST_CASE("exact cotangent values") {
    CHECK(cot_exact(Rational(1, 2)) == QuadraticNumber(0));
    CHECK(cot_exact(Rational(1, 4)) == QuadraticNumber(1));
    CHECK(cot_exact(Rational(1, 6)) == QuadraticNumber::sqrt3());
    CHECK(cot_exact(Rational(5, 6)) == -QuadraticNumber::sqrt3());
    CHECK(cot_exact(Rational(1, 3)) == QuadraticNumber(0, Rational(1, 3)));
    CHECK(cot_exact(Rational(3, 4)) == QuadraticNumber(-1));
    CHECK(cot_exact(Rational(-1, 4)) == QuadraticNumber(-1));
  }

  TEST_CASE("exact cotangent errors") {
    try {
      (void)cot_exact(Rational(1, 5));
      FAIL("expected exact mode unavailable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExactModeUnavailable);
    }
    try {
      (void)cot_exact(Rational(3));
      FAIL("expected pole");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Pole);
    }
    CHECK(has_exact_cot(Rational(7, 6)));
    CHECK_FALSE(has_exact_cot(Rational(1, 12)));
    CHECK_FALSE(has_exact_cot(Rational(2)));
  }

  TEST_CASE("cotangent periodicity and reflection") {
    for (int q : {2, 3, 4, 6}) {
      for (int a = -2 * q + 1; a < 2 * q; ++a) {
        const Rational alpha(a, q);
        if (alpha.is_integer()) continue;
        CAPTURE(alpha.str());
        CHECK(cot_exact(alpha + Rational(1)) == cot_exact(alpha));
        CHECK(cot_exact(Rational(1) - alpha) == -cot_exact(alpha));
      }
    }
  }

  TEST_CASE("polynomial basics") {
    const IntPolynomial p(std::vector<Integer>{1, 0, 3, 0, 0});
    CHECK(p.degree() == 2);
    CHECK(p.leading_coefficient() == 3);
    CHECK(p.derivative() == IntPolynomial(std::vector<Integer>{0, 6}));
    CHECK(IntPolynomial().degree() == -1);
    CHECK((p - p).is_zero());
    CHECK(p.evaluate(Rational(1, 2)) == Rational(7, 4));
    CHECK(p.evaluate(QuadraticNumber::sqrt3()) == QuadraticNumber(10));
    CHECK(IntPolynomial(std::vector<Integer>{0, 1}).reflect() == IntPolynomial(std::vector<Integer>{0, -1}));
  }

  TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25).get_str() == "15511210043330985984000000");
  }
}
