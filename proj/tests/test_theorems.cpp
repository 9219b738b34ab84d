#include <set>

#include "bilateral/cotpoly.hpp"
#include "bilateral/theorems.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bilateral;
using test::encloses;
using test::two_pow;

TEST_SUITE("theorems") {
  TEST_CASE("classification examples") {
    CHECK(classify(3, Rational(1, 2)).is_null);
    CHECK(classify(3, Rational(7, 2)).is_null);
    CHECK(classify(3, Rational(-1, 2)).reason == NullityReason::OddOrderHalfInteger);
    CHECK_FALSE(classify(2, Rational(1, 2)).is_null);
    CHECK_FALSE(classify(3, Rational(1, 3)).is_null);
    CHECK(classify(3, Rational(1, 3)).reason == NullityReason::NonNull);
    CHECK_THROWS_AS(classify(3, Rational(2)), Error);
    CHECK_THROWS_AS(classify(1, Rational(1, 2)), Error);
  }

  TEST_CASE("classification agrees with the exact path") {
    for (int k = 2; k <= 20; ++k) {
      for (int q : {2, 3, 4, 6}) {
        for (int a = -q; a < 2 * q; ++a) {
          const Rational alpha(a, q);
          if (alpha.is_integer()) continue;
          CHECK(classify(k, alpha).is_null == s_exact(k, alpha).is_zero());
        }
      }
    }
  }

  TEST_CASE("certificates") {
    const Precision p(128);
    const Certificate null = certify(3, Rational(1, 2), p);
    CHECK(null.status == CertificateStatus::Verified);
    CHECK(null.verdict.is_null);
    REQUIRE(null.exact.has_value());
    CHECK(null.exact->is_zero());
    CHECK(null.numeric.contains_zero());

    const Certificate two = certify(2, Rational(1, 2), p);
    CHECK(two.verified());
    CHECK(*two.exact == PiMultiple{QuadraticNumber(1), 2});
    CHECK(encloses(two.numeric, oracle::s_2_1_2));

    const Certificate four = certify(4, Rational(1, 2), p);
    CHECK(four.verified());
    CHECK(*four.exact == PiMultiple{QuadraticNumber(Rational(1, 3)), 4});
    CHECK(encloses(four.numeric, oracle::s_4_1_2));

    const Certificate fifth = certify(3, Rational(1, 5), Precision(192));
    CHECK(fifth.verified());
    CHECK_FALSE(fifth.exact.has_value());
    CHECK(fifth.numeric.excludes_zero());
    CHECK(encloses(fifth.numeric, oracle::s_3_1_5));

    CHECK_THROWS_AS(certify(2, Rational(-3), p), Error);
  }

  TEST_CASE("null certificates across half-integers") {
    for (int k : {3, 5, 7, 9}) {
      for (const Rational& alpha : {Rational(1, 2), Rational(-1, 2), Rational(3, 2), Rational(7, 2)}) {
        const Certificate cert = certify(k, alpha, Precision(128), Precision(1024));
        CHECK(cert.status == CertificateStatus::Verified);
        CHECK(cert.verdict.is_null);
        CHECK(cert.exact->is_zero());
        CHECK(s_series_ball(k, alpha, Precision(128)).radius() <= two_pow(-100));
      }
    }
  }

  TEST_CASE("cap reached gives undecided, never null") {
    // S_3(1/2 + e) is about -pi^4 e, far below the radius at 64 bits.
    const Rational alpha = Rational(1, 2) + two_pow(-80);
    const Certificate cert = certify(3, alpha, Precision(64), Precision(64));
    CHECK(cert.status == CertificateStatus::Undecided);
    CHECK_FALSE(cert.verdict.is_null);
    CHECK_FALSE(cert.note.empty());
    CHECK_THROWS_AS(certify(3, alpha, Precision(64)), Error);
    const Certificate refined = certify(3, alpha, Precision(64), Precision(256));
    CHECK(refined.status == CertificateStatus::Verified);
    CHECK(refined.precision_bits > 64);
  }

  TEST_CASE("scan over the default grid") {
    ScanOptions options;
    const ScanReport report = scan(options);
    CHECK(report.cells() == 450);
    CHECK(report.verified == 450);
    CHECK(report.failed == 0);
    CHECK(report.undecided == 0);
    CHECK(report.disagreements == 0);
    std::set<std::pair<int, std::string>> nulls;
    for (const NullCase& c : report.null_cases) nulls.insert({c.k, c.alpha.str()});
    CHECK(nulls == std::set<std::pair<int, std::string>>{{3, "1/2"}, {5, "1/2"}, {7, "1/2"}, {9, "1/2"}, {11, "1/2"}});
  }

  TEST_CASE("scan order and thread independence") {
    ScanOptions options;
    options.k_max = 5;
    options.q_max = 7;
    options.threads = 1;
    const ScanReport serial = scan(options);
    options.threads = 8;
    const ScanReport parallel = scan(options);
    REQUIRE(serial.cells() == parallel.cells());
    for (std::size_t i = 0; i < serial.cells(); ++i) {
      CHECK(serial.certificates[i].alpha == parallel.certificates[i].alpha);
      CHECK(serial.certificates[i].numeric.midpoint_ulps() == parallel.certificates[i].numeric.midpoint_ulps());
    }
    CHECK(serial.certificates.front().k == 2);
    CHECK(serial.certificates.front().alpha == Rational(1, 2));
    CHECK(serial.certificates[1].alpha == Rational(1, 3));
    CHECK(serial.certificates[2].alpha == Rational(2, 3));
  }

  TEST_CASE("small scan and usage errors") {
    ScanOptions options;
    options.k_min = 3;
    options.k_max = 3;
    options.q_max = 2;
    const ScanReport report = scan(options);
    CHECK(report.cells() == 1);
    CHECK(report.null_cases.size() == 1);
    options.k_min = 5;
    options.k_max = 4;
    CHECK_THROWS_AS(scan(options), Error);
    options.k_min = 2;
    options.k_max = 4;
    options.q_max = 1;
    CHECK_THROWS_AS(scan(options), Error);
  }

  TEST_CASE("reflection identity") {
    for (int k = 2; k <= 6; ++k) {
      for (const Rational& alpha : {Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                    Rational(3, 4), Rational(5, 6), Rational(2, 7)}) {
        CHECK(reflection_residual(k, alpha, Precision(128)).contains_zero());
      }
    }
    CHECK_THROWS_AS(reflection_residual(2, Rational(3, 2), Precision(64)), Error);
  }

  TEST_CASE("gmr formula fails as a negative control") {
    const Precision p(128);
    const Ball half = gmr_formula_residual(2, Rational(1, 2), p);
    CHECK(half.excludes_zero());
    const Ball pi = pi_ball(p);
    const Ball expected = Ball::from_integer(2, p) - (pi * pi).scaled(Rational(2));
    CHECK((half.midpoint() - expected.midpoint()).abs() <= two_pow(-90));
    CHECK(half.overlaps(expected));

    const Ball odd = gmr_formula_residual(3, Rational(1, 2), p);
    CHECK(odd.excludes_zero());
    CHECK(odd.contains(Rational(2)));

    const Ball quarter = gmr_formula_residual(2, Rational(1, 4), p);
    CHECK(quarter.excludes_zero());
    CHECK(encloses(quarter, oracle::gmr_2_1_4));
  }

  TEST_CASE("finite-difference derivative against the exact value") {
    const Rational alpha(1, 4);
    const Rational h(1, 1024);
    const Precision p(128);
    const DerivativeCheck check = derivative_check(1, alpha, h, p);
    CHECK(check.pass);
    CHECK(check.k == 3);

    // Independent: the central difference of S_3 should be within C h^2 of
    // -3 S_4(1/4) = -8 pi^4.
    const Ball diff = (s_series_ball(3, alpha + h, p) - s_series_ball(3, alpha - h, p)).scaled(Rational(512));
    const Ball exact = pi_ball(p).pow(4).scaled(Rational(-8));
    CHECK(s_exact(4, alpha) == PiMultiple{QuadraticNumber(Rational(8, 3)), 4});
    CHECK((diff.midpoint() - exact.midpoint()).abs() <= check.tolerance + diff.radius() + exact.radius());
    // and the discrepancy is genuinely O(h^2), not zero
    CHECK((diff.midpoint() - exact.midpoint()).abs() > check.tolerance / Rational(1000));
  }

  TEST_CASE("derivative check errors") {
    CHECK_THROWS_AS(derivative_check(0, Rational(1, 4), Rational(1, 1024), Precision(64)), Error);
    CHECK_THROWS_AS(derivative_check(1, Rational(1, 4), Rational(1, 2), Precision(64)), Error);
    CHECK_THROWS_AS(derivative_check(1, Rational(1, 4), Rational(-1, 8), Precision(64)), Error);
  }

  TEST_CASE("property audit") {
    const PropertyReport report = property_audit(6, Rational(1, 10), Precision(128));
    CHECK(report.all_passed());
    CHECK(report.failed == 0);
    CHECK(report.vacuous == 0);
    CHECK(report.passed == report.checks.size());
    std::set<PropertyKind> kinds;
    for (const PropertyCheck& c : report.checks) kinds.insert(c.kind);
    CHECK(kinds.size() == 4);
  }

  TEST_CASE("property audit on a single-point grid") {
    const PropertyReport report = property_audit(5, Rational(1, 2), Precision(128));
    CHECK(report.all_passed());
    CHECK(report.vacuous == 2);  // k = 3 and k = 5
  }

  TEST_CASE("grid validation") {
    CHECK(unit_grid(Rational(1, 4)).size() == 3);
    for (const Rational& bad : {Rational(3, 10), Rational(1), Rational(0), Rational(-1, 4), Rational(2, 3)}) {
      CHECK_THROWS_AS(unit_grid(bad), Error);
      CHECK_THROWS_AS(property_audit(4, bad, Precision(64)), Error);
    }
  }
}
