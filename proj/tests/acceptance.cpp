// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bilateral/cotpoly.hpp"
#include "bilateral/theorems.hpp"
#include "bilateral/zeta.hpp"
#include "cli.hpp"

using namespace bilateral;

namespace {

constexpr unsigned kBits = 128;
constexpr unsigned kCapBits = 1024;
constexpr long kSeriesRadiusLog2 = -100;   // criteria 1 and 3
constexpr long kGmrToleranceLog2 = -90;    // criterion 5
constexpr long kZetaSeriesRadiusLog2 = -60;  // criterion 8

Rational two_pow(long e) { return Rational(2).pow(e); }

std::vector<Rational> reduced_fractions(int q) {
  std::vector<Rational> out;
  for (int a = 1; a < q; ++a) {
    Rational r(a, q);
    if (r.denominator() == q) out.push_back(r);
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> run;  // empty string on success, else the reason
};

std::string null_counterexamples() {
  const Precision p(kBits);
  for (int k : {3, 5, 7, 9}) {
    for (const Rational& alpha : {Rational(1, 2), Rational(-1, 2), Rational(3, 2), Rational(7, 2)}) {
      const Ball ball = s_series_ball(k, alpha, p);
      const std::string where = "S_" + std::to_string(k) + "(" + alpha.str() + ")";
      if (!ball.contains_zero()) return where + " ball excludes 0";
      if (ball.radius() > two_pow(kSeriesRadiusLog2)) return where + " radius 2^" + std::to_string(ball.radius_log2());
      if (!s_exact(k, alpha).is_zero()) return where + " exact value is not 0";
    }
  }
  return "";
}

std::string theorem_scan() {
  ScanOptions options;
  options.k_min = 2;
  options.k_max = 11;
  options.q_max = 12;
  options.precision_bits = kBits;
  options.precision_cap = kCapBits;
  const ScanReport report = scan(options);
  if (report.failed != 0 || report.undecided != 0) {
    return std::to_string(report.failed) + " failed, " + std::to_string(report.undecided) + " undecided";
  }
  std::size_t expected_nulls = 0;
  for (const Certificate& cert : report.certificates) {
    const NullityVerdict verdict = classify(cert.k, cert.alpha);
    if (!(verdict == cert.verdict)) return "classify disagrees at k=" + std::to_string(cert.k) + " " + cert.alpha.str();
    const bool should_be_null = cert.k % 2 == 1 && (Rational(2) * cert.alpha).denominator() == 1 &&
                                (Rational(2) * cert.alpha).numerator() % 2 != 0;
    if (should_be_null != cert.verdict.is_null) return "unexpected verdict at " + cert.alpha.str();
    expected_nulls += should_be_null;
  }
  if (report.null_cases.size() != expected_nulls) return "null case count mismatch";
  return "";
}

std::string closed_form_vs_series() {
  const Precision p(kBits);
  for (int k = 2; k <= 10; ++k) {
    for (int q : {2, 3, 4, 6}) {
      for (const Rational& alpha : reduced_fractions(q)) {
        const PiMultiple exact = s_exact(k, alpha);
        const Ball closed = to_ball(exact, p);
        const Ball series = s_series_ball(k, alpha, p);
        const std::string where = "S_" + std::to_string(k) + "(" + alpha.str() + ")";
        if ((series.midpoint() - closed.midpoint()).abs() > series.radius() + closed.radius()) return where + " disagrees";
        if (series.radius() > two_pow(kSeriesRadiusLog2) || closed.radius() > two_pow(kSeriesRadiusLog2)) {
          return where + " radius too large";
        }
      }
    }
  }
  const QuadraticNumber one(1);
  if (!(s_exact(2, Rational(1, 2)) == PiMultiple{one, 2})) return "S_2(1/2) != pi^2";
  if (!(s_exact(4, Rational(1, 2)) == PiMultiple{QuadraticNumber(Rational(1, 3)), 4})) return "S_4(1/2) != pi^4/3";
  if (!(s_exact(3, Rational(1, 4)) == PiMultiple{QuadraticNumber(2), 3})) return "S_3(1/4) != 2 pi^3";
  if (!(s_exact(3, Rational(1, 6)) == PiMultiple{QuadraticNumber(0, 4), 3})) return "S_3(1/6) != 4 sqrt3 pi^3";
  return "";
}

std::string reflection() {
  for (int k = 2; k <= 6; ++k) {
    for (const Rational& alpha : {Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                  Rational(3, 4), Rational(5, 6)}) {
      if (!reflection_residual(k, alpha, Precision(kBits)).contains_zero()) {
        return "residual excludes 0 at k=" + std::to_string(k) + " alpha=" + alpha.str();
      }
    }
  }
  return "";
}

std::string gmr_control() {
  const Precision p(kBits);
  const Ball residual = gmr_formula_residual(2, Rational(1, 2), p);
  if (!residual.excludes_zero()) return "residual contains 0";
  const Ball pi = pi_ball(p);
  const Ball expected = Ball::from_integer(2, p) - (pi * pi).scaled(Rational(2));
  const Rational distance = (residual.midpoint() - expected.midpoint()).abs() + residual.radius() + expected.radius();
  if (distance > two_pow(kGmrToleranceLog2)) return "residual not within 2^-90 of 2 - 2 pi^2";
  return "";
}

std::string property_audit_all_pass() {
  const PropertyReport report = property_audit(6, Rational(1, 10), Precision(kBits));
  if (!report.all_passed()) return std::to_string(report.failed) + " checks failed";
  if (report.vacuous != 0) return "vacuous checks on a full grid";
  bool kinds[4] = {false, false, false, false};
  for (const PropertyCheck& c : report.checks) kinds[static_cast<int>(c.kind)] = true;
  for (bool seen : kinds) {
    if (!seen) return "a property family produced no checks";
  }
  return "";
}

std::string bernoulli_zeta() {
  if (!(bernoulli(12) == Rational(-691, 2730))) return "B_12 = " + bernoulli(12).str();
  if (!(zeta_even(1).coefficient == Rational(1, 6)) || !(zeta_even(2).coefficient == Rational(1, 90)) ||
      !(zeta_even(3).coefficient == Rational(1, 945))) {
    return "even zeta coefficients";
  }
  for (unsigned j = 1; j <= 8; ++j) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, 2 * j);
    const Rational expected =
        -Rational(factorial(2 * j - 1)) * Rational(2) * Rational(Integer(power - 1)) * zeta_even(j).coefficient;
    if (!(Rational(q_polynomial(2 * j - 1).coefficient(0)) == expected)) return "link fails at j=" + std::to_string(j);
  }
  return "";
}

std::string zeta_series_identities() {
  const Precision p(kBits);
  for (unsigned m = 1; m <= 3; ++m) {
    for (const Rational& z : {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3), Rational(1, 4),
                              Rational(-1, 4), Rational(1, 6), Rational(-1, 6)}) {
      for (SeriesParity parity : {SeriesParity::EvenOrder, SeriesParity::OddOrder}) {
        const Ball direct = zeta_series_sum(m, z, parity, p);
        const Ball closed = to_ball(zeta_series_closed(m, z, parity), p);
        if (!direct.overlaps(closed)) {
          return std::string(to_string(parity)) + " m=" + std::to_string(m) + " z=" + z.str() + " disagrees";
        }
      }
    }
  }
  const Ball half = zeta_series_sum(1, Rational(1, 2), SeriesParity::EvenOrder, p);
  if ((half.midpoint() - Rational(8)).abs() + half.radius() > two_pow(kZetaSeriesRadiusLog2)) {
    return "even series at (1, 1/2) not within 2^-60 of 8";
  }
  const AuditReport audit = zeta_series_audit(1, Rational(1, 2), p);
  const AuditEntry& even = audit.entries[0];
  if (!audit.all_agree()) return "audit paths disagree";
  if (even.claimed != SeriesCategory::Null || even.match) return "audit does not flag the null claim";
  return "";
}

std::string selftest_determinism() {
  const std::vector<std::string> args{"selftest"};
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream err;
  const int a = cli::run(args, first, err);
  const int b = cli::run(args, second, err);
  if (a != 0 || b != 0) return "selftest exit codes " + std::to_string(a) + ", " + std::to_string(b);
  if (first.str() != second.str()) return "outputs differ";
  if (first.str().empty()) return "empty output";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "odd-order half-integer series vanish", null_counterexamples},
      {2, "scan k=2..11, q<=12: no failures, nulls exactly at odd k, 2a odd", theorem_scan},
      {3, "closed form c pi^k matches the series for k<=10, q in {2,3,4,6}", closed_form_vs_series},
      {4, "reflection through polygamma", reflection},
      {5, "gmr formula residual excludes 0 and encloses 2 - 2 pi^2", gmr_control},
      {6, "periodicity, positivity, monotonicity, derivative identity", property_audit_all_pass},
      {7, "Bernoulli numbers, even zeta values, cotangent link", bernoulli_zeta},
      {8, "zeta series identities and the audited null claim", zeta_series_identities},
      {9, "selftest output is byte-identical across runs", selftest_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    if (reason.empty()) {
      std::cout << "PASS " << c.id << " " << c.title << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.id << " " << c.title << " (" << reason << ")\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
