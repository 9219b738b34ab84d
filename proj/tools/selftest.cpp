#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "bilateral/cotpoly.hpp"
#include "bilateral/theorems.hpp"
#include "bilateral/zeta.hpp"

namespace bilateral::cli {

namespace {

enum class Outcome { Pass, Fail, Undecided };

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Undecided: return "undecided";
  }
  return "fail";
}

Outcome pass_if(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void add(const std::string& label, Outcome outcome, Json detail = Json::object()) {
    Json entry{{"case", label}, {"status", std::string(to_string(outcome))}};
    for (auto& [key, value] : detail.items()) entry[key] = value;
    checks_.push_back(std::move(entry));
    switch (outcome) {
      case Outcome::Pass: ++passed_; break;
      case Outcome::Fail: ++failed_; break;
      case Outcome::Undecided: ++undecided_; break;
    }
  }

  // Runs body, mapping a precision shortfall to "undecided" and any other
  // library error to "fail".
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      const Outcome outcome = e.code() == ErrorCode::InsufficientPrecision ? Outcome::Undecided : Outcome::Fail;
      add(label, outcome, Json{{"error", std::string(bilateral::to_string(e.code())) + ": " + e.what()}});
    }
  }

  void merge_into(SelftestResult& result) const {
    result.passed += passed_;
    result.failed += failed_;
    result.undecided += undecided_;
    result.json["suites"].push_back(Json{{"name", name_},
                                         {"passed", passed_},
                                         {"failed", failed_},
                                         {"undecided", undecided_},
                                         {"checks", checks_}});
  }

 private:
  std::string name_;
  Json checks_ = Json::array();
  int passed_ = 0;
  int failed_ = 0;
  int undecided_ = 0;
};

Outcome outcome_of(const Certificate& cert) {
  switch (cert.status) {
    case CertificateStatus::Verified: return Outcome::Pass;
    case CertificateStatus::Undecided: return Outcome::Undecided;
    case CertificateStatus::Failed: return Outcome::Fail;
  }
  return Outcome::Fail;
}

std::string cell(int k, const Rational& alpha) { return "k=" + std::to_string(k) + " alpha=" + alpha.str(); }

std::vector<Rational> reduced_fractions(int q) {
  std::vector<Rational> out;
  for (int a = 1; a < q; ++a) {
    if (std::gcd(a, q) == 1) out.emplace_back(a, q);
  }
  return out;
}

// Radius required of a ball computed at P bits: the acceptance level at
// P = 128, shifted along with P below that.
long radius_bound_log2(unsigned bits, long at_128) {
  return std::max<long>(at_128, at_128 + 128 - static_cast<long>(bits));
}

Suite null_certificates(const RunConfig& config) {
  Suite suite("null_certificates");
  const Precision prec(config.precision_bits);
  const Precision cap(config.precision_cap);
  const std::vector<Rational> alphas{Rational(1, 2), Rational(-1, 2), Rational(3, 2), Rational(7, 2)};
  for (int k : {3, 5, 7, 9}) {
    for (const Rational& alpha : alphas) {
      suite.guarded(cell(k, alpha), [&] {
        const Certificate cert = certify(k, alpha, prec, cap);
        const Ball direct = s_series_ball(k, alpha, prec);
        const bool exact_zero = s_exact(k, alpha).is_zero();
        const bool tight = direct.radius_log2() <= radius_bound_log2(config.precision_bits, -100);
        Outcome outcome = outcome_of(cert);
        if (outcome == Outcome::Pass) outcome = pass_if(cert.verdict.is_null && exact_zero && direct.contains_zero() && tight);
        suite.add(cell(k, alpha), outcome,
                  Json{{"exact_zero", exact_zero}, {"radius_log2", direct.radius_log2()}});
      });
    }
  }
  return suite;
}

Suite closed_form_vs_series(const RunConfig& config) {
  Suite suite("closed_form_vs_series");
  const Precision prec(config.precision_bits);
  const long bound = radius_bound_log2(config.precision_bits, -100);
  for (int k = 2; k <= 10; ++k) {
    for (int q : {2, 3, 4, 6}) {
      for (const Rational& alpha : reduced_fractions(q)) {
        suite.guarded(cell(k, alpha), [&] {
          const PiMultiple exact = s_exact(k, alpha);
          const Ball closed = to_ball(exact, prec);
          const Ball series = s_series_ball(k, alpha, prec);
          const bool tight = series.radius_log2() <= bound && closed.radius_log2() <= bound;
          suite.add(cell(k, alpha), pass_if(series.overlaps(closed) && tight),
                    Json{{"exact", bilateral::to_json(exact)}, {"series", bilateral::to_json(series)}});
        });
      }
    }
  }
  return suite;
}

Suite theorem_scan(const RunConfig& config) {
  Suite suite("scan");
  ScanOptions options;
  options.k_min = config.k_min;
  options.k_max = config.k_max;
  options.q_max = config.q_max;
  options.precision_bits = config.precision_bits;
  options.precision_cap = config.precision_cap;
  suite.guarded("scan", [&] {
    const ScanReport report = scan(options);
    std::size_t expected_nulls = 0;
    for (int k = options.k_min; k <= options.k_max; ++k) expected_nulls += k % 2;
    bool nulls_ok = report.null_cases.size() == expected_nulls;
    for (const NullCase& c : report.null_cases) nulls_ok = nulls_ok && c.k % 2 == 1 && c.alpha == Rational(1, 2);
    Outcome outcome = report.undecided > 0 ? Outcome::Undecided : pass_if(report.all_verified());
    if (outcome == Outcome::Pass) outcome = pass_if(nulls_ok && report.disagreements == 0);
    Json detail = bilateral::to_json(report)["summary"];
    detail["disagreements"] = report.disagreements;
    suite.add("k=" + std::to_string(options.k_min) + ".." + std::to_string(options.k_max) +
                  " q<=" + std::to_string(options.q_max),
              outcome, std::move(detail));
  });
  return suite;
}

Suite reflection(const RunConfig& config) {
  Suite suite("reflection");
  const Precision prec(config.precision_bits);
  const std::vector<Rational> alphas{Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                     Rational(2, 3), Rational(3, 4), Rational(5, 6)};
  for (int k = 2; k <= 6; ++k) {
    for (const Rational& alpha : alphas) {
      suite.guarded(cell(k, alpha), [&] {
        const Ball residual = reflection_residual(k, alpha, prec);
        suite.add(cell(k, alpha), pass_if(residual.contains_zero()), Json{{"residual", bilateral::to_json(residual)}});
      });
    }
  }
  return suite;
}

Suite gmr_negative_control(const RunConfig& config) {
  Suite suite("gmr_negative_control");
  const Precision prec(config.precision_bits);
  const std::vector<std::pair<int, Rational>> cases{{2, Rational(1, 2)}, {3, Rational(1, 2)}, {2, Rational(1, 4)}};
  for (const auto& [k, alpha] : cases) {
    suite.guarded(cell(k, alpha), [&] {
      const Ball residual = gmr_formula_residual(k, alpha, prec);
      bool ok = residual.excludes_zero();
      if (k == 2 && alpha == Rational(1, 2)) {
        const Ball pi = pi_ball(prec);
        const Ball expected = Ball::from_integer(2, prec) - (pi * pi).scaled(Rational(2));
        ok = ok && residual.overlaps(expected);
      }
      suite.add(cell(k, alpha), pass_if(ok), Json{{"residual", bilateral::to_json(residual)}});
    });
  }
  return suite;
}

Suite properties(const RunConfig& config) {
  Suite suite("property_audit");
  suite.guarded("property_audit", [&] {
    const PropertyReport report = property_audit(6, config.grid_step, Precision(config.precision_bits));
    for (const PropertyCheck& check : report.checks) {
      const Outcome outcome = check.status == PropertyStatus::Fail ? Outcome::Fail : Outcome::Pass;
      suite.add(std::string(to_string(check.kind)) + " " + cell(check.k, check.alpha), outcome,
                Json{{"property_status", std::string(to_string(check.status))}, {"detail", check.detail}});
    }
  });
  return suite;
}

Suite bernoulli_links() {
  Suite suite("bernoulli_zeta");
  suite.add("B_12", pass_if(bernoulli(12) == Rational(-691, 2730)), Json{{"value", bernoulli(12).str()}});
  const std::vector<Rational> zeta_coefficients{Rational(1, 6), Rational(1, 90), Rational(1, 945)};
  for (unsigned n = 1; n <= 3; ++n) {
    const Rational got = zeta_even(n).coefficient;
    suite.add("zeta(" + std::to_string(2 * n) + ")/pi^" + std::to_string(2 * n), pass_if(got == zeta_coefficients[n - 1]),
              Json{{"value", got.str()}});
  }
  for (unsigned j = 1; j <= 8; ++j) {
    const Integer q_at_zero = q_polynomial(2 * j - 1).coefficient(0);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, 2 * j);
    const Rational expected =
        -Rational(factorial(2 * j - 1)) * Rational(2) * Rational(Integer(power - 1)) * zeta_even(j).coefficient;
    suite.add("Q_" + std::to_string(2 * j - 1) + "(0)", pass_if(Rational(q_at_zero) == expected),
              Json{{"value", q_at_zero.get_str()}});
  }
  return suite;
}

Suite cot_taylor(const RunConfig& config) {
  Suite suite("cot_taylor");
  const Precision prec(config.precision_bits);
  const std::vector<std::pair<Rational, unsigned>> cases{{Rational(1, 4), 40}, {Rational(1, 2), 60}, {Rational(-1, 3), 80}};
  for (const auto& [z, terms] : cases) {
    const std::string label = "z=" + z.str() + " N=" + std::to_string(terms);
    suite.guarded(label, [&] {
      const Ball residual = cot_taylor_residual(z, terms, prec);
      suite.add(label, pass_if(residual.contains_zero()), Json{{"residual", bilateral::to_json(residual)}});
    });
  }
  return suite;
}

Suite zeta_identities(const RunConfig& config) {
  Suite suite("zeta_series");
  const Precision prec(config.precision_bits);
  const std::vector<Rational> points{Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3),
                                     Rational(1, 4), Rational(-1, 4), Rational(1, 6), Rational(-1, 6)};
  for (unsigned m = 1; m <= 3; ++m) {
    for (const Rational& z : points) {
      for (SeriesParity parity : {SeriesParity::EvenOrder, SeriesParity::OddOrder}) {
        const std::string label =
            std::string(to_string(parity)) + " m=" + std::to_string(m) + " z=" + z.str();
        suite.guarded(label, [&] {
          const Ball direct = zeta_series_sum(m, z, parity, prec);
          const Ball closed = zeta_series_closed_ball(m, z, parity, prec);
          bool ok = direct.overlaps(closed);
          if (parity == SeriesParity::OddOrder) ok = ok && direct.certainly_positive();
          suite.add(label, pass_if(ok), Json{{"direct", bilateral::to_json(direct)}});
        });
      }
    }
  }
  suite.guarded("even m=1 z=1/2 near 8", [&] {
    const Ball direct = zeta_series_sum(1, Rational(1, 2), SeriesParity::EvenOrder, prec);
    const bool ok = direct.contains(Rational(8)) &&
                    direct.radius_log2() <= radius_bound_log2(config.precision_bits, -60);
    suite.add("even m=1 z=1/2 near 8", pass_if(ok), Json{{"direct", bilateral::to_json(direct)}});
  });
  return suite;
}

Suite audit(const RunConfig& config) {
  Suite suite("zeta_series_audit");
  const Precision prec(config.precision_bits);
  // Agreement of both evaluation paths is the invariant; the category
  // mismatch is reported as data, not as a failure.
  for (const auto& [m, z] : std::vector<std::pair<unsigned, Rational>>{{1, Rational(1, 2)}, {1, Rational(1, 4)}}) {
    const std::string label = "m=" + std::to_string(m) + " z=" + z.str();
    suite.guarded(label, [&] {
      const AuditReport report = zeta_series_audit(m, z, prec);
      suite.add(label, pass_if(report.all_agree()), bilateral::to_json(report));
    });
  }
  return suite;
}

}  // namespace

SelftestResult run_selftest(const RunConfig& config) {
  SelftestResult result;
  result.json["config"] = Json{{"precision_bits", config.precision_bits},
                               {"precision_cap", config.precision_cap},
                               {"kmin", config.k_min},
                               {"kmax", config.k_max},
                               {"qmax", config.q_max},
                               {"grid_step", config.grid_step.str()}};
  result.json["suites"] = Json::array();

  null_certificates(config).merge_into(result);
  closed_form_vs_series(config).merge_into(result);
  theorem_scan(config).merge_into(result);
  reflection(config).merge_into(result);
  gmr_negative_control(config).merge_into(result);
  properties(config).merge_into(result);
  bernoulli_links().merge_into(result);
  cot_taylor(config).merge_into(result);
  zeta_identities(config).merge_into(result);
  audit(config).merge_into(result);

  result.json["summary"] = Json{{"passed", result.passed},
                                {"failed", result.failed},
                                {"undecided", result.undecided},
                                {"status", result.ok() ? "pass" : (result.failed > 0 ? "fail" : "undecided")}};
  return result;
}

}  // namespace bilateral::cli
