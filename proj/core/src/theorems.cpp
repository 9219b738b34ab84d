#include "bilateral/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace bilateral {

namespace {

void check_order(int k) {
  if (k < 2) throw Error(ErrorCode::Domain, "S_k needs k >= 2, got " + std::to_string(k));
}

void check_unit_interval(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha >= Rational{1}) {
    throw Error(ErrorCode::Domain, "alpha must lie in (0, 1), got " + alpha.str());
  }
}

unsigned bit_length(const Integer& a) {
  return a == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

// An e with |x| < 2^e, at most one above the least such; x != 0.
long log2_bound(const Rational& x) {
  return static_cast<long>(bit_length(abs(x.numerator()))) - static_cast<long>(bit_length(x.denominator())) + 1;
}

// (-1)^(k-1)/(k-1)! D^(k-1)(pi cot pi z) at alpha, through the cotangent ball.
Ball closed_form_numeric(int k, const Rational& alpha, Precision prec) {
  const auto m = static_cast<unsigned>(k - 1);
  const Rational scale = Rational{m % 2 == 1 ? -1 : 1} / Rational(factorial(m));
  return cot_derivative_ball(m, alpha, prec.plus(8)).scaled(scale).with_precision(prec);
}

}  // namespace

std::string_view to_string(NullityReason reason) {
  return reason == NullityReason::OddOrderHalfInteger ? "odd_k_half_integer" : "non_null";
}

std::string_view to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Verified: return "verified";
    case CertificateStatus::Failed: return "failed";
    case CertificateStatus::Undecided: return "undecided";
  }
  return "failed";
}

NullityVerdict classify(int k, const Rational& alpha) {
  check_order(k);
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  const bool half_integer = alpha.denominator() == 2;
  if (k % 2 == 1 && half_integer) return {true, NullityReason::OddOrderHalfInteger};
  return {false, NullityReason::NonNull};
}

Certificate certify(int k, const Rational& alpha, Precision prec) {
  Certificate cert;
  cert.k = k;
  cert.alpha = alpha;
  cert.verdict = classify(k, alpha);
  cert.precision_bits = prec.bits;
  cert.numeric = s_series_ball(k, alpha, prec);
  if (has_exact_cot(alpha)) {
    cert.exact = s_exact(k, alpha);
    cert.closed_form = to_ball(*cert.exact, prec);
  } else {
    cert.closed_form = closed_form_numeric(k, alpha, prec);
  }
  cert.pi_power_check = cert.numeric.overlaps(cert.closed_form);

  if (cert.verdict.is_null) {
    cert.separation = cert.numeric.contains_zero() && (!cert.exact || cert.exact->is_zero());
  } else {
    if (cert.numeric.contains_zero()) {
      throw Error(ErrorCode::InsufficientPrecision,
                  "ball for S_" + std::to_string(k) + "(" + alpha.str() + ") does not separate from 0 at " +
                      std::to_string(prec.bits) + " bits; retry at " + std::to_string(2 * prec.bits));
    }
    cert.separation = !cert.exact || !cert.exact->is_zero();
  }
  cert.status = cert.verified() ? CertificateStatus::Verified : CertificateStatus::Failed;
  if (!cert.pi_power_check) cert.note = "series and closed form disagree";
  if (!cert.separation) cert.note = "nullity does not match the verdict";
  return cert;
}

Certificate certify(int k, const Rational& alpha, Precision prec, Precision cap) {
  for (unsigned bits = prec.bits;; bits *= 2) {
    const unsigned attempt = std::min(bits, cap.bits);
    try {
      return certify(k, alpha, Precision(attempt));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientPrecision) throw;
      if (attempt >= cap.bits) {
        Certificate cert;
        cert.k = k;
        cert.alpha = alpha;
        cert.verdict = classify(k, alpha);
        cert.precision_bits = attempt;
        cert.numeric = s_series_ball(k, alpha, Precision(attempt));
        cert.status = CertificateStatus::Undecided;
        cert.note = "undecided at the precision cap; retry with a larger --precision-cap";
        return cert;
      }
    }
  }
}

ScanReport scan(const ScanOptions& options) {
  if (options.k_min < 2 || options.k_min > options.k_max) {
    throw Error(ErrorCode::Usage, "scan needs 2 <= k_min <= k_max");
  }
  if (options.q_max < 2) throw Error(ErrorCode::Usage, "scan needs q_max >= 2");
  const Precision prec(options.precision_bits);
  const Precision cap(std::max(options.precision_cap, options.precision_bits));

  struct Cell {
    int k;
    Rational alpha;
  };
  std::vector<Cell> cells;
  for (int k = options.k_min; k <= options.k_max; ++k) {
    for (int q = 2; q <= options.q_max; ++q) {
      for (int a = 1; a < q; ++a) {
        if (std::gcd(a, q) == 1) cells.push_back({k, Rational(a, q)});
      }
    }
  }

  ScanReport report;
  report.certificates.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& cell = cells[i];
      try {
        report.certificates[i] = certify(cell.k, cell.alpha, prec, cap);
      } catch (const Error& e) {
        Certificate cert;
        cert.k = cell.k;
        cert.alpha = cell.alpha;
        cert.verdict = classify(cell.k, cell.alpha);
        cert.precision_bits = prec.bits;
        cert.status = CertificateStatus::Failed;
        cert.note = e.what();
        report.certificates[i] = std::move(cert);
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const Certificate& cert : report.certificates) {
    switch (cert.status) {
      case CertificateStatus::Verified: ++report.verified; break;
      case CertificateStatus::Failed: ++report.failed; break;
      case CertificateStatus::Undecided: ++report.undecided; break;
    }
    if (cert.status != CertificateStatus::Verified) ++report.disagreements;
    if (cert.status == CertificateStatus::Verified && cert.verdict.is_null) {
      report.null_cases.push_back({cert.k, cert.alpha});
    }
  }
  return report;
}

Ball reflection_residual(int k, const Rational& alpha, Precision prec) {
  check_order(k);
  check_unit_interval(alpha);
  const auto m = static_cast<unsigned>(k - 1);
  const Precision work = prec.plus(32 + bit_length(factorial(m)));
  const Ball series = s_series_ball(k, alpha, work).scaled(Rational(factorial(m)));
  const Ball psi_reflected = polygamma_ball(k - 1, Rational{1} - alpha, work);
  Ball psi = polygamma_ball(k - 1, alpha, work);
  if (k % 2 == 1) psi = -psi;
  return (series - psi_reflected - psi).with_precision(prec);
}

Ball gmr_formula_residual(int k, const Rational& alpha, Precision prec) {
  check_order(k);
  if (alpha.is_integer()) throw Error(ErrorCode::Pole, "S_k diverges at integer alpha = " + alpha.str());
  const auto m = static_cast<unsigned>(k - 1);
  const Precision work = prec.plus(32);
  const Rational scale = Rational{k % 2 == 0 ? 1 : -1} / Rational(factorial(m));
  const Ball derivative = cot_derivative_ball(m, alpha, work).scaled(scale);
  const Ball claimed = Ball::from_rational(alpha.reciprocal(), work) + derivative;
  return (claimed - s_series_ball(k, alpha, work)).with_precision(prec);
}

DerivativeCheck derivative_check(unsigned m, const Rational& alpha, const Rational& step, Precision prec) {
  if (m == 0) throw Error(ErrorCode::Domain, "derivative check needs m >= 1");
  if (step.sign() <= 0) throw Error(ErrorCode::Domain, "finite-difference step must be positive");
  const int k = 2 * static_cast<int>(m) + 1;
  const Rational left = alpha - step;
  const Rational right = alpha + step;
  if (alpha.floor() != left.floor() || alpha.floor() != right.floor() || left.is_integer()) {
    throw Error(ErrorCode::Domain, "finite-difference stencil crosses an integer");
  }
  DerivativeCheck check;
  check.k = k;
  check.alpha = alpha;
  check.step = step;

  // 1/(2h) amplifies series errors; keep them well under h^2.
  const Precision work = prec.plus(16 + bit_length(step.denominator()));
  const Ball difference = (s_series_ball(k, right, work) - s_series_ball(k, left, work)).scaled(
      (Rational{2} * step).reciprocal());
  check.residual = (difference + s_series_ball(k + 1, alpha, work).scaled(Rational{k})).with_precision(prec);

  const Precision coarse(64);
  const Rational third = std::max(s_series_ball(k + 3, left, coarse).upper(), s_series_ball(k + 3, right, coarse).upper());
  const Rational constant = Rational{k} * Rational{k + 1} * Rational{k + 2} / Rational{6} * third;
  check.tolerance = constant * step * step;
  check.pass = check.residual.magnitude() <= check.tolerance;
  return check;
}

std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Periodicity: return "periodicity";
    case PropertyKind::Positivity: return "positivity";
    case PropertyKind::Monotonicity: return "monotonicity";
    case PropertyKind::DerivativeIdentity: return "derivative_identity";
  }
  return "periodicity";
}

std::string_view to_string(PropertyStatus status) {
  switch (status) {
    case PropertyStatus::Pass: return "pass";
    case PropertyStatus::Fail: return "fail";
    case PropertyStatus::Vacuous: return "vacuous";
  }
  return "fail";
}

std::vector<Rational> unit_grid(const Rational& step) {
  if (step.sign() <= 0 || step.numerator() != 1 || step.denominator() < 2) {
    throw Error(ErrorCode::Domain, "grid step must be 1/n with n >= 2 (got " + step.str() +
                                       "); other steps leave the unit interval or touch an integer");
  }
  std::vector<Rational> grid;
  for (Rational a = step; a < Rational{1}; a += step) grid.push_back(a);
  return grid;
}

PropertyReport property_audit(int k_max, const Rational& grid_step, Precision prec) {
  check_order(k_max);
  const std::vector<Rational> grid = unit_grid(grid_step);
  const unsigned window = series_window(prec);
  const Rational h = Rational{2}.pow(-10);
  PropertyReport report;

  auto record = [&report](PropertyKind kind, int k, const Rational& alpha, PropertyStatus status,
                          std::string detail) {
    report.checks.push_back({kind, k, alpha, status, std::move(detail)});
    switch (status) {
      case PropertyStatus::Pass: ++report.passed; break;
      case PropertyStatus::Fail: ++report.failed; break;
      case PropertyStatus::Vacuous: ++report.vacuous; break;
    }
  };
  auto pass_if = [](bool ok) { return ok ? PropertyStatus::Pass : PropertyStatus::Fail; };

  for (int k = 2; k <= k_max; ++k) {
    std::vector<Ball> values;
    values.reserve(grid.size());
    for (const Rational& alpha : grid) {
      const Ball here = bilateral_window_ball(k, alpha, window, prec);
      const Ball shifted = bilateral_window_ball(k, alpha + Rational{1}, window, prec);
      record(PropertyKind::Periodicity, k, alpha, pass_if(here.overlaps(shifted)), "S_k(a) vs S_k(a+1)");
      values.push_back(s_series_ball(k, alpha, prec));
    }

    if (k % 2 == 0) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        record(PropertyKind::Positivity, k, grid[i], pass_if(values[i].certainly_positive()), "S_k(a) > 0");
      }
      continue;
    }

    if (grid.size() < 2) {
      record(PropertyKind::Monotonicity, k, grid.front(), PropertyStatus::Vacuous, "single grid point");
    } else {
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        record(PropertyKind::Monotonicity, k, grid[i], pass_if(values[i].certainly_greater(values[i + 1])),
               "S_k(" + grid[i].str() + ") > S_k(" + grid[i + 1].str() + ")");
      }
    }
    const auto m = static_cast<unsigned>((k - 1) / 2);
    for (const Rational& alpha : grid) {
      const DerivativeCheck check = derivative_check(m, alpha, h, prec);
      record(PropertyKind::DerivativeIdentity, k, alpha, pass_if(check.pass),
             "|residual| <= C h^2 <= 2^" + std::to_string(log2_bound(check.tolerance)));
    }
  }
  return report;
}

}  // namespace bilateral
