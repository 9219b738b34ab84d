#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bilateral/serialization.hpp"
#include "bilateral/theorems.hpp"
#include "bilateral/zeta.hpp"
#include "selftest.hpp"

namespace bilateral::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const char* what) {
  try {
    const Rational value = Rational::parse(text);
    if (!value.is_integer() || !value.numerator().fits_sint_p()) throw UsageError("");
    return static_cast<int>(value.numerator().get_si());
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  }
}

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + " must be a rational 'a/q', got '" + text + "'");
  }
}

std::string audit_csv(const AuditReport& report) {
  std::string out = "m,z,parity,direct_midpoint,direct_radius_log2,closed_rational,closed_pi_coefficient,pi_power,"
                    "agree,category,paper_claim,match\n";
  for (const AuditEntry& e : report.entries) {
    out += std::to_string(e.m) + "," + e.z.str() + "," + std::string(to_string(e.parity)) + "," +
           e.direct.midpoint_decimal() + "," + std::to_string(e.direct.radius_log2()) + ",";
    if (e.closed) {
      out += e.closed->rational_part.str() + ",\"" + e.closed->pi_coefficient.str() + "\"," +
             std::to_string(e.closed->pi_power);
    } else {
      out += ",,";
    }
    out += std::string(",") + (e.agree ? "true" : "false") + "," + std::string(to_string(e.category)) + "," +
           std::string(to_string(e.claimed)) + "," + (e.match ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < Precision::kMinBits) throw Error(ErrorCode::Usage, "--precision-bits must be >= 64");
  if (precision_bits > precision_cap) throw Error(ErrorCode::Usage, "--precision-bits must not exceed --precision-cap");
  if (k_min < 2 || k_max > 64 || k_min > k_max) {
    throw Error(ErrorCode::Usage, "k range must satisfy 2 <= kmin <= kmax <= 64");
  }
  if (q_max < 2) throw Error(ErrorCode::Usage, "--qmax must be >= 2");
  if (grid_step.numerator() != 1 || grid_step.denominator() < 2) {
    throw Error(ErrorCode::Usage, "--grid-step must be 1/n with n >= 2");
  }
}

int cmd_eval(const std::string& k_text, const std::string& alpha_text, const RunConfig& config, std::ostream& out,
             std::ostream& err) {
  try {
    config.validate();
    const int k = parse_int(k_text, "k");
    if (k < 2 || k > 64) throw UsageError("k must be an integer in [2, 64]");
    const Rational alpha = parse_rational(alpha_text, "alpha");
    if (alpha.is_integer()) throw UsageError("alpha must be non-integral");

    const Certificate cert =
        certify(k, alpha, Precision(config.precision_bits), Precision(config.precision_cap));
    if (config.format == OutputFormat::Json) {
      out << to_json(cert).dump(2) << "\n";
    } else {
      out << certificate_csv_header() << "\n" << to_csv_row(cert) << "\n";
    }
    if (cert.status == CertificateStatus::Undecided) err << cert.note << "\n";
    return cert.status == CertificateStatus::Verified ? kExitVerified : kExitFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::Usage ? kExitUsage : kExitFailed;
  }
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    ScanOptions options;
    options.k_min = config.k_min;
    options.k_max = config.k_max;
    options.q_max = config.q_max;
    options.precision_bits = config.precision_bits;
    options.precision_cap = config.precision_cap;
    const ScanReport report = scan(options);
    if (config.format == OutputFormat::Json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << certificate_csv_header() << "\n";
      for (const Certificate& cert : report.certificates) out << to_csv_row(cert) << "\n";
    }
    if (report.undecided > 0) err << report.undecided << " undecided cells; retry with a larger --precision-cap\n";
    return report.all_verified() ? kExitVerified : kExitFailed;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::Usage ? kExitUsage : kExitFailed;
  }
}

int cmd_zeta_audit(const std::string& m_text, const std::string& z_text, const RunConfig& config,
                   std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    const int m = parse_int(m_text, "m");
    if (m < 1) throw UsageError("m must be a positive integer");
    const Rational z = parse_rational(z_text, "z");
    if (z.is_zero()) throw UsageError("z must be nonzero");
    if (z.abs() >= Rational{1}) throw UsageError("z must satisfy |z| < 1");

    const AuditReport report = zeta_series_audit(static_cast<unsigned>(m), z, Precision(config.precision_bits));
    if (config.format == OutputFormat::Json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << audit_csv(report);
    }
    return report.all_agree() ? kExitVerified : kExitFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::Usage ? kExitUsage : kExitFailed;
  }
}

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    const SelftestResult result = run_selftest(config);
    if (config.format == OutputFormat::Json) {
      out << result.json.dump(2) << "\n";
    } else {
      out << "suite,passed,failed,undecided\n";
      for (const auto& suite : result.json.at("suites")) {
        out << suite.at("name").get<std::string>() << "," << suite.at("passed").get<int>() << ","
            << suite.at("failed").get<int>() << "," << suite.at("undecided").get<int>() << "\n";
      }
    }
    if (result.undecided > 0) {
      err << result.undecided << " undecided checks; retry with a larger --precision-bits or --precision-cap\n";
    }
    return result.ok() ? kExitVerified : kExitFailed;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::Usage ? kExitUsage : kExitFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified evaluation and classification of bilateral series sum_n (n + alpha)^-k"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string grid_step = "1/10";
  std::optional<int> k_min;
  std::optional<int> k_max;
  app.add_option("--precision-bits", config.precision_bits, "Working precision in bits (>= 64)");
  app.add_option("--precision-cap", config.precision_cap, "Largest precision tried when separating from 0");
  app.add_option("--kmin", k_min, "Smallest k (scan)");
  app.add_option("--kmax", k_max, "Largest k (scan)");
  app.add_option("--qmax", config.q_max, "Largest denominator (scan)");
  app.add_option("--grid-step", grid_step, "Grid step 1/n for the property audit");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string eval_k;
  std::string eval_alpha;
  auto* eval = app.add_subcommand("eval", "Certify S_k(alpha) for one (k, alpha)");
  eval->add_option("k", eval_k, "Order k > 1")->required();
  eval->add_option("alpha", eval_alpha, "Non-integral rational a/q")->required();
  eval->fallthrough();

  auto* scan_cmd = app.add_subcommand("scan", "Certify every k in [kmin, kmax] and a/q with q <= qmax");
  scan_cmd->fallthrough();

  std::string audit_m;
  std::string audit_z;
  auto* audit = app.add_subcommand("zeta-audit", "Audit the zeta series of order m at z");
  audit->add_option("m", audit_m, "Positive integer m")->required();
  audit->add_option("z", audit_z, "Rational z with 0 < |z| < 1")->required();
  audit->fallthrough();

  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  selftest->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (k_min) config.k_min = *k_min;
  if (k_max) config.k_max = *k_max;
  try {
    config.grid_step = Rational::parse(grid_step);
  } catch (const Error&) {
    err << "usage error: --grid-step must be a rational a/b\n";
    return kExitUsage;
  }

  if (eval->parsed()) return cmd_eval(eval_k, eval_alpha, config, out, err);
  if (scan_cmd->parsed()) return cmd_scan(config, out, err);
  if (audit->parsed()) return cmd_zeta_audit(audit_m, audit_z, config, out, err);
  return cmd_selftest(config, out, err);
}

}  // namespace bilateral::cli
