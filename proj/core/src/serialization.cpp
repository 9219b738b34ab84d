#include "bilateral/serialization.hpp"

#include <sstream>

namespace bilateral {

Json to_json(const PiMultiple& value) {
  return Json{{"coefficient", value.coefficient.str()}, {"pi_power", value.pi_power}};
}

Json to_json(const Ball& value) {
  return Json{{"midpoint", value.midpoint_decimal()}, {"radius_log2", value.radius_log2()}};
}

Json to_json(const SeriesDecomposition& value) {
  return Json{{"rational", value.rational_part.str()},
              {"pi_coefficient", value.pi_coefficient.str()},
              {"pi_power", value.pi_power}};
}

Json to_json(const NullityVerdict& verdict) {
  return Json{{"is_null", verdict.is_null},
              {"reason", std::string(to_string(verdict.reason))},
              {"label", verdict.is_null ? "algebraic (zero)" : "transcendental"}};
}

Json to_json(const Certificate& cert) {
  Json out{{"k", cert.k}, {"alpha", cert.alpha.str()}, {"verdict", to_json(cert.verdict)}};
  out["exact"] = cert.exact ? to_json(*cert.exact) : Json(nullptr);
  out["numeric"] = to_json(cert.numeric);
  out["pi_power_check"] = cert.pi_power_check;
  out["separation"] = cert.separation;
  out["status"] = std::string(to_string(cert.status));
  out["precision_bits"] = cert.precision_bits;
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

Json to_json(const ScanReport& report) {
  Json certificates = Json::array();
  for (const auto& cert : report.certificates) certificates.push_back(to_json(cert));
  Json nulls = Json::array();
  for (const auto& c : report.null_cases) nulls.push_back(Json{{"k", c.k}, {"alpha", c.alpha.str()}});
  return Json{{"certificates", std::move(certificates)},
              {"summary",
               {{"cells", report.cells()},
                {"verified", report.verified},
                {"failed", report.failed},
                {"undecided", report.undecided},
                {"null_cases", std::move(nulls)}}}};
}

Json to_json(const PropertyCheck& check) {
  return Json{{"check", std::string(to_string(check.kind))},
              {"k", check.k},
              {"alpha", check.alpha.str()},
              {"status", std::string(to_string(check.status))},
              {"detail", check.detail}};
}

Json to_json(const PropertyReport& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks) checks.push_back(to_json(check));
  return Json{{"checks", std::move(checks)},
              {"summary",
               {{"cells", report.checks.size()},
                {"verified", report.passed},
                {"failed", report.failed},
                {"undecided", 0},
                {"vacuous", report.vacuous},
                {"null_cases", Json::array()}}}};
}

Json to_json(const AuditEntry& entry) {
  Json input{{"m", entry.m}, {"z", entry.z.str()}, {"parity", std::string(to_string(entry.parity))}};
  Json closed = entry.closed ? to_json(*entry.closed) : Json{{"ball", to_json(entry.closed_ball)}};
  return Json{{"input", std::move(input)},
              {"direct_ball", to_json(entry.direct)},
              {"closed_value", std::move(closed)},
              {"agree", entry.agree},
              {"category", std::string(to_string(entry.category))},
              {"paper_claim", std::string(to_string(entry.claimed))},
              {"match", entry.match}};
}

Json to_json(const AuditReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(to_json(e));
  return Json{{"entries", std::move(entries)}};
}

PiMultiple pi_multiple_from_json(const Json& json) {
  return {QuadraticNumber::parse(json.at("coefficient").get<std::string>()), json.at("pi_power").get<int>()};
}

SeriesDecomposition decomposition_from_json(const Json& json) {
  return {Rational::parse(json.at("rational").get<std::string>()),
          QuadraticNumber::parse(json.at("pi_coefficient").get<std::string>()), json.at("pi_power").get<int>()};
}

Rational parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  const std::string whole = text.substr(0, dot);
  const std::string fraction = text.substr(dot + 1);
  const bool negative = !whole.empty() && whole.front() == '-';
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
  const Rational magnitude = Rational::parse(negative ? whole.substr(1) : whole).abs() +
                             Rational(Integer(fraction.empty() ? "0" : fraction, 10), scale);
  return negative ? -magnitude : magnitude;
}

BallSummary ball_summary_from_json(const Json& json) {
  return {parse_decimal(json.at("midpoint").get<std::string>()), json.at("radius_log2").get<long>()};
}

std::string certificate_csv_header() {
  return "k,alpha,is_null,reason,exact_coefficient,pi_power,midpoint,radius_log2,pi_power_check,separation,status,"
         "precision_bits";
}

std::string to_csv_row(const Certificate& cert) {
  std::ostringstream os;
  os << cert.k << ',' << cert.alpha.str() << ',' << (cert.verdict.is_null ? "true" : "false") << ','
     << to_string(cert.verdict.reason) << ',';
  if (cert.exact) {
    os << '"' << cert.exact->coefficient.str() << "\"," << cert.exact->pi_power;
  } else {
    os << ',';
  }
  os << ',' << cert.numeric.midpoint_decimal() << ',' << cert.numeric.radius_log2() << ','
     << (cert.pi_power_check ? "true" : "false") << ',' << (cert.separation ? "true" : "false") << ','
     << to_string(cert.status) << ',' << cert.precision_bits;
  return os.str();
}

}  // namespace bilateral
