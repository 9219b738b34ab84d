#pragma once

// JSON and CSV renderings of the library's results.
//
//   Rational         "p/q" ("p" when q = 1)
//   QuadraticNumber  "p/q + r/s*sqrt3"
//   PiMultiple       {"coefficient": "<quad>", "pi_power": k}
//   Ball             {"midpoint": "<decimal>", "radius_log2": e}
//   Decomposition    {"rational": "p/q", "pi_coefficient": "<quad>", "pi_power": j}
//   ScanReport       {"certificates": [...], "summary": {"cells", "verified",
//                     "failed", "undecided", "null_cases"}}
//   AuditReport      {"entries": [{input, direct_ball, closed_value, category,
//                     paper_claim, match}, ...]}
//
// All numbers that carry precision are decimal strings.

#include <string>

#include <nlohmann/json.hpp>

#include "bilateral/ball.hpp"
#include "bilateral/cotpoly.hpp"
#include "bilateral/theorems.hpp"
#include "bilateral/zeta.hpp"

namespace bilateral {

using Json = nlohmann::ordered_json;

Json to_json(const PiMultiple& value);
Json to_json(const Ball& value);
Json to_json(const SeriesDecomposition& value);
Json to_json(const NullityVerdict& verdict);
Json to_json(const Certificate& cert);
Json to_json(const ScanReport& report);
Json to_json(const PropertyCheck& check);
Json to_json(const PropertyReport& report);
Json to_json(const AuditEntry& entry);
Json to_json(const AuditReport& report);

PiMultiple pi_multiple_from_json(const Json& json);
SeriesDecomposition decomposition_from_json(const Json& json);

/// What survives a Ball's JSON form: the printed midpoint and the exponent.
struct BallSummary {
  Rational midpoint;
  long radius_log2 = 0;
};

BallSummary ball_summary_from_json(const Json& json);

/// Parses a decimal string such as "-12.5" exactly.
Rational parse_decimal(const std::string& text);

/// Fixed CSV header and one row per certificate.
std::string certificate_csv_header();
std::string to_csv_row(const Certificate& cert);

}  // namespace bilateral
