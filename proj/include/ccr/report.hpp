#ifndef CCR_REPORT_HPP
#define CCR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccr/serialize.hpp"

namespace ccr {

/// One measurement row of a report. `value` is a JSON scalar or object;
/// rows carrying a prediction state its provenance ("closed-form" or
/// "oracle") and a tolerance, and their pass flag compares value against
/// prediction.
struct ReportRow {
  std::string command;
  Json params = Json::object();
  std::string metric;
  Json value;
  Json predicted;  // null when no closed form exists
  std::string provenance;
  Json pass;       // true/false, or null when nothing is checked
  double tolerance = 0.0;
};

bool operator==(const ReportRow& a, const ReportRow& b);

Json row_to_json(const ReportRow& row);
ReportRow row_from_json(const Json& j);

/// Marks the row as checked: pass iff |value - predicted| <= tolerance.
void check_against_prediction(ReportRow& row, double value, double predicted,
                              double tolerance, const std::string& provenance);

/// Least-squares slope of log(y) against log(x); nullopt unless at least two
/// positive samples exist.
std::optional<double> log_log_slope(const std::vector<double>& xs,
                                    const std::vector<double>& ys);

/// {"rows": [...], "pass": bool} plus any extras merged in front of "pass".
Json report_document(const std::vector<ReportRow>& rows, const Json& extras);

/// True unless some row has pass == false.
bool all_rows_pass(const std::vector<ReportRow>& rows);

std::string rows_to_csv(const std::vector<ReportRow>& rows);

}  // namespace ccr

#endif
