#include "ccr/report.hpp"

#include <cmath>

#include "ccr/error.hpp"

namespace ccr {

bool operator==(const ReportRow& a, const ReportRow& b) {
  return row_to_json(a) == row_to_json(b);
}

Json row_to_json(const ReportRow& row) {
  if (!row.predicted.is_null() && row.provenance.empty()) {
    throw Error("report row with a prediction must carry a provenance tag");
  }
  Json out;
  out["command"] = row.command;
  out["params"] = row.params;
  out["metric"] = row.metric;
  out["value"] = row.value;
  out["predicted"] = row.predicted;
  out["provenance"] = row.provenance;
  out["pass"] = row.pass;
  out["tolerance"] = row.tolerance;
  return out;
}

ReportRow row_from_json(const Json& j) {
  ReportRow row;
  row.command = j.at("command").get<std::string>();
  row.params = j.at("params");
  row.metric = j.at("metric").get<std::string>();
  row.value = j.at("value");
  row.predicted = j.at("predicted");
  row.provenance = j.at("provenance").get<std::string>();
  row.pass = j.at("pass");
  row.tolerance = j.at("tolerance").get<double>();
  return row;
}

void check_against_prediction(ReportRow& row, double value, double predicted,
                              double tolerance, const std::string& provenance) {
  row.predicted = predicted;
  row.provenance = provenance;
  row.tolerance = tolerance;
  row.pass = std::abs(value - predicted) <= tolerance;
}

std::optional<double> log_log_slope(const std::vector<double>& xs,
                                    const std::vector<double>& ys) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (xs[i] > 0.0 && ys[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

Json report_document(const std::vector<ReportRow>& rows, const Json& extras) {
  Json out;
  Json json_rows = Json::array();
  for (const auto& row : rows) json_rows.push_back(row_to_json(row));
  out["rows"] = std::move(json_rows);
  if (extras.is_object()) {
    for (const auto& [key, value] : extras.items()) {
      out[key] = value;
    }
  }
  out["pass"] = all_rows_pass(rows);
  return out;
}

bool all_rows_pass(const std::vector<ReportRow>& rows) {
  for (const auto& row : rows) {
    if (row.pass.is_boolean() && !row.pass.get<bool>()) return false;
  }
  return true;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_to_csv(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "command,metric,value,predicted,provenance,pass,tolerance,params\n";
  for (const auto& row : rows) {
    const Json j = row_to_json(row);
    out += csv_escape(j.at("command").get<std::string>());
    out += ',';
    out += csv_escape(j.at("metric").get<std::string>());
    out += ',';
    out += csv_escape(scalar_to_csv(j.at("value")));
    out += ',';
    out += csv_escape(scalar_to_csv(j.at("predicted")));
    out += ',';
    out += csv_escape(j.at("provenance").get<std::string>());
    out += ',';
    out += csv_escape(scalar_to_csv(j.at("pass")));
    out += ',';
    out += csv_escape(scalar_to_csv(j.at("tolerance")));
    out += ',';
    out += csv_escape(j.at("params").dump());
    out += '\n';
  }
  return out;
}

}  // namespace ccr
