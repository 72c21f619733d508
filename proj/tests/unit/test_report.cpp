#include <doctest.h>

#include <cmath>

#include "ccr/error.hpp"
#include "ccr/runners.hpp"

using namespace ccr;

namespace {

PhaseVector vec(std::initializer_list<int> entries) {
  PhaseVector out;
  for (int e : entries) out.emplace_back(e);
  return out;
}

Json line_gens() { return Json::array({Json::array({"1", "0"})}); }

}  // namespace

TEST_CASE("report rows round trip through JSON") {
  ReportRow row;
  row.command = "hypertrace";
  row.params = {{"op", "W[1,0]"}, {"N", 4}};
  row.metric = "hypertrace-commutator";
  row.value = 0.4;
  check_against_prediction(row, 0.4, 0.4, 1e-12, "closed-form");

  const Json j = row_to_json(row);
  const ReportRow back = row_from_json(j);
  CHECK(back == row);
  CHECK(row_to_json(back) == j);
}

TEST_CASE("rows with predictions need provenance") {
  ReportRow row;
  row.command = "x";
  row.metric = "y";
  row.value = 1.0;
  row.predicted = 1.0;
  CHECK_THROWS_WITH_AS(row_to_json(row), doctest::Contains("provenance"),
                       Error);
}

TEST_CASE("log log slope of exact power laws") {
  const std::vector<double> xs{5, 9, 17, 33};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(2.0 / x);
  CHECK(*log_log_slope(xs, ys) == doctest::Approx(-1.0).epsilon(1e-12));

  ys.clear();
  for (double x : xs) ys.push_back(1.0 / std::sqrt(x));
  CHECK(*log_log_slope(xs, ys) == doctest::Approx(-0.5).epsilon(1e-12));

  CHECK_FALSE(log_log_slope({1.0}, {1.0}).has_value());
  CHECK_FALSE(log_log_slope({1.0, 2.0}, {0.0, -1.0}).has_value());
}

TEST_CASE("hypertrace runner emits checked rows") {
  const SymplecticSpace space(1);
  const auto out =
      run_hypertrace(space, {vec({1, 0})}, 4, std::nullopt, {"W[1,0]"});
  REQUIRE(out.rows.size() == 1);
  CHECK(out.pass);
  CHECK(out.rows[0].value.get<double>() ==
        doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(out.rows[0].predicted.get<double>() ==
        doctest::Approx(2.0 / 9.0).epsilon(1e-15));
  CHECK(out.rows[0].provenance == "closed-form");
}

TEST_CASE("defect sweep matches the closed form and annotates the slope") {
  Json spec;
  spec["command"] = "defect";
  spec["gens"] = line_gens();
  spec["grid"] = {{"N", {4, 12}}};
  spec["pairs"] = Json::array({Json::array({"adj(W[1,0])", "W[1,0]"})});
  bool pass = false;
  const Json doc = run_sweep(spec, pass);
  CHECK(pass);
  const auto& rows = doc.at("sweeps").at(0).at("rows");
  REQUIRE(rows.size() == 2);
  CHECK(rows.at(0).at("value").get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(rows.at(1).at("value").get<double>() ==
        doctest::Approx(0.2).epsilon(1e-12));
  const auto& slopes = doc.at("sweeps").at(0).at("slopes");
  REQUIRE(slopes.size() == 1);
  CHECK(std::abs(slopes.at(0).at("slope").get<double>() + 0.5) < 1e-6);
}

TEST_CASE("empty sweep grid aborts with an error") {
  Json spec;
  spec["command"] = "hypertrace";
  spec["gens"] = line_gens();
  spec["grid"] = {{"N", Json::array()}};
  spec["ops"] = Json::array({"W[1,0]"});
  bool pass = false;
  CHECK_THROWS_AS(run_sweep(spec, pass), Error);
}

TEST_CASE("sweep documents are deterministic") {
  Json spec;
  spec["sweeps"] = Json::array();
  Json hyper;
  hyper["command"] = "hypertrace";
  hyper["gens"] = line_gens();
  hyper["grid"] = {{"N", {2, 4}}};
  hyper["ops"] = Json::array({"W[1,0]"});
  spec["sweeps"].push_back(hyper);
  Json ensemble;
  ensemble["command"] = "cp-ensemble";
  ensemble["gens"] = line_gens();
  ensemble["N"] = 2;
  ensemble["count"] = 6;
  ensemble["seed"] = 9;
  spec["sweeps"].push_back(ensemble);

  bool pass_a = false, pass_b = false;
  const std::string a = run_sweep(spec, pass_a).dump(2);
  const std::string b = run_sweep(spec, pass_b).dump(2);
  CHECK(pass_a);
  CHECK(pass_b);
  CHECK(a == b);
}

TEST_CASE("csv emission is lossy but stable") {
  const SymplecticSpace space(1);
  const auto out =
      run_hypertrace(space, {vec({1, 0})}, 2, std::nullopt, {"W[1,0]"});
  const std::string csv = rows_to_csv(out.rows);
  CHECK(csv.find("command,metric,value") == 0);
  CHECK(csv.find("hypertrace") != std::string::npos);
}

TEST_CASE("folner ratio runner brackets the numeric rank") {
  const SymplecticSpace space(1);
  const auto out = run_folner_ratio(space, {vec({1, 0}), vec({0, 1})}, 5,
                                    {"W[1,0]", "W[0,0]"});
  REQUIRE(out.rows.size() == 2);
  CHECK(out.pass);
  CHECK(out.rows[0].value.at("upper").get<std::string>() == "6/5");
  CHECK(out.rows[1].value.at("numeric").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("character runner reports exact scalar behavior") {
  const SymplecticSpace space(1);
  Character chi;
  chi.mu = Eigen::Vector2d(1.5, -0.5);
  const auto out = run_character_report(
      space, chi, {"R(1;1,0)", "R(1;1,0)*R(-2;0,1)"}, 25, 3);
  CHECK(out.pass);
  bool found_domain_row = false;
  for (const auto& row : out.rows) {
    if (row.metric == "mult-domain-distance") {
      found_domain_row = true;
      CHECK(row.value.get<double>() == 0.0);
    }
  }
  CHECK(found_domain_row);
}
