#include <doctest.h>

#include <cmath>

#include "braident/serialize.hpp"

using namespace braident;

TEST_SUITE_BEGIN("serialize");

TEST_CASE("coordinates serialize as decimal strings of full precision") {
  LaminationCoords lam = l0(2);
  BigInt lambda = 1;
  for (int i = 0; i < 30; ++i) lambda *= 10;
  lam = scale(lam, lambda);
  lam.coords[0] = -7;

  const Json arr = coords_to_json(lam);
  REQUIRE(arr.size() == 4);
  CHECK(arr[0] == "-7");
  CHECK(arr[1] == "1000000000000000000000000000000");
  CHECK(arr[2] == "0");
}

TEST_CASE("double formatting is round-trip exact") {
  for (const double x : {0.1, 1.0 / 3.0, 0.962423650119206895, -1e-300, 0.0}) {
    CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(x) == format_double(x));
  }
}

TEST_CASE("estimates render to json with an optional display base") {
  EntropyEstimate est;
  est.value = std::log(4.0);
  est.iterations_used = 7;
  est.converged = true;
  est.estimator = Estimator::ratio;
  est.epsilon = 1e-6;

  Json config;
  config["subcommand"] = "estimate";

  const auto natural = Json::parse(estimate_to_json(est, config));
  CHECK(natural.at("estimate").at("value").get<double>() ==
        doctest::Approx(std::log(4.0)));
  CHECK(natural.at("estimate").at("estimator") == "ratio");
  CHECK(natural.at("config").at("subcommand") == "estimate");

  const auto base2 = Json::parse(estimate_to_json(est, config, 2.0));
  CHECK(base2.at("estimate").at("value").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("trace exports carry the per-iteration columns") {
  OrbitTrace trace = orbit(parse_braid("1 -2", 3), 5, Mode::exact);
  Json config;
  config["subcommand"] = "orbit";

  const std::string csv = trace_to_csv(trace, config);
  CHECK(csv.find("m,log_count,cesaro,ratio\n") != std::string::npos);
  CHECK(csv.find("# config") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header x2 + 5 rows

  const auto doc = Json::parse(trace_to_json(trace, config));
  CHECK(doc.at("braid") == "1 -2");
  CHECK(doc.at("strands") == 3);
  CHECK(doc.at("mode") == "exact");
  REQUIRE(doc.at("entries").size() == 5);
  CHECK(doc.at("entries")[0].at("m") == 1);
  CHECK(doc.at("entries")[0].at("log_count").get<double>() ==
        doctest::Approx(std::log(9.0)));
}

TEST_CASE("survey csv quotes words and repeats per-length tallies") {
  SurveyTable table;
  SurveyRow row;
  row.length = 2;
  row.examined = 3;
  row.pruned = 9;
  SearchRecord rec;
  rec.word = parse_braid("1 -2", 3);
  rec.length = 2;
  rec.strands = 3;
  rec.entropy = 0.5;
  rec.alternating = true;
  rec.converged = true;
  row.best.push_back(rec);
  table.rows.push_back(row);
  table.warnings.push_back("sample warning");

  const std::string csv = survey_to_csv(table, Json::object());
  CHECK(csv.find("\"1 -2\"") != std::string::npos);
  CHECK(csv.find("# warning sample warning\n") != std::string::npos);
  CHECK(csv.find("2,1,\"1 -2\",3,0.5,true,true,3,9\n") != std::string::npos);

  const auto doc = Json::parse(survey_to_json(table, Json::object()));
  CHECK(doc.at("rows")[0].at("best")[0].at("word") == "1 -2");
  CHECK(doc.at("warnings")[0] == "sample warning");
}

TEST_SUITE_END();
