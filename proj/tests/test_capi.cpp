#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "weyllab.h"

using nlohmann::json;

namespace {

// takes ownership of the C string
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  weyl_string_free(s);
  return out;
}

} // namespace

TEST_CASE("open, close and error codes") {
  weyl_metric* m = nullptr;
  CHECK(weyl_metric_open("minkowski", nullptr, &m) == WEYL_OK);
  REQUIRE(m != nullptr);
  weyl_metric_close(m);

  weyl_metric* bad = nullptr;
  CHECK(weyl_metric_open("no-such-metric", nullptr, &bad) == WEYL_ERR_CONFIG);
  CHECK(bad == nullptr);
  CHECK(std::string(weyl_last_error()).find("no-such-metric") != std::string::npos);

  CHECK(weyl_metric_open("schwarzschild", "not json", &bad) == WEYL_ERR_CONFIG);
  CHECK(weyl_metric_open(nullptr, nullptr, &bad) == WEYL_ERR_CONFIG);
}

TEST_CASE("custom metric descriptions") {
  weyl_metric* m = nullptr;
  const char* desc = R"({"name":"iso","lapse":"1",
    "g":{"11":"t^2","22":"t^2","33":"t^2"},
    "domain":{"t":[0.5,3.0]}})";
  REQUIRE(weyl_metric_open_custom(desc, &m) == WEYL_OK);
  char* rep = nullptr;
  double x[3] = {0.1, 0.2, 0.3};
  CHECK(weyl_point_report_json(m, 1.5, x, nullptr, &rep) == WEYL_OK);
  json j = json::parse(take(rep));
  CHECK(j.at("metric") == "iso");
  weyl_metric_close(m);

  weyl_metric* bad = nullptr;
  CHECK(weyl_metric_open_custom(R"({"name":"broken"})", &bad) == WEYL_ERR_CONFIG);
}

TEST_CASE("catalog json is parseable and complete") {
  char* s = nullptr;
  REQUIRE(weyl_catalog_json(&s) == WEYL_OK);
  json j = json::parse(take(s));
  REQUIRE(j.is_array());
  CHECK(j.size() >= 9);
  for (const auto& e : j) CHECK(e.contains("name"));
}

TEST_CASE("point report fields and domain errors") {
  weyl_metric* m = nullptr;
  REQUIRE(weyl_metric_open("schwarzschild", R"({"m":1.0})", &m) == WEYL_OK);

  double x[3] = {4.0, 1.2, 1.0};
  char* rep = nullptr;
  REQUIRE(weyl_point_report_json(m, 0.3, x, nullptr, &rep) == WEYL_OK);
  json j = json::parse(take(rep));
  CHECK(j.at("classification").at("class") == "PureElectric");
  CHECK(j.at("entropy").at("s").get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(j.at("fluid").at("M").get<double>() == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(j.at("reference").at("kretschmann").get<double>() ==
        doctest::Approx(48.0 / std::pow(4.0, 6)));

  double inside[3] = {1.0, 1.2, 1.0}; // behind the horizon guard
  char* bad = nullptr;
  CHECK(weyl_point_report_json(m, 0.3, inside, nullptr, &bad) == WEYL_ERR_DOMAIN);

  // malformed fd options
  CHECK(weyl_point_report_json(m, 0.3, x, R"({"fd":{"order":3}})", &bad) ==
        WEYL_ERR_CONFIG);
  weyl_metric_close(m);
}

TEST_CASE("region entropy of the flat unit cube") {
  weyl_metric* m = nullptr;
  REQUIRE(weyl_metric_open("minkowski", nullptr, &m) == WEYL_OK);
  char* s = nullptr;
  REQUIRE(weyl_region_entropy_json(m, R"({"t":0.0})", &s) == WEYL_OK);
  json j = json::parse(take(s));
  CHECK(j.at("S_U").get<double>() == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(j.at("vol").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("extremal").contains("label"));

  char* bad = nullptr;
  CHECK(weyl_region_entropy_json(m, R"({})", &bad) == WEYL_ERR_CONFIG); // no t
  CHECK(weyl_region_entropy_json(m, R"({"t":0,"region":{"shape":"cone"}})", &bad) ==
        WEYL_ERR_CONFIG);
  weyl_metric_close(m);
}

TEST_CASE("scan csv schema and row count") {
  weyl_metric* m = nullptr;
  REQUIRE(weyl_metric_open("eds", nullptr, &m) == WEYL_OK);
  const char* cfg = R"({"t0":0.8,"t1":1.2,"steps":5,
    "region":{"shape":"ball","center":[0,0,0],"radius":0.5}})";
  char* s = nullptr;
  REQUIRE(weyl_region_scan_csv(m, cfg, &s) == WEYL_OK);
  std::string csv = take(s);
  CHECK(csv.rfind("t,S_U,Spf_U,area,vol,bound,quadError\n", 0) == 0);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 6); // header + 5 rows

  char* js = nullptr;
  REQUIRE(weyl_region_scan_json(m, cfg, &js) == WEYL_OK);
  json j = json::parse(take(js));
  REQUIRE(j.at("rows").size() == 5);
  CHECK(j.at("rows").front().at("t").get<double>() == doctest::Approx(0.8));
  CHECK(j.at("rows").back().at("t").get<double>() == doctest::Approx(1.2));

  char* bad = nullptr;
  CHECK(weyl_region_scan_csv(m, R"({"t0":1.0,"t1":2.0,"steps":1})", &bad) ==
        WEYL_ERR_CONFIG);
  CHECK(weyl_region_scan_csv(m, R"({"t0":1.0})", &bad) == WEYL_ERR_CONFIG);
  weyl_metric_close(m);
}

TEST_CASE("verification entry point, single-metric subset") {
  char* s = nullptr;
  int allPass = 0;
  REQUIRE(weyl_verify_json(R"({"metric":"minkowski","points":2})", &s, &allPass) ==
          WEYL_OK);
  json j = json::parse(take(s));
  CHECK(allPass == 1);
  CHECK(j.at("pass") == true);
  CHECK(j.at("cases").is_array());
  CHECK(j.at("cases").size() >= 1);

  char* bad = nullptr;
  CHECK(weyl_verify_json(R"({"metric":"nope"})", &bad, nullptr) == WEYL_ERR_CONFIG);
}
