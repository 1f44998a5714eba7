#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weyllab/catalog.hpp"

using namespace weyl;

TEST_CASE("catalog lists the expected families") {
  const auto names = catalog_names();
  const std::set<std::string> got(names.begin(), names.end());
  for (const char* n : {"minkowski", "schwarzschild", "eds", "desitter", "kasner",
                        "ltb", "ltb-dust", "conformal", "wavy"})
    CHECK(got.count(n) == 1);
  CHECK(catalog_list().size() == names.size());
}

TEST_CASE("unknown names are rejected") {
  CHECK_THROWS_AS(make_metric("nope"), std::invalid_argument);
}

TEST_CASE("catalog json carries classes and sample boxes") {
  const auto j = catalog_json();
  REQUIRE(j.is_array());
  bool sawSchw = false;
  for (const auto& e : j) {
    CHECK(e.contains("name"));
    CHECK(e.contains("classes"));
    CHECK(e.contains("sample_box"));
    if (e.at("name") == "schwarzschild") {
      sawSchw = true;
      std::set<std::string> cls;
      for (const auto& c : e.at("classes")) cls.insert(c.get<std::string>());
      CHECK(cls.count("vacuum") == 1);
      CHECK(cls.count("static") == 1);
    }
  }
  CHECK(sawSchw);
}

TEST_CASE("metric parameters reach the fields") {
  MetricSpec s1 = make_metric("schwarzschild");
  MetricSpec s2 = make_metric("schwarzschild", {{"m", 2.0}});
  Point p{0.0, {8.0, 1.5, 1.0}};
  // lapse^2 = 1 - 2m/r
  CHECK(s1.N(p) == doctest::Approx(std::sqrt(1.0 - 2.0 / 8.0)));
  CHECK(s2.N(p) == doctest::Approx(std::sqrt(1.0 - 4.0 / 8.0)));
}

TEST_CASE("domain guards reject the excluded regions") {
  MetricSpec s = make_metric("schwarzschild");
  CHECK(s.inDomain(Point{0.0, {4.0, 1.0, 0.5}}));
  CHECK_FALSE(s.inDomain(Point{0.0, {1.5, 1.0, 0.5}})); // inside the horizon guard
  CHECK_FALSE(s.inDomain(Point{0.0, {4.0, 0.1, 0.5}})); // polar axis guard

  MetricSpec e = make_metric("eds");
  CHECK_FALSE(e.inDomain(Point{0.05, {0, 0, 0}}));
}

TEST_CASE("spatial assembles the symmetric component functions") {
  MetricSpec s = make_metric("wavy");
  Point p{0.4, {0.3, -0.2, 0.7}};
  Mat3 g = s.spatial(p);
  CHECK(g(0, 1) == g(1, 0));
  CHECK(g(1, 2) == g(2, 1));
  CHECK(g(0, 1) == doctest::Approx(s.gComp(1, 2)(p)));
  CHECK(g.determinant() > 0.0);
}

TEST_CASE("closed-form references") {
  Point p{1.0, {0.4, 0.2, -0.3}};
  MetricSpec eds = make_metric("eds");
  CHECK(*exact_reference(eds, "M", p) == doctest::Approx(4.0 / 3.0));
  CHECK(*exact_reference(eds, "H", p) == doctest::Approx(-2.0));
  CHECK(*exact_reference(eds, "A2", p) ==
        doctest::Approx(5.0 / 3.0 * (4.0 / 3.0) * (4.0 / 3.0)));
  CHECK(*exact_reference(eds, "s", p) == doctest::Approx(0.0));

  MetricSpec schw = make_metric("schwarzschild");
  Point q{0.0, {4.0, 1.2, 1.0}};
  CHECK(*exact_reference(schw, "kretschmann", q) ==
        doctest::Approx(48.0 / std::pow(4.0, 6)));
  CHECK(*exact_reference(schw, "M", q) == 0.0); // static vacuum, no matter

  MetricSpec ds = make_metric("desitter");
  CHECK(*exact_reference(ds, "k", p) == doctest::Approx(0.0));
}

TEST_CASE("fluid metadata") {
  MetricSpec eds = make_metric("eds");
  REQUIRE(eds.fluid.has_value());
  CHECK(eds.fluid->k == doctest::Approx(1.0));
  CHECK(eds.fluid->alpha == doctest::Approx(1.0 / 3.0));

  MetricSpec kas = make_metric("kasner");
  CHECK_FALSE(kas.fluid.has_value());
}

TEST_CASE("seeded points are deterministic and inside the domain") {
  MetricSpec s = make_metric("ltb");
  auto a = seeded_points(s, 10, 99);
  auto b = seeded_points(s, 10, 99);
  auto c = seeded_points(s, 10, 100);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].x == b[i].x);
    CHECK(s.inDomain(a[i]));
  }
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].t != c[i].t) differs = true;
  CHECK(differs);
}

TEST_CASE("custom metric from an expression description") {
  nlohmann::json desc = {
      {"name", "hand-rolled"},
      {"lapse", "1"},
      {"g", {{"11", "t^2"}, {"22", "t^2"}, {"33", "t^2"}}},
      {"domain", {{"t", {0.5, 3.0}}}}};
  MetricSpec s = custom_metric(desc);
  CHECK(s.name == "hand-rolled");
  Point p{2.0, {0.1, 0.2, 0.3}};
  CHECK(s.spatial(p)(0, 0) == doctest::Approx(4.0));
  CHECK(s.spatial(p)(0, 1) == doctest::Approx(0.0));
  CHECK(s.inDomain(p));
  CHECK_FALSE(s.inDomain(Point{0.1, {0, 0, 0}}));
  CHECK_THROWS(custom_metric(nlohmann::json{{"name", "broken"}}));
}

TEST_CASE("kasner exponents satisfy the vacuum conditions") {
  MetricSpec s = make_metric("kasner");
  double p1 = s.params.at("p1"), p2 = s.params.at("p2"), p3 = s.params.at("p3");
  CHECK(p1 + p2 + p3 == doctest::Approx(1.0));
  CHECK(p1 * p1 + p2 * p2 + p3 * p3 == doctest::Approx(1.0));
}
