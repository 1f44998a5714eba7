#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weyllab/expr.hpp"

using namespace weyl;

namespace {
double ev(const std::string& s, const Point& p = Point{}) {
  return compile_expression(s)(p);
}
} // namespace

TEST_CASE("literals and arithmetic") {
  CHECK(ev("2 + 3*4") == doctest::Approx(14.0));
  CHECK(ev("(2 + 3)*4") == doctest::Approx(20.0));
  CHECK(ev("7/2 - 1") == doctest::Approx(2.5));
  CHECK(ev("1.5e2") == doctest::Approx(150.0));
  CHECK(ev("-3 + 1") == doctest::Approx(-2.0));
  CHECK(ev("--2") == doctest::Approx(2.0));
}

TEST_CASE("power associates right and admits signed operands") {
  CHECK(ev("2^3^2") == doctest::Approx(512.0));
  CHECK(ev("-2^2") == doctest::Approx(4.0)); // unary minus binds first
  CHECK(ev("2^-1") == doctest::Approx(0.5));
}

TEST_CASE("coordinates and pi") {
  Point p{2.0, {3.0, 5.0, 7.0}};
  CHECK(ev("t", p) == doctest::Approx(2.0));
  CHECK(ev("x1*x2 + x3", p) == doctest::Approx(22.0));
  CHECK(ev("pi") == doctest::Approx(M_PI));
}

TEST_CASE("functions") {
  Point p{0.5, {0.2, 0, 0}};
  CHECK(ev("sin(t)", p) == doctest::Approx(std::sin(0.5)));
  CHECK(ev("cos(t)^2 + sin(t)^2", p) == doctest::Approx(1.0));
  CHECK(ev("exp(x1)", p) == doctest::Approx(std::exp(0.2)));
  CHECK(ev("sqrt(t*2)", p) == doctest::Approx(1.0));
  CHECK(ev("pow(t, 3)", p) == doctest::Approx(0.125));
}

TEST_CASE("whitespace is free") {
  CHECK(ev("  1+ 2 *   3 ") == doctest::Approx(7.0));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(ev("2 +"), ExprError);
  CHECK_THROWS_AS(ev("(1 + 2"), ExprError);
  CHECK_THROWS_AS(ev("bogus(1)"), ExprError);
  CHECK_THROWS_AS(ev("1 2"), ExprError);
  bool threw = false;
  try {
    ev("1 + @");
  } catch (const ExprError& e) {
    threw = true;
    CHECK(e.position == 4);
  }
  CHECK(threw);
}

TEST_CASE("compiled field is reusable across points") {
  FieldFn f = compile_expression("t^2 + x1");
  CHECK(f(Point{1.0, {2.0, 0, 0}}) == doctest::Approx(3.0));
  CHECK(f(Point{3.0, {-1.0, 0, 0}}) == doctest::Approx(8.0));
}
