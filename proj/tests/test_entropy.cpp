#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyllab/entropy.hpp"

using namespace weyl;

TEST_CASE("critical density closed forms") {
  CHECK(s_crit(4.0 / 3.0, 0.0) ==
        doctest::Approx(11.0 * std::sqrt(2.0) / 12.0).epsilon(1e-14));
  CHECK(s_crit(1.0, 0.0) ==
        doctest::Approx(std::sqrt(2.0) / 4.0 + 2.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(s_crit(0.0, 0.0) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-14));
  CHECK(s_crit(1.0, 1.0 / 3.0) == doctest::Approx(0.0));
  CHECK(s_crit(0.7, 1.0 / 3.0) == doctest::Approx(0.0));
  // decreasing in alpha for fixed k
  CHECK(s_crit(1.0, 0.0) > s_crit(1.0, 0.2));
}

TEST_CASE("pointwise entropy on the reference families") {
  // flat: no curvature at all, density saturates at 1
  EntropyPoint mk = entropy_point(make_metric("minkowski"), Point{0.2, {0.1, 0.2, 0.3}});
  CHECK(mk.s == doctest::Approx(1.0));
  CHECK(mk.S == doctest::Approx(1.0));
  CHECK(mk.W2bar == doctest::Approx(0.0));

  // conformally flat dust: no anisotropic curvature
  MetricSpec eds = make_metric("eds");
  EntropyPoint ed = entropy_point(eds, Point{1.0, {0.3, -0.2, 0.5}}, eds.fluid);
  CHECK(std::fabs(ed.s) < 1e-4);
  CHECK(std::fabs(ed.S) < 1e-4);
  REQUIRE(ed.sCrit.has_value());
  CHECK(*ed.sCrit == doctest::Approx(0.0)); // radiation-free dust at alpha = 1/3
  CHECK(ed.A2bar > 1.0);

  // vacuum: riemann is pure weyl, density saturates
  EntropyPoint sw =
      entropy_point(make_metric("schwarzschild"), Point{0.3, {4.0, 1.2, 1.0}});
  CHECK(sw.s == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sw.signedW > 0.0); // electric-dominated
  CHECK(sw.sqrtg > 0.0);

  EntropyPoint ka = entropy_point(make_metric("kasner"), Point{1.0, {0.1, 0.2, 0.3}});
  CHECK(ka.s == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(ka.sBar.has_value()); // |A| = 0 with W != 0
}

TEST_CASE("scaling constant multiplies both density terms") {
  MetricSpec s = make_metric("schwarzschild");
  Point p{0.3, {4.0, 1.2, 1.0}};
  FluidParams f{1.0, 0.0, 0.0, 0.0};
  EntropyPoint a = entropy_point(s, p, f, 1e-10, 1.0);
  EntropyPoint b = entropy_point(s, p, f, 1e-10, 2.5);
  CHECK(b.S == doctest::Approx(2.5 * a.S));
  CHECK(b.Spf == doctest::Approx(2.5 * a.Spf));
}

TEST_CASE("quadrature nodes integrate high-degree polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  REQUIRE(x.size() == 5);
  double mass = 0.0, m8 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mass += w[i];
    m8 += w[i] * std::pow(x[i], 8);
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(m8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13)); // degree 9 exact at n = 5
  CHECK(x[0] == doctest::Approx(-x[4]).epsilon(1e-14));
}

TEST_CASE("unit cube in flat space") {
  MetricSpec s = make_metric("minkowski");
  RegionSpec r; // default unit box
  RegionEntropy re = region_entropy(s, r, 0.0);
  CHECK(re.vol == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(re.area == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(re.S_U == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(re.quadError < 1e-12);
  CHECK(re.S_U <= re.bound + 1e-12);
}

TEST_CASE("vacuum region entropy equals its area") {
  MetricSpec s = make_metric("schwarzschild");
  RegionSpec r;
  r.box = {{{3.5, 4.5}, {1.2, 1.8}, {1.0, 2.0}}};
  RegionEntropy re = region_entropy(s, r, 0.5);
  CHECK(re.S_U == doctest::Approx(re.area).epsilon(1e-6));
  CHECK(re.S_U <= re.bound + 1e-10);
  CHECK(re.minLapse > 0.0);
}

TEST_CASE("conformally flat ball carries no anisotropic entropy") {
  MetricSpec s = make_metric("eds");
  RegionSpec r;
  r.shape = RegionSpec::Shape::Ball;
  r.center = Vec3(0, 0, 0);
  r.radius = 0.8;
  RegionEntropy re = region_entropy(s, r, 1.0, s.fluid);
  CHECK(std::fabs(re.S_U) < 1e-4);
  CHECK(std::fabs(re.Spf_U) < 1e-4);
  CHECK(re.vol > 0.0);
  CHECK(re.area > 0.0);
}

TEST_CASE("area to volume ratio shrinks as dust expands") {
  MetricSpec s = make_metric("eds");
  RegionSpec r;
  r.shape = RegionSpec::Shape::Ball;
  r.radius = 0.8;
  CHECK(area_vol_monotonicity(s, r, 1.0) < 0.0);

  MetricSpec mk = make_metric("minkowski");
  RegionSpec box;
  CHECK(std::fabs(area_vol_monotonicity(mk, box, 0.5)) < 1e-8);
}

TEST_CASE("extremal region labels") {
  MetricSpec sw = make_metric("schwarzschild");
  RegionSpec r;
  r.box = {{{3.5, 4.5}, {1.2, 1.8}, {1.0, 2.0}}};
  ExtremalReport a = classify_extremal(sw, r, 0.5);
  CHECK(a.label == "MaximalStaticVacuumCandidate");
  CHECK(a.maxStaticRes < 1e-5);

  MetricSpec eds = make_metric("eds");
  RegionSpec ball;
  ball.shape = RegionSpec::Shape::Ball;
  ball.radius = 0.8;
  ExtremalReport b = classify_extremal(eds, ball, 1.0);
  CHECK(b.label == "MinimalFLRWCandidate");
  CHECK(b.maxWeylBar < 1e-8);
  CHECK(b.maxAlphaGap < 1e-5);

  MetricSpec wv = make_metric("wavy");
  RegionSpec wbox;
  wbox.box = {{{0.1, 0.5}, {0.1, 0.5}, {0.1, 0.5}}};
  ExtremalReport c = classify_extremal(wv, wbox, 0.6);
  CHECK(c.label == "Interior");
}

TEST_CASE("refining the quadrature tightens the cross-check") {
  MetricSpec s = make_metric("wavy");
  RegionSpec coarse;
  coarse.box = {{{0.1, 0.9}, {0.1, 0.9}, {0.1, 0.9}}};
  coarse.order = 4;
  RegionSpec fine = coarse;
  fine.order = 8;
  RegionEntropy a = region_entropy(s, coarse, 0.6);
  RegionEntropy b = region_entropy(s, fine, 0.6);
  CHECK(b.quadError <= a.quadError + 1e-12);
}
