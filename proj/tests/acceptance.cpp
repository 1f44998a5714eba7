// Acceptance battery for the foliated-spacetime entropy library. Each
// criterion prints a single pass/fail line; the exit code is the number of
// failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "weyllab/verify.hpp"

using namespace weyl;

namespace {

int g_failures = 0;

struct Criterion {
  const char* label;
  std::chrono::steady_clock::time_point start;
  explicit Criterion(const char* l) : label(l), start(std::chrono::steady_clock::now()) {}
  void report(bool ok, const std::string& detail = "") {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-28s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++g_failures;
  }
};

bool approx(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void criterion1() {
  Criterion c("curvature-identities");
  bool ok = true;
  double worst = 0.0;
  for (const auto& spec : catalog_list()) {
    VerificationCase vc =
        check_curvature_identities(spec, seeded_points(spec, 20, 7771));
    ok = ok && vc.pass;
    worst = std::max(worst, vc.maxResidual);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
  c.report(ok, buf);
}

void criterion2() {
  Criterion c("splitting-and-constraints");
  bool ok = true;
  double worst = 0.0;
  for (const auto& spec : catalog_list()) {
    for (const Point& p : seeded_points(spec, 3, 2024)) {
      GaussCodazzi gc = gauss_codazzi_residuals(spec, p);
      Constraints cs = constraint_residuals(spec, p);
      const double r = std::max({gc.gauss, gc.codazzi, gc.ricciEq,
                                 std::fabs(cs.hamiltonian),
                                 cs.momentum.cwiseAbs().maxCoeff()});
      worst = std::max(worst, r);
      ok = ok && r < 1e-5;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
  c.report(ok, buf);
}

void criterion3() {
  Criterion c("closed-form-oracles");
  bool ok = true;

  MetricSpec sw = make_metric("schwarzschild");
  Point q{0.3, {4.0, 1.2, 1.0}};
  CurvatureBundle b = compute_curvature(sw, q);
  const double kre = norm_sq(b.riemann, b.m, MetricKind::Lorentzian);
  ok = ok && approx(kre, *exact_reference(sw, "kretschmann", q), 1e-6);

  MetricSpec eds = make_metric("eds");
  Point p{1.0, {0.3, -0.2, 0.5}};
  CurvatureBundle be = compute_curvature(eds, p);
  FluidReadout fr = extract_fluid(be);
  ok = ok && approx(fr.M, *exact_reference(eds, "M", p), 1e-6);
  const double a2 = norm_sq(be.aTensor, be.m, MetricKind::Riemannian);
  ok = ok && approx(a2, *exact_reference(eds, "A2", p), 1e-6);

  MetricSpec ds = make_metric("desitter");
  CurvatureBundle bd = compute_curvature(ds, Point{0.5, {0.1, 0.2, 0.3}});
  FluidReadout fd = extract_fluid(bd);
  // vacuum-energy detection: P = -M, so k = 1 + P/M = 0
  ok = ok && std::fabs(1.0 + fd.P / fd.M) < 1e-6;

  c.report(ok);
}

void criterion4() {
  Criterion c("electric-evolution");
  bool ok = true;
  double worst = 0.0;
  for (const char* name : {"ltb", "kasner"}) {
    MetricSpec s = make_metric(name);
    for (const Point& p : seeded_points(s, 5, 9182)) {
      EvolutionReport w = check_weyl_evolution_electric(s, p);
      EvolutionReport e = check_entropy_evolution_electric(s, p, s.fluid);
      ok = ok && w.pass && (e.pass || e.skipped);
      worst = std::max({worst, w.relResidual, e.skipped ? 0.0 : e.relResidual});
    }
  }
  // exact branch: D_T S = -H sqrt(g) = 1 on the anisotropic vacuum
  MetricSpec ka = make_metric("kasner");
  for (const Point& p : seeded_points(ka, 5, 3344)) {
    EvolutionReport e = check_entropy_evolution_electric(ka, p);
    ok = ok && e.pass && std::fabs(e.rhs - 1.0) < 1e-8 && e.residual < 1e-8;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max rel residual %.2e", worst);
  c.report(ok, buf);
}

void criterion5() {
  Criterion c("entropy-monotonicity");
  MetricSpec ltb = make_metric("ltb");
  RegionSpec region;
  region.box = {{{1.0, 1.6}, {1.0, 2.0}, {1.0, 3.0}}};
  MonotonicityScan scan = check_monotonicity_electric(
      ltb, region, {0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1},
      FluidParams{1.0, 0.0, 0.0, 0.0});
  bool ok = scan.pass && scan.minDtSpf >= -1e-5;

  MetricSpec eds = make_metric("eds");
  RegionSpec ball;
  ball.shape = RegionSpec::Shape::Ball;
  ball.radius = 0.5;
  MonotonicityScan a =
      check_monotonicity_electric(eds, ball, {0.8, 1.0, 1.2}, eds.fluid);
  ok = ok && a.pass && a.equalityBiconditional;

  MetricSpec sw = make_metric("schwarzschild");
  RegionSpec box;
  box.box = {{{3.5, 4.5}, {1.2, 1.8}, {1.0, 2.0}}};
  MonotonicityScan sb = check_monotonicity_electric(
      sw, box, {0.3, 0.5, 0.7}, FluidParams{1.0, 0.0, 0.0, 0.0});
  ok = ok && sb.pass && sb.equalityBiconditional;

  char buf[64];
  std::snprintf(buf, sizeof buf, "min D_T S^pf %.2e", scan.minDtSpf);
  c.report(ok, buf);
}

void criterion6() {
  Criterion c("magnetic-evolution");
  MagneticCheck mc = check_weyl_evolution_magnetic(100, 20240901u);
  bool ok = mc.pass && mc.tensors == 100 && mc.maxOracleResidual < 1e-12 &&
            mc.minRhs >= -1e-10;
  char buf[64];
  std::snprintf(buf, sizeof buf, "oracle residual %.2e", mc.maxOracleResidual);
  c.report(ok, buf);
}

void criterion7() {
  Criterion c("region-entropy");
  bool ok = true;

  MetricSpec mk = make_metric("minkowski");
  RegionSpec cube;
  RegionEntropy rc = region_entropy(mk, cube, 0.0);
  ok = ok && std::fabs(rc.S_U - 6.0) < 1e-10 && rc.quadError < 1e-10;
  ok = ok && rc.S_U <= rc.bound + 1e-12;

  MetricSpec eds = make_metric("eds");
  RegionSpec ball;
  ball.shape = RegionSpec::Shape::Ball;
  ball.radius = 0.8;
  RegionEntropy rb = region_entropy(eds, ball, 1.0, eds.fluid);
  ok = ok && std::fabs(rb.S_U) < 1e-4 && rb.Spf_U <= rb.bound + 1e-12;

  MetricSpec sw = make_metric("schwarzschild");
  RegionSpec box;
  box.box = {{{3.5, 4.5}, {1.2, 1.8}, {1.0, 2.0}}};
  RegionEntropy rs = region_entropy(sw, box, 0.5, FluidParams{1.0, 0.0, 0.0, 0.0});
  ok = ok && std::fabs(rs.S_U - rs.area) / rs.area < 1e-6;
  ok = ok && rs.Spf_U <= rs.bound + 1e-12;

  c.report(ok);
}

void criterion8() {
  Criterion c("extremal-classification");
  MetricSpec sw = make_metric("schwarzschild");
  RegionSpec box;
  box.box = {{{3.5, 4.5}, {1.2, 1.8}, {1.0, 2.0}}};
  ExtremalReport a = classify_extremal(sw, box, 0.5);
  bool ok = a.label == "MaximalStaticVacuumCandidate" && a.maxStaticRes < 1e-5;

  MetricSpec eds = make_metric("eds");
  RegionSpec ball;
  ball.shape = RegionSpec::Shape::Ball;
  ball.radius = 0.8;
  ExtremalReport b = classify_extremal(eds, ball, 1.0);
  ok = ok && b.label == "MinimalFLRWCandidate";
  c.report(ok, a.label + " / " + b.label);
}

void criterion9() {
  Criterion c("critical-density-table");
  bool ok = true;
  ok = ok && std::fabs(s_crit(4.0 / 3.0, 0.0) - 11.0 * std::sqrt(2.0) / 12.0) < 1e-12;
  ok = ok &&
       std::fabs(s_crit(1.0, 0.0) - (std::sqrt(2.0) / 4.0 + 2.0 / std::sqrt(5.0))) <
           1e-12;
  ok = ok && std::fabs(s_crit(0.0, 0.0) - std::sqrt(2.0) / 4.0) < 1e-12;
  ok = ok && s_crit(1.0, 1.0 / 3.0) == 0.0;
  ok = ok && s_crit(0.4, 1.0 / 3.0) == 0.0;
  c.report(ok);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
