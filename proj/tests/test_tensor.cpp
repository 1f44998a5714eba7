#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyllab/tensor.hpp"

using namespace weyl;

namespace {

Mat3 sample_spatial() {
  Mat3 g;
  g << 2.0, 0.3, 0.1, 0.3, 1.5, -0.2, 0.1, -0.2, 1.1;
  return g;
}

} // namespace

TEST_CASE("metric pair assembles the two signatures") {
  const double N = 1.7;
  MetricPair m = MetricPair::fromLapseSpatial(N, sample_spatial());
  CHECK(m.gamma(0, 0) == doctest::Approx(-N * N));
  CHECK(m.gammaBar(0, 0) == doctest::Approx(N * N));
  for (int i = 1; i < 4; ++i) {
    CHECK(m.gamma(0, i) == 0.0);
    CHECK(m.gammaBar(0, i) == 0.0);
    for (int j = 1; j < 4; ++j) {
      CHECK(m.gamma(i, j) == doctest::Approx(sample_spatial()(i - 1, j - 1)));
      CHECK(m.gammaBar(i, j) == m.gamma(i, j));
    }
  }
  CHECK((m.gamma * m.invGamma - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((m.gammaBar * m.invGammaBar - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("raise then lower is the identity") {
  MetricPair m = MetricPair::fromLapseSpatial(1.3, sample_spatial());
  Tensor4 t(3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) t(a, b, c) = 0.1 * a - 0.7 * b * c + 0.03 * c;

  for (MetricKind k : {MetricKind::Lorentzian, MetricKind::Riemannian}) {
    Tensor4 u = lower_index(raise_index(t, 1, m, k), 1, m, k);
    double res = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          res = std::max(res, std::fabs(u(a, b, c) - t(a, b, c)));
    CHECK(res < 1e-12);
    CHECK(u.variance(1) == Var::Lower);
  }
}

TEST_CASE("contract traces with the inverse metric on lower slots") {
  MetricPair m = MetricPair::fromLapseSpatial(1.0, Mat3::Identity());
  Tensor4 t(2);
  for (int a = 0; a < 4; ++a) t(a, a) = a + 1.0; // diag(1,2,3,4)
  Tensor4 s = contract(t, 0, 1, m, MetricKind::Lorentzian);
  CHECK(s.rank() == 0);
  // gamma^{00} = -1 picks up the sign on the time slot
  CHECK(s.at({0, 0, 0, 0}) == doctest::Approx(-1.0 + 2.0 + 3.0 + 4.0));
  Tensor4 sBar = contract(t, 0, 1, m, MetricKind::Riemannian);
  CHECK(sBar.at({0, 0, 0, 0}) == doctest::Approx(10.0));
}

TEST_CASE("norm_sq sign flips with the number of time legs") {
  MetricPair m = MetricPair::fromLapseSpatial(2.0, Mat3::Identity());
  Tensor4 t(1);
  t(0) = 3.0; // purely time-leg covector
  // |t|^2_gamma = gamma^{00} t_0 t_0 = -9/N^2
  CHECK(norm_sq(t, m, MetricKind::Lorentzian) == doctest::Approx(-9.0 / 4.0));
  CHECK(norm_sq(t, m, MetricKind::Riemannian) == doctest::Approx(9.0 / 4.0));
}

TEST_CASE("block_norms matches a brute-force contraction") {
  const double N = 1.4;
  const Mat3 g = sample_spatial();
  MetricPair m = MetricPair::fromLapseSpatial(N, g);
  const Mat3 gInv = g.inverse();

  Tensor4 w(4);
  // riemann-type filler: antisymmetric pairs, nonzero mixed blocks
  auto setblk = [&](int a, int b, int c, int d, double v) {
    w(a, b, c, d) = v;
    w(b, a, c, d) = -v;
    w(a, b, d, c) = -v;
    w(b, a, d, c) = v;
  };
  setblk(0, 1, 0, 2, 0.8);
  setblk(0, 1, 2, 3, -0.5);
  setblk(1, 2, 1, 3, 1.1);

  BlockNorms bn = block_norms(w, N, gInv);

  double tijk = 0.0, titj = 0.0, ijkl = 0.0;
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int k = 1; k < 4; ++k)
        for (int ip = 1; ip < 4; ++ip)
          for (int jp = 1; jp < 4; ++jp)
            for (int kp = 1; kp < 4; ++kp) {
              tijk += gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) *
                      gInv(k - 1, kp - 1) * w(0, i, j, k) * w(0, ip, jp, kp) /
                      (N * N);
              for (int l = 1; l < 4; ++l)
                for (int lp = 1; lp < 4; ++lp)
                  ijkl += gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) *
                          gInv(k - 1, kp - 1) * gInv(l - 1, lp - 1) *
                          w(i, j, k, l) * w(ip, jp, kp, lp);
            }
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int ip = 1; ip < 4; ++ip)
        for (int jp = 1; jp < 4; ++jp)
          titj += gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) * w(0, i, 0, j) *
                  w(0, ip, 0, jp) / (N * N * N * N);
  CHECK(bn.Tijk == doctest::Approx(tijk));
  CHECK(bn.TiTj == doctest::Approx(titj));
  CHECK(bn.ijkl == doctest::Approx(ijkl));
}

TEST_CASE("riemann symmetry residual flags a broken tensor") {
  Tensor4 good(4);
  // R_{0101} pattern with full riemann symmetries
  auto set = [&](int a, int b, int c, int d, double v) {
    good(a, b, c, d) = v;
    good(b, a, c, d) = -v;
    good(a, b, d, c) = -v;
    good(b, a, d, c) = v;
    good(c, d, a, b) = v;
    good(d, c, a, b) = -v;
    good(c, d, b, a) = -v;
    good(d, c, b, a) = v;
  };
  set(0, 1, 0, 1, 2.0);
  CHECK(riemann_symmetry_residual(good) < 1e-14);

  Tensor4 bad = good;
  bad(0, 1, 0, 1) += 0.5;
  CHECK(riemann_symmetry_residual(bad) > 0.4);
}

TEST_CASE("rank guards") {
  CHECK_THROWS_AS(Tensor4(5), ShapeError);
  Tensor4 t(2);
  CHECK_THROWS_AS(riemann_symmetry_residual(t), ShapeError);
}
