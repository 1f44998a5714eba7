#include "weyllab/curvature.hpp"

#include <cmath>

namespace weyl {

namespace {

// Field for one component of gamma = -N^2 dt^2 + g in adapted coordinates.
FieldFn gamma_comp(const MetricSpec& spec, int a, int b) {
  FieldFn f;
  f.domain = spec.domain;
  if (a == 0 && b == 0) {
    f.f = [&spec](const Point& p) {
      const double n = spec.N(p);
      return -n * n;
    };
  } else if (a == 0 || b == 0) {
    f.f = [](const Point&) { return 0.0; };
  } else {
    f.f = spec.gComp(a, b).f;
  }
  return f;
}

} // namespace

Tensor4 kulkarni_nomizu(const Tensor4& A, const Tensor4& B) {
  if (A.rank() != 2 || B.rank() != 2)
    throw ShapeError("kulkarni_nomizu needs two rank-2 tensors");
  Tensor4 out(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          out(a, b, c, d) = A(a, c) * B(b, d) + A(b, d) * B(a, c) -
                            A(a, d) * B(b, c) - A(b, c) * B(a, d);
  return out;
}

CurvatureBundle compute_curvature(const MetricSpec& spec, const Point& p,
                                  const StencilConfig& cfg) {
  CurvatureBundle out;
  out.p = p;
  out.m = MetricPair::fromLapseSpatial(spec.N(p), spec.spatial(p));
  const Mat4& ga = out.m.gamma;
  const Mat4& gaInv = out.m.invGamma;

  FieldFn comp[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) comp[a][b] = gamma_comp(spec, a, b);

  // First and second coordinate derivatives of the ten metric components.
  double dg[4][4][4] = {};    // dg[c][a][b] = partial_c gamma_ab
  double ddg[4][4][4][4] = {}; // ddg[c][d][a][b]
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      const bool zero = (a == 0) != (b == 0);
      for (int c = 0; c < 4; ++c) {
        const double v = zero ? 0.0 : d1(comp[a][b], p, c, cfg);
        dg[c][a][b] = dg[c][b][a] = v;
      }
      for (int c = 0; c < 4; ++c)
        for (int d = c; d < 4; ++d) {
          const double v = zero ? 0.0 : d2(comp[a][b], p, c, d, cfg);
          ddg[c][d][a][b] = ddg[c][d][b][a] = v;
          ddg[d][c][a][b] = ddg[d][c][b][a] = v;
        }
    }

  // Christoffel symbols of the first kind, then raised.
  double chr1[4][4][4]; // chr1[a][b][c] = Gamma_{a bc}
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        chr1[a][b][c] = 0.5 * (dg[b][a][c] + dg[c][a][b] - dg[a][b][c]);

  out.christoffel = Tensor4(3);
  out.christoffel.setVariance(0, Var::Upper);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double acc = 0.0;
        for (int e = 0; e < 4; ++e) acc += gaInv(a, e) * chr1[e][b][c];
        out.christoffel(a, b, c) = acc;
      }

  // R_abcd = (dd gamma terms)/2 + gamma^{ef}(G_fda G_ecb - G_fca G_edb)
  out.riemann = Tensor4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.5 * (ddg[b][c][a][d] + ddg[a][d][b][c] -
                            ddg[a][c][b][d] - ddg[b][d][a][c]);
          for (int e = 0; e < 4; ++e)
            for (int f = 0; f < 4; ++f)
              v += gaInv(e, f) *
                   (chr1[f][d][a] * chr1[e][c][b] - chr1[f][c][a] * chr1[e][d][b]);
          out.riemann(a, b, c, d) = v;
        }

  out.ricci = Tensor4(2);
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) acc += gaInv(a, c) * out.riemann(a, b, c, d);
      out.ricci(b, d) = acc;
    }

  out.scalar = 0.0;
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) out.scalar += gaInv(b, d) * out.ricci(b, d);

  out.schouten = Tensor4(2);
  out.stress = Tensor4(2);
  Tensor4 gam(2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      gam(a, b) = ga(a, b);
      out.schouten(a, b) = out.ricci(a, b) - (out.scalar / 6.0) * ga(a, b);
      out.stress(a, b) = out.ricci(a, b) - 0.5 * out.scalar * ga(a, b);
    }

  Tensor4 kn = kulkarni_nomizu(out.schouten, gam);
  out.aTensor = Tensor4(4);
  out.weyl = Tensor4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const double half = 0.5 * kn(a, b, c, d);
          out.aTensor(a, b, c, d) = half;
          out.weyl(a, b, c, d) = out.riemann(a, b, c, d) - half;
        }
  return out;
}

Tensor4 cotton(const MetricSpec& spec, const Point& p, const StencilConfig& cfg) {
  CurvatureBundle here = compute_curvature(spec, p, cfg);

  // Coordinate derivatives of the Schouten field, fourth-order stencil on the
  // coarse step used for FD-produced fields.
  const StencilConfig dcfg = StencilConfig::derived();
  double dS[4][4][4]; // dS[c][a][b]
  for (int c = 0; c < 4; ++c) {
    const double h = dcfg.step * std::max(1.0, std::fabs(p.coord(c)));
    Tensor4 sm2 = compute_curvature(spec, p.shifted(c, -2 * h), cfg).schouten;
    Tensor4 sm1 = compute_curvature(spec, p.shifted(c, -h), cfg).schouten;
    Tensor4 sp1 = compute_curvature(spec, p.shifted(c, h), cfg).schouten;
    Tensor4 sp2 = compute_curvature(spec, p.shifted(c, 2 * h), cfg).schouten;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        dS[c][a][b] =
            (sm2(a, b) - 8.0 * sm1(a, b) + 8.0 * sp1(a, b) - sp2(a, b)) / (12.0 * h);
  }

  // C_abc = D_c S_ab - D_b S_ac; the terms with the symmetric slot pair of
  // the connection cancel in the antisymmetrisation.
  Tensor4 out(3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double v = dS[c][a][b] - dS[b][a][c];
        for (int e = 0; e < 4; ++e)
          v += -here.christoffel(e, c, a) * here.schouten(e, b) +
               here.christoffel(e, b, a) * here.schouten(e, c);
        out(a, b, c) = v;
      }
  return out;
}

FluidReadout extract_fluid(const CurvatureBundle& b) {
  const double N = b.m.lapse;
  const Mat3 gInv = b.m.spatialInv();
  const Mat3 g = b.m.spatial();
  FluidReadout out;
  out.M = b.stress(0, 0) / (N * N);
  double trace = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) trace += gInv(i - 1, j - 1) * b.stress(i, j);
  out.P = trace / 3.0;
  double mom2 = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      mom2 += gInv(i - 1, j - 1) * (b.stress(0, i) / N) * (b.stress(0, j) / N);
  out.momentum = std::sqrt(std::fabs(mom2));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      out.anisotropy = std::max(
          out.anisotropy, std::fabs(b.stress(i, j) - out.P * g(i - 1, j - 1)));
  return out;
}

Tensor4 foliated_christoffel_reference(const MetricSpec& spec, const Point& p,
                                       const StencilConfig& cfg) {
  const double N = spec.N(p);
  const Mat3 g = spec.spatial(p);
  const Mat3 gInv = g.inverse();

  FieldFn lapse = spec.lapse;
  lapse.domain = spec.domain;
  double dN[4];
  for (int c = 0; c < 4; ++c) dN[c] = d1(lapse, p, c, cfg);

  // expansion tensor h_ij = -(1/2N) dt g_ij and spatial metric derivatives
  Mat3 h;
  double dgs[3][3][3]; // dgs[k][i][j] = partial_k g_ij, spatial k in 0..2
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      FieldFn comp = spec.gComp(i, j);
      comp.domain = spec.domain;
      const double dt = d1(comp, p, 0, cfg);
      h(i - 1, j - 1) = h(j - 1, i - 1) = -dt / (2.0 * N);
      for (int k = 1; k <= 3; ++k) {
        const double v = d1(comp, p, k, cfg);
        dgs[k - 1][i - 1][j - 1] = dgs[k - 1][j - 1][i - 1] = v;
      }
    }

  Tensor4 out(3);
  out.setVariance(0, Var::Upper);
  out(0, 0, 0) = dN[0] / N;
  for (int i = 1; i <= 3; ++i) {
    out(0, 0, i) = out(0, i, 0) = dN[i] / N;
    double acc = 0.0;
    for (int j = 1; j <= 3; ++j) acc += gInv(i - 1, j - 1) * dN[j];
    out(i, 0, 0) = N * acc;
    for (int j = 1; j <= 3; ++j) {
      double hij = 0.0;
      for (int k = 1; k <= 3; ++k) hij += gInv(i - 1, k - 1) * h(k - 1, j - 1);
      out(i, 0, j) = out(i, j, 0) = -N * hij;
      out(0, i, j) = out(0, j, i) = -h(i - 1, j - 1) / N;
    }
  }
  // spatial Christoffels of g at fixed t
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        double acc = 0.0;
        for (int l = 1; l <= 3; ++l)
          acc += 0.5 * gInv(k - 1, l - 1) *
                 (dgs[i - 1][l - 1][j - 1] + dgs[j - 1][l - 1][i - 1] -
                  dgs[l - 1][i - 1][j - 1]);
        out(k, i, j) = acc;
      }
  return out;
}

} // namespace weyl
