#include "weyllab/foliation.hpp"

#include <cmath>

namespace weyl {

namespace {

Mat3 expansion_at(const MetricSpec& spec, const Point& q, const StencilConfig& cfg) {
  const double N = spec.N(q);
  Mat3 h;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      FieldFn comp = spec.gComp(i, j);
      comp.domain = spec.domain;
      const double dt = d1(comp, q, 0, cfg);
      h(i - 1, j - 1) = h(j - 1, i - 1) = -dt / (2.0 * N);
    }
  return h;
}

// Fourth-order central derivative of a matrix-valued derived field.
template <typename F>
Mat3 mat_d1(F&& f, const Point& p, int axis, double baseStep) {
  const double h = baseStep * std::max(1.0, std::fabs(p.coord(axis)));
  Mat3 m2 = f(p.shifted(axis, -2 * h));
  Mat3 m1 = f(p.shifted(axis, -h));
  Mat3 p1 = f(p.shifted(axis, h));
  Mat3 p2 = f(p.shifted(axis, 2 * h));
  return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
}

int perm3(int i, int j, int k) {
  // permutation sign of spatial indices 1..3
  if (i == j || j == k || i == k) return 0;
  return ((j - i) * (k - i) * (k - j) > 0) ? 1 : -1;
}

} // namespace

FrameData frame(const MetricSpec& spec, const Point& p, const StencilConfig& cfg) {
  FrameData f;
  f.p = p;
  f.N = spec.N(p);
  f.g = spec.spatial(p);
  const double det = f.g.determinant();
  if (!(det > 0.0) || !(f.N > 0.0))
    throw DomainError("degenerate frame: need N > 0 and positive definite g");
  f.gInv = f.g.inverse();
  f.sqrtg = std::sqrt(det);
  f.h = expansion_at(spec, p, cfg);
  f.H = (f.gInv * f.h).trace();
  f.hTraceless = f.h - (f.H / 3.0) * f.g;
  return f;
}

double det_evolution_residual(const MetricSpec& spec, const Point& p,
                              const StencilConfig& cfg) {
  FrameData f = frame(spec, p, cfg);
  FieldFn sg;
  sg.domain = spec.domain;
  sg.f = [&spec](const Point& q) { return std::sqrt(spec.spatial(q).determinant()); };
  const double lhs = d1(sg, p, 0, StencilConfig::derived()) / f.N;
  return lhs + f.H * f.sqrtg;
}

SpatialGeometry spatial_geometry(const MetricSpec& spec, const Point& p,
                                 const StencilConfig& cfg) {
  Mat3 g = spec.spatial(p);
  Mat3 gInv = g.inverse();

  double dg[3][3][3];    // dg[k][i][j], spatial axes only, 0-based
  double ddg[3][3][3][3]; // ddg[k][l][i][j]
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      FieldFn comp = spec.gComp(i, j);
      comp.domain = spec.domain;
      for (int k = 1; k <= 3; ++k) {
        const double v = d1(comp, p, k, cfg);
        dg[k - 1][i - 1][j - 1] = dg[k - 1][j - 1][i - 1] = v;
        for (int l = k; l <= 3; ++l) {
          const double w = d2(comp, p, k, l, cfg);
          ddg[k - 1][l - 1][i - 1][j - 1] = ddg[k - 1][l - 1][j - 1][i - 1] = w;
          ddg[l - 1][k - 1][i - 1][j - 1] = ddg[l - 1][k - 1][j - 1][i - 1] = w;
        }
      }
    }

  double chr1[3][3][3]; // Gamma_{a bc}
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        chr1[a][b][c] = 0.5 * (dg[b][a][c] + dg[c][a][b] - dg[a][b][c]);

  SpatialGeometry out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int e = 0; e < 3; ++e) acc += gInv(a, e) * chr1[e][b][c];
        out.chr[a][b][c] = acc;
      }

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double v = 0.5 * (ddg[b][c][a][d] + ddg[a][d][b][c] - ddg[a][c][b][d] -
                            ddg[b][d][a][c]);
          for (int e = 0; e < 3; ++e)
            for (int f2 = 0; f2 < 3; ++f2)
              v += gInv(e, f2) *
                   (chr1[f2][d][a] * chr1[e][c][b] - chr1[f2][c][a] * chr1[e][d][b]);
          out.riemann[a][b][c][d] = v;
        }

  for (int b = 0; b < 3; ++b)
    for (int d = 0; d < 3; ++d) {
      double acc = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) acc += gInv(a, c) * out.riemann[a][b][c][d];
      out.ricci(b, d) = acc;
    }
  out.scalar = (gInv * out.ricci).trace();
  return out;
}

FrameDerivatives frame_derivatives(const MetricSpec& spec, const Point& p,
                                   const StencilConfig& cfg) {
  SpatialGeometry sp = spatial_geometry(spec, p, cfg);
  const StencilConfig dcfg = StencilConfig::derived();
  auto hAt = [&](const Point& q) { return expansion_at(spec, q, cfg); };

  FrameDerivatives out;
  out.dth = mat_d1(hAt, p, 0, dcfg.step);
  Mat3 dh[3];
  for (int l = 1; l <= 3; ++l) dh[l - 1] = mat_d1(hAt, p, l, dcfg.step);
  Mat3 h = hAt(p);
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = dh[l](i, j);
        for (int m = 0; m < 3; ++m)
          v -= sp.chr[m][l][i] * h(m, j) + sp.chr[m][l][j] * h(i, m);
        out.covdh[l][i][j] = v;
      }

  FieldFn lapse = spec.lapse;
  lapse.domain = spec.domain;
  for (int i = 1; i <= 3; ++i) out.dN(i - 1) = d1(lapse, p, i, cfg);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      double v = d2(lapse, p, i, j, cfg);
      for (int m = 0; m < 3; ++m) v -= sp.chr[m][i - 1][j - 1] * out.dN(m);
      out.hessN(i - 1, j - 1) = out.hessN(j - 1, i - 1) = v;
    }
  Mat3 gInv = spec.spatial(p).inverse();
  out.laplN = (gInv * out.hessN).trace();

  FieldFn Hf;
  Hf.domain = spec.domain;
  Hf.f = [&spec, &cfg](const Point& q) {
    return (spec.spatial(q).inverse() * expansion_at(spec, q, cfg)).trace();
  };
  for (int j = 1; j <= 3; ++j) out.gradH(j - 1) = d1(Hf, p, j, dcfg);
  return out;
}

GaussCodazzi gauss_codazzi_residuals(const MetricSpec& spec, const Point& p,
                                     const StencilConfig& cfg) {
  CurvatureBundle b = compute_curvature(spec, p, cfg);
  FrameData f = frame(spec, p, cfg);
  SpatialGeometry sp = spatial_geometry(spec, p, cfg);
  FrameDerivatives fd = frame_derivatives(spec, p, cfg);
  const Mat3 hUp = f.gInv * f.h; // h^k_j

  GaussCodazzi r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          const double rhs = sp.riemann[i][j][k][l] + f.h(i, k) * f.h(j, l) -
                             f.h(i, l) * f.h(j, k);
          r.gauss = std::max(
              r.gauss, std::fabs(b.riemann(i + 1, j + 1, k + 1, l + 1) - rhs));
        }
        const double cod = fd.covdh[j][i][k] - fd.covdh[k][i][j];
        r.codazzi = std::max(
            r.codazzi, std::fabs(b.riemann(0, i + 1, j + 1, k + 1) / f.N - cod));
      }
      double hh = 0.0;
      for (int m = 0; m < 3; ++m) hh += f.h(i, m) * hUp(m, j);
      const double rhs = fd.dth(i, j) + f.N * hh + fd.hessN(i, j);
      r.ricciEq = std::max(
          r.ricciEq, std::fabs(b.riemann(0, i + 1, 0, j + 1) / f.N - rhs));
    }
  return r;
}

Constraints constraint_residuals(const MetricSpec& spec, const Point& p,
                                 const StencilConfig& cfg) {
  CurvatureBundle b = compute_curvature(spec, p, cfg);
  FrameData f = frame(spec, p, cfg);
  SpatialGeometry sp = spatial_geometry(spec, p, cfg);
  FrameDerivatives fd = frame_derivatives(spec, p, cfg);

  const double h2 = (f.gInv * f.h * f.gInv * f.h).trace();
  const double M = b.stress(0, 0) / (f.N * f.N);

  Constraints c;
  c.hamiltonian = sp.scalar + f.H * f.H - h2 - 2.0 * M;
  for (int j = 0; j < 3; ++j) {
    double divh = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) divh += f.gInv(k, l) * fd.covdh[l][j][k];
    c.momentum(j) = fd.gradH(j) - divh - b.stress(0, j + 1) / f.N;
  }
  return c;
}

WeylEB weyl_eb(const CurvatureBundle& b) {
  const double N = b.m.lapse;
  const Mat3 g = b.m.spatial();
  const double sqrtg = std::sqrt(g.determinant());

  WeylEB out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.E(i, j) = b.weyl(0, i + 1, 0, j + 1) / (N * N);

  Tensor4 wUp = raise_index(raise_index(b.weyl, 0, b.m, MetricKind::Lorentzian), 1,
                            b.m, MetricKind::Lorentzian);
  // H_ij = (1/2) eps_{iTkl} W^{kl}_{jT}
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      double acc = 0.0;
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          const int s = perm3(i, k, l);
          if (s != 0) acc += -s * sqrtg * wUp(k, l, j, 0) / N;
        }
      out.B(i - 1, j - 1) = 0.5 * acc;
    }
  out.blocks = block_norms(b.weyl, N, b.m.spatialInv());
  return out;
}

Classification classify(const MetricSpec& spec, const Point& p, double tol,
                        const StencilConfig& cfg) {
  CurvatureBundle b = compute_curvature(spec, p, cfg);
  FrameData f = frame(spec, p, cfg);
  Classification c;
  c.weylBlocks = block_norms(b.weyl, f.N, f.gInv);
  c.riemannBarNormSq = norm_sq(b.riemann, b.m, MetricKind::Riemannian);
  c.weylBarNormSq = norm_sq(b.weyl, b.m, MetricKind::Riemannian);
  c.ricciMax = b.ricci.maxAbs();

  const double rNorm = std::sqrt(std::max(0.0, c.riemannBarNormSq));
  const double wNorm = std::sqrt(std::max(0.0, c.weylBarNormSq));
  c.flat = rNorm < tol;
  c.conformallyFlat = wNorm < tol * std::max(1.0, rNorm);
  c.vacuum = c.ricciMax < tol * std::max(1.0, rNorm);
  if (!c.conformallyFlat) {
    c.pureElectric = std::sqrt(std::max(0.0, c.weylBlocks.Tijk)) < tol * wNorm;
    c.pureMagnetic = std::sqrt(std::max(0.0, c.weylBlocks.TiTj)) < tol * wNorm;
  }
  FieldFn lapse = spec.lapse;
  lapse.domain = spec.domain;
  c.staticSlice = f.h.cwiseAbs().maxCoeff() < tol && std::fabs(d1(lapse, p, 0, cfg)) < tol;

  if (c.flat)
    c.primary = "Flat";
  else if (c.conformallyFlat)
    c.primary = "ConformallyFlat";
  else if (c.pureElectric)
    c.primary = "PureElectric";
  else if (c.pureMagnetic)
    c.primary = "PureMagnetic";
  else if (c.vacuum)
    c.primary = "Vacuum";
  else
    c.primary = "Mixed";
  return c;
}

AlphaExpansion alpha_expansion(const FrameData& f, double tol) {
  AlphaExpansion out;
  out.H = f.H;
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat3> es(f.h, f.g);
  for (int i = 0; i < 3; ++i) out.mu[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  const double scale =
      std::max(1.0, std::max(std::fabs(f.H), f.h.cwiseAbs().maxCoeff()));
  const double eps = tol * scale;

  if (f.H < -eps) {
    double cap = 1.0 / 0.0;
    for (double mu : out.mu) cap = std::min(cap, mu / f.H);
    if (cap >= -tol) {
      out.isExpanding = true;
      out.alphaMax = std::min(1.0 / 3.0, std::max(0.0, cap));
    }
  } else if (std::fabs(f.H) <= eps) {
    // H = 0: the condition forces h = 0, any alpha works
    if (f.h.cwiseAbs().maxCoeff() <= eps) {
      out.isExpanding = true;
      out.alphaMax = 1.0 / 3.0;
    }
  }
  return out;
}

nlohmann::json classification_json(const MetricSpec& spec, const Point& p, double tol) {
  Classification c = classify(spec, p, tol);
  FrameData f = frame(spec, p);
  AlphaExpansion a = alpha_expansion(f);
  GaussCodazzi gc = gauss_codazzi_residuals(spec, p);
  Constraints cs = constraint_residuals(spec, p);
  nlohmann::json j;
  j["point"] = {p.t, p.x[0], p.x[1], p.x[2]};
  j["class"] = c.primary;
  j["flags"] = {{"flat", c.flat},
                {"conformally_flat", c.conformallyFlat},
                {"vacuum", c.vacuum},
                {"pure_electric", c.pureElectric},
                {"pure_magnetic", c.pureMagnetic},
                {"static_slice", c.staticSlice}};
  j["blockNorms"] = {{"Tijk", c.weylBlocks.Tijk},
                     {"TiTj", c.weylBlocks.TiTj},
                     {"ijkl", c.weylBlocks.ijkl}};
  if (a.alphaMax)
    j["alphaMax"] = *a.alphaMax;
  else
    j["alphaMax"] = nullptr;
  j["isExpanding"] = a.isExpanding;
  j["residuals"] = {{"gauss", gc.gauss},
                    {"codazzi", gc.codazzi},
                    {"ricci_evolution", gc.ricciEq},
                    {"hamiltonian", cs.hamiltonian},
                    {"momentum", std::max({std::fabs(cs.momentum(0)),
                                           std::fabs(cs.momentum(1)),
                                           std::fabs(cs.momentum(2))})}};
  return j;
}

} // namespace weyl
