#include "weyllab/entropy.hpp"

#include <cmath>

#include "weyllab/parallel.hpp"

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct QuadNode {
  Point p;
  double w; // coordinate-space weight (no metric factor)
};

// Boundary node with tangent frame for the induced area element.
struct SurfNode {
  Point p;
  Vec3 t1;
  Vec3 t2;
  double w;
};

void panels_on(double a, double b, int order, int panels, std::vector<double>& xs,
               std::vector<double>& ws) {
  std::vector<double> n0, w0;
  gauss_legendre(order, n0, w0);
  xs.clear();
  ws.clear();
  const double dp = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * dp;
    for (int i = 0; i < order; ++i) {
      xs.push_back(lo + 0.5 * dp * (n0[static_cast<std::size_t>(i)] + 1.0));
      ws.push_back(0.5 * dp * w0[static_cast<std::size_t>(i)]);
    }
  }
}

std::vector<QuadNode> volume_nodes(const RegionSpec& r, double t) {
  std::vector<QuadNode> out;
  if (r.shape == RegionSpec::Shape::Box) {
    std::vector<double> x[3], w[3];
    for (int a = 0; a < 3; ++a)
      panels_on(r.box[static_cast<std::size_t>(a)][0], r.box[static_cast<std::size_t>(a)][1],
                r.order, r.panels, x[a], w[a]);
    for (std::size_t i = 0; i < x[0].size(); ++i)
      for (std::size_t j = 0; j < x[1].size(); ++j)
        for (std::size_t k = 0; k < x[2].size(); ++k) {
          QuadNode n;
          n.p = Point{t, {x[0][i], x[1][j], x[2][k]}};
          n.w = w[0][i] * w[1][j] * w[2][k];
          out.push_back(n);
        }
    return out;
  }
  std::vector<double> rho, wr, th, wt, ph, wp;
  panels_on(0.0, r.radius, r.order, r.panels, rho, wr);
  panels_on(0.0, kPi, r.order, r.panels, th, wt);
  panels_on(0.0, 2.0 * kPi, r.order, r.panels, ph, wp);
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = 0; j < th.size(); ++j)
      for (std::size_t k = 0; k < ph.size(); ++k) {
        const double st = std::sin(th[j]), ct = std::cos(th[j]);
        QuadNode n;
        n.p = Point{t,
                    {r.center(0) + rho[i] * st * std::cos(ph[k]),
                     r.center(1) + rho[i] * st * std::sin(ph[k]),
                     r.center(2) + rho[i] * ct}};
        n.w = wr[i] * wt[j] * wp[k] * rho[i] * rho[i] * st;
        out.push_back(n);
      }
  return out;
}

std::vector<SurfNode> surface_nodes(const RegionSpec& r, double t) {
  std::vector<SurfNode> out;
  if (r.shape == RegionSpec::Shape::Box) {
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      std::vector<double> xb, wb, xc, wc;
      panels_on(r.box[static_cast<std::size_t>(b)][0], r.box[static_cast<std::size_t>(b)][1],
                r.order, r.panels, xb, wb);
      panels_on(r.box[static_cast<std::size_t>(c)][0], r.box[static_cast<std::size_t>(c)][1],
                r.order, r.panels, xc, wc);
      for (int side = 0; side < 2; ++side) {
        const double fixed = r.box[static_cast<std::size_t>(a)][static_cast<std::size_t>(side)];
        for (std::size_t i = 0; i < xb.size(); ++i)
          for (std::size_t j = 0; j < xc.size(); ++j) {
            SurfNode n;
            Point p{t, {0, 0, 0}};
            p.x[static_cast<std::size_t>(a)] = fixed;
            p.x[static_cast<std::size_t>(b)] = xb[i];
            p.x[static_cast<std::size_t>(c)] = xc[j];
            n.p = p;
            n.t1 = Vec3::Unit(b);
            n.t2 = Vec3::Unit(c);
            n.w = wb[i] * wc[j];
            out.push_back(n);
          }
      }
    }
    return out;
  }
  std::vector<double> th, wt, ph, wp;
  panels_on(0.0, kPi, r.order, r.panels, th, wt);
  panels_on(0.0, 2.0 * kPi, r.order, r.panels, ph, wp);
  for (std::size_t j = 0; j < th.size(); ++j)
    for (std::size_t k = 0; k < ph.size(); ++k) {
      const double st = std::sin(th[j]), ct = std::cos(th[j]);
      const double sp = std::sin(ph[k]), cp = std::cos(ph[k]);
      SurfNode n;
      n.p = Point{t,
                  {r.center(0) + r.radius * st * cp, r.center(1) + r.radius * st * sp,
                   r.center(2) + r.radius * ct}};
      n.t1 = r.radius * Vec3(ct * cp, ct * sp, -st);        // d/dtheta
      n.t2 = r.radius * Vec3(-st * sp, st * cp, 0.0);       // d/dphi
      n.w = wt[j] * wp[k];
      out.push_back(n);
    }
  return out;
}

double ordered_sum(std::vector<double>& v) {
  // pairwise reduction, deterministic
  std::size_t n = v.size();
  while (n > 1) {
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < n / 2; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2 == 1) v[n / 2] = v[n - 1];
    n = half;
  }
  return n == 1 ? v[0] : 0.0;
}

struct RegionPass {
  double vol{0.0};
  double intS{0.0};
  double intSpf{0.0};
  double area{0.0};
  double supSCrit{0.0};
  double minLapse{1e300};
};

RegionPass region_pass(const MetricSpec& spec, const RegionSpec& region, double t,
                       const std::optional<FluidParams>& fluid, double tol,
                       double zeta, const StencilConfig& cfg) {
  const auto vn = volume_nodes(region, t);
  const auto sn = surface_nodes(region, t);
  const int nv = static_cast<int>(vn.size());
  std::vector<double> volW(static_cast<std::size_t>(nv)), sW(static_cast<std::size_t>(nv)),
      spfW(static_cast<std::size_t>(nv)), scv(static_cast<std::size_t>(nv)),
      lap(static_cast<std::size_t>(nv));
  parallel_for(nv, [&](int i) {
    const QuadNode& n = vn[static_cast<std::size_t>(i)];
    EntropyPoint e = entropy_point(spec, n.p, fluid, tol, zeta, cfg);
    volW[static_cast<std::size_t>(i)] = n.w * e.sqrtg;
    sW[static_cast<std::size_t>(i)] = n.w * e.S;
    spfW[static_cast<std::size_t>(i)] = n.w * e.Spf;
    scv[static_cast<std::size_t>(i)] = e.sCrit.value_or(0.0);
    lap[static_cast<std::size_t>(i)] = spec.N(n.p);
  });
  RegionPass out;
  out.vol = ordered_sum(volW);
  out.intS = ordered_sum(sW);
  out.intSpf = ordered_sum(spfW);
  for (double v : scv) out.supSCrit = std::max(out.supSCrit, v);
  for (double v : lap) out.minLapse = std::min(out.minLapse, v);

  const int ns = static_cast<int>(sn.size());
  std::vector<double> aW(static_cast<std::size_t>(ns));
  parallel_for(ns, [&](int i) {
    const SurfNode& n = sn[static_cast<std::size_t>(i)];
    const Mat3 g = spec.spatial(n.p);
    const double e11 = n.t1.dot(g * n.t1);
    const double e12 = n.t1.dot(g * n.t2);
    const double e22 = n.t2.dot(g * n.t2);
    aW[static_cast<std::size_t>(i)] = n.w * std::sqrt(std::max(0.0, e11 * e22 - e12 * e12));
  });
  out.area = ordered_sum(aW);
  return out;
}

} // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev estimate
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double s_crit(double k, double alpha) {
  const double one3a = std::max(0.0, 1.0 - 3.0 * alpha);
  const double q = 9.0 * k * k - 12.0 * k + 8.0; // positive for all real k
  return std::sqrt(one3a) * (std::sqrt(2.0) / 4.0 + 2.0 * k * std::sqrt(one3a / q));
}

EntropyPoint entropy_point(const MetricSpec& spec, const Point& p,
                           std::optional<FluidParams> fluid, double tol, double zeta,
                           const StencilConfig& cfg) {
  CurvatureBundle b = compute_curvature(spec, p, cfg);
  EntropyPoint e;
  e.sqrtg = std::sqrt(b.m.spatial().determinant());
  e.W2bar = std::max(0.0, norm_sq(b.weyl, b.m, MetricKind::Riemannian));
  e.R2bar = std::max(0.0, norm_sq(b.riemann, b.m, MetricKind::Riemannian));
  e.A2bar = std::max(0.0, norm_sq(b.aTensor, b.m, MetricKind::Riemannian));

  BlockNorms blocks = block_norms(b.weyl, b.m.lapse, b.m.spatialInv());
  const double sigma = blocks.TiTj >= blocks.Tijk ? 1.0 : -1.0;
  e.signedW = sigma * std::sqrt(e.W2bar);

  if (e.R2bar < tol) {
    if (e.W2bar > tol)
      throw DomainError("inconsistent norms: |W| > 0 with |R| = 0");
    e.s = 1.0; // curvature-free convention
  } else {
    e.s = std::min(1.0, std::sqrt(e.W2bar / e.R2bar));
  }
  if (e.A2bar >= tol) e.sBar = std::sqrt(e.W2bar / e.A2bar);

  if (!fluid) fluid = spec.fluid;
  if (fluid) e.sCrit = s_crit(fluid->k, fluid->alpha);

  e.S = zeta * e.s * e.sqrtg;
  e.Spf = e.S + zeta * e.sCrit.value_or(0.0) * e.sqrtg;
  return e;
}

double region_volume(const MetricSpec& spec, const RegionSpec& region, double t) {
  const auto vn = volume_nodes(region, t);
  std::vector<double> acc(vn.size());
  for (std::size_t i = 0; i < vn.size(); ++i)
    acc[i] = vn[i].w * std::sqrt(spec.spatial(vn[i].p).determinant());
  return ordered_sum(acc);
}

double region_area(const MetricSpec& spec, const RegionSpec& region, double t) {
  const auto sn = surface_nodes(region, t);
  std::vector<double> acc(sn.size());
  for (std::size_t i = 0; i < sn.size(); ++i) {
    const Mat3 g = spec.spatial(sn[i].p);
    const double e11 = sn[i].t1.dot(g * sn[i].t1);
    const double e12 = sn[i].t1.dot(g * sn[i].t2);
    const double e22 = sn[i].t2.dot(g * sn[i].t2);
    acc[i] = sn[i].w * std::sqrt(std::max(0.0, e11 * e22 - e12 * e12));
  }
  return ordered_sum(acc);
}

RegionEntropy region_entropy(const MetricSpec& spec, const RegionSpec& region,
                             double t, std::optional<FluidParams> fluid, double tol,
                             double zeta, const StencilConfig& cfg) {
  RegionSpec coarse = region;
  RegionSpec fine = region;
  fine.panels = region.panels * 2;
  RegionPass c = region_pass(spec, coarse, t, fluid, tol, zeta, cfg);
  RegionPass f = region_pass(spec, fine, t, fluid, tol, zeta, cfg);

  RegionEntropy out;
  out.vol = f.vol;
  out.area = f.area;
  out.S_U = f.area / f.vol * f.intS;
  out.Spf_U = f.area / f.vol * f.intSpf;
  out.supSCrit = f.supSCrit;
  out.bound = f.area * (1.0 + f.supSCrit);
  out.minLapse = f.minLapse;
  const double cS = c.area / c.vol * c.intS;
  const double cSpf = c.area / c.vol * c.intSpf;
  out.quadError = std::max(std::fabs(out.S_U - cS), std::fabs(out.Spf_U - cSpf));
  return out;
}

double area_vol_monotonicity(const MetricSpec& spec, const RegionSpec& region,
                             double t, const StencilConfig&) {
  Point centre{t, {0, 0, 0}};
  if (region.shape == RegionSpec::Shape::Box) {
    for (int a = 0; a < 3; ++a)
      centre.x[static_cast<std::size_t>(a)] =
          0.5 * (region.box[static_cast<std::size_t>(a)][0] +
                 region.box[static_cast<std::size_t>(a)][1]);
  } else {
    centre.x = {region.center(0), region.center(1), region.center(2)};
  }
  FieldFn ratio;
  ratio.domain = spec.domain;
  ratio.f = [&spec, &region](const Point& q) {
    return region_area(spec, region, q.t) / region_volume(spec, region, q.t);
  };
  return d1(ratio, centre, 0, StencilConfig::derived()) / spec.N(centre);
}

ExtremalReport classify_extremal(const MetricSpec& spec, const RegionSpec& region,
                                 double t, double tol, const StencilConfig& cfg) {
  std::array<std::array<double, 2>, 3> box;
  if (region.shape == RegionSpec::Shape::Box) {
    box = region.box;
  } else {
    const double half = region.radius / std::sqrt(3.0);
    for (int a = 0; a < 3; ++a) box[static_cast<std::size_t>(a)] = {region.center(a) - half, region.center(a) + half};
  }
  static const double frac[3] = {0.25, 0.5, 0.75};

  ExtremalReport r;
  for (double fa : frac)
    for (double fb : frac)
      for (double fc : frac) {
        Point p{t,
                {box[0][0] + fa * (box[0][1] - box[0][0]),
                 box[1][0] + fb * (box[1][1] - box[1][0]),
                 box[2][0] + fc * (box[2][1] - box[2][0])}};
        CurvatureBundle b = compute_curvature(spec, p, cfg);
        FrameData f = frame(spec, p, cfg);
        SpatialGeometry sp = spatial_geometry(spec, p, cfg);
        FrameDerivatives fd = frame_derivatives(spec, p, cfg);

        r.maxH = std::max(r.maxH, f.h.cwiseAbs().maxCoeff());
        r.maxRicci = std::max(r.maxRicci, b.ricci.maxAbs());
        const Mat3 staticRes = f.N * sp.ricci - fd.hessN;
        r.maxStaticRes = std::max(r.maxStaticRes, staticRes.cwiseAbs().maxCoeff());
        r.maxLaplN = std::max(r.maxLaplN, std::fabs(fd.laplN));
        r.maxWeylBar = std::max(
            r.maxWeylBar, std::max(0.0, norm_sq(b.weyl, b.m, MetricKind::Riemannian)));
        AlphaExpansion a = alpha_expansion(f);
        const double gap = a.alphaMax ? (1.0 / 3.0 - *a.alphaMax) : 1.0;
        r.maxAlphaGap = std::max(r.maxAlphaGap, gap);
      }

  if (r.maxH < tol && r.maxRicci < tol && r.maxStaticRes < tol && r.maxLaplN < tol)
    r.label = "MaximalStaticVacuumCandidate";
  else if (r.maxWeylBar < tol && r.maxAlphaGap < tol)
    r.label = "MinimalFLRWCandidate";
  else
    r.label = "Interior";
  return r;
}

} // namespace weyl
