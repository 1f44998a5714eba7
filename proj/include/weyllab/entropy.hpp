#pragma once

#include "weyllab/foliation.hpp"

namespace weyl {

// Critical entropy density sqrt(1-3a)(sqrt(2)/4 + 2k sqrt((1-3a)/(9k^2-12k+8))).
double s_crit(double k, double alpha);

struct EntropyPoint {
  double s{1.0};    // |W|_gbar / |R|_gbar, or 1 on curvature-free points
  double S{0.0};    // s sqrt(g) (times the zeta constant)
  double Spf{0.0};  // S + sCrit sqrt(g); equals S when no fluid data
  double sqrtg{1.0};
  double W2bar{0.0};
  double R2bar{0.0};
  double A2bar{0.0};
  std::optional<double> sBar; // |W|_gbar/|A|_gbar; empty when |A| = 0 with W != 0
  std::optional<double> sCrit;
  double signedW{0.0}; // sigma |W|_gbar: + on electric, - on magnetic points
};

EntropyPoint entropy_point(const MetricSpec& spec, const Point& p,
                           std::optional<FluidParams> fluid = std::nullopt,
                           double tol = 1e-10, double zeta = 1.0,
                           const StencilConfig& cfg = StencilConfig::base());

// Compact spatial region in a t = const slice.
struct RegionSpec {
  enum class Shape { Box, Ball };
  Shape shape{Shape::Box};
  std::array<std::array<double, 2>, 3> box{{{0, 1}, {0, 1}, {0, 1}}};
  Vec3 center{0, 0, 0};
  double radius{1.0};
  int order{6};  // Gauss-Legendre points per axis per panel
  int panels{1}; // per-axis subdivision
};

struct RegionEntropy {
  double S_U{0.0};
  double Spf_U{0.0};
  double area{0.0};
  double vol{0.0};
  double bound{0.0}; // area (1 + sup sCrit)
  double quadError{0.0};
  double supSCrit{0.0};
  double minLapse{0.0};
};

RegionEntropy region_entropy(const MetricSpec& spec, const RegionSpec& region,
                             double t,
                             std::optional<FluidParams> fluid = std::nullopt,
                             double tol = 1e-10, double zeta = 1.0,
                             const StencilConfig& cfg = StencilConfig::base());

// D_T of Area(Sigma)/Vol_g(U) through N^{-1} dt, N taken at the region centre.
double area_vol_monotonicity(const MetricSpec& spec, const RegionSpec& region,
                             double t, const StencilConfig& cfg = StencilConfig::base());

struct ExtremalReport {
  std::string label; // MaximalStaticVacuumCandidate, MinimalFLRWCandidate, Interior
  double maxH{0.0};          // max |h| over samples
  double maxRicci{0.0};      // 4D Ricci
  double maxStaticRes{0.0};  // max |N R_ij - hess_ij N|
  double maxLaplN{0.0};
  double maxWeylBar{0.0};    // max |W|^2_gbar
  double maxAlphaGap{0.0};   // max over samples of (1/3 - alphaMax)
};

ExtremalReport classify_extremal(const MetricSpec& spec, const RegionSpec& region,
                                 double t, double tol = 1e-5,
                                 const StencilConfig& cfg = StencilConfig::base());

// Quadrature primitives, exposed for tests.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);
double region_volume(const MetricSpec& spec, const RegionSpec& region, double t);
double region_area(const MetricSpec& spec, const RegionSpec& region, double t);

} // namespace weyl
