#pragma once

#include <optional>

#include "weyllab/curvature.hpp"

namespace weyl {

// Pointwise foliation snapshot of gamma = -N^2 dt^2 + g.
struct FrameData {
  Point p;
  double N{1.0};
  Mat3 g;
  Mat3 gInv;
  double sqrtg{1.0};
  Mat3 h;          // h_ij = -(1/2N) dt g_ij
  double H{0.0};   // g^{ij} h_ij, nonpositive in expanding regions
  Mat3 hTraceless; // h - (H/3) g
};

FrameData frame(const MetricSpec& spec, const Point& p,
                const StencilConfig& cfg = StencilConfig::base());

// Residual of the determinant evolution D_T sqrt(g) = -H sqrt(g).
double det_evolution_residual(const MetricSpec& spec, const Point& p,
                              const StencilConfig& cfg = StencilConfig::base());

// Intrinsic geometry of the slice t = const.
struct SpatialGeometry {
  double chr[3][3][3];       // Christoffels of g, upper first index
  double riemann[3][3][3][3]; // all-lower
  Mat3 ricci;
  double scalar{0.0};
};

SpatialGeometry spatial_geometry(const MetricSpec& spec, const Point& p,
                                 const StencilConfig& cfg = StencilConfig::base());

// Spatial covariant derivative of the expansion tensor, covdh[l][i][j] =
// nabla_l h_ij, and covariant lapse Hessian nabla_i nabla_j N.
struct FrameDerivatives {
  double covdh[3][3][3];
  Mat3 dth;       // coordinate t-derivative of h_ij
  Mat3 hessN;
  double laplN{0.0};
  Vec3 dN;        // spatial gradient of N
  Vec3 gradH;     // coordinate gradient of the mean curvature
};

FrameDerivatives frame_derivatives(const MetricSpec& spec, const Point& p,
                                   const StencilConfig& cfg = StencilConfig::base());

// Max-abs residuals of the three curvature splitting relations of the
// foliation (spatial block, one time leg, two time legs).
struct GaussCodazzi {
  double gauss{0.0};
  double codazzi{0.0};
  double ricciEq{0.0};
};

GaussCodazzi gauss_codazzi_residuals(const MetricSpec& spec, const Point& p,
                                     const StencilConfig& cfg = StencilConfig::base());

struct Constraints {
  double hamiltonian{0.0};
  Vec3 momentum;
};

Constraints constraint_residuals(const MetricSpec& spec, const Point& p,
                                 const StencilConfig& cfg = StencilConfig::base());

// Electric and magnetic parts of the Weyl tensor for the foliation observer.
struct WeylEB {
  Mat3 E;
  Mat3 B;
  BlockNorms blocks;
};

WeylEB weyl_eb(const CurvatureBundle& b);

struct Classification {
  std::string primary; // Flat, ConformallyFlat, PureElectric, PureMagnetic, Vacuum, Mixed
  bool flat{false};
  bool conformallyFlat{false};
  bool vacuum{false};
  bool pureElectric{false};
  bool pureMagnetic{false};
  bool staticSlice{false};
  BlockNorms weylBlocks;
  double weylBarNormSq{0.0};
  double riemannBarNormSq{0.0};
  double ricciMax{0.0};
};

Classification classify(const MetricSpec& spec, const Point& p, double tol = 1e-8,
                        const StencilConfig& cfg = StencilConfig::base());

// h_ij <= alpha H g_ij <= 0 test via the generalized eigenvalues of (h, g).
struct AlphaExpansion {
  bool isExpanding{false};
  std::optional<double> alphaMax;
  std::array<double, 3> mu{0.0, 0.0, 0.0};
  double H{0.0};
};

AlphaExpansion alpha_expansion(const FrameData& f, double tol = 1e-10);

nlohmann::json classification_json(const MetricSpec& spec, const Point& p,
                                   double tol = 1e-8);

} // namespace weyl
