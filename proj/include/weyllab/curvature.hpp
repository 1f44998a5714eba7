#pragma once

#include "weyllab/catalog.hpp"
#include "weyllab/tensor.hpp"

namespace weyl {

// Pointwise curvature of the foliated metric gamma = -N^2 dt^2 + g, all
// index-lowered with gamma unless stated otherwise.
struct CurvatureBundle {
  Point p;
  MetricPair m;
  Tensor4 christoffel{3};  // upper first slot
  Tensor4 riemann{4};
  Tensor4 ricci{2};
  double scalar{0.0};
  Tensor4 weyl{4};
  Tensor4 schouten{2};     // Ric - (scalar/6) gamma
  Tensor4 aTensor{4};      // half Kulkarni-Nomizu product of Schouten and gamma
  Tensor4 stress{2};       // Einstein tensor, the field equation source
};

CurvatureBundle compute_curvature(const MetricSpec& spec, const Point& p,
                                  const StencilConfig& cfg = StencilConfig::base());

// (A o B)_{abcd} = A_ac B_bd + A_bd B_ac - A_ad B_bc - A_bc B_ad
Tensor4 kulkarni_nomizu(const Tensor4& A, const Tensor4& B);

// C_{abc} = D_c S_{ab} - D_b S_{ac} of the Schouten tensor, assembled by
// differentiating the pointwise Schouten field.
Tensor4 cotton(const MetricSpec& spec, const Point& p,
               const StencilConfig& cfg = StencilConfig::base());

// Orthonormal fluid read-out of the Einstein tensor: energy density M, the
// isotropic pressure P, and the residuals that measure how far the source is
// from a comoving perfect fluid.
struct FluidReadout {
  double M{0.0};
  double P{0.0};
  double momentum{0.0};    // |T_{Ti}|_g
  double anisotropy{0.0};  // max |T_ij - P g_ij|
};

FluidReadout extract_fluid(const CurvatureBundle& b);

// Christoffel symbols assembled from the foliation data (lapse derivatives
// and the expansion tensor) instead of the generic metric stencils. Used to
// cross-check the adapted-coordinate formulas.
Tensor4 foliated_christoffel_reference(const MetricSpec& spec, const Point& p,
                                       const StencilConfig& cfg = StencilConfig::base());

} // namespace weyl
