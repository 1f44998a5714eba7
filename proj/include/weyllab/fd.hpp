#pragma once

#include <functional>

#include "weyllab/types.hpp"

namespace weyl {

// Scalar field of a spacetime point, with an optional domain guard and an
// optional exact first-derivative evaluator used as a self-check channel.
struct FieldFn {
  std::function<double(const Point&)> f;
  std::function<bool(const Point&)> domain;         // null = everywhere
  std::function<double(const Point&, int)> exactD1; // null = none

  double operator()(const Point& p) const { return f(p); }
  bool inDomain(const Point& p) const { return !domain || domain(p); }
};

struct StencilConfig {
  double step = 1e-3;  // base step, scaled by max(1, |coordinate|)
  int order = 4;       // 2 or 4
  int richardson = 2;  // extrapolation levels >= 1
  double step3 = 1e-2; // base step for third derivatives

  // Stencils applied to raw analytic fields.
  static StencilConfig base() { return {}; }
  // Coarser stencil for fields that are themselves FD-produced; fewer
  // extrapolation levels keep the noise amplification down.
  static StencilConfig derived() {
    StencilConfig c;
    c.step = 5e-3;
    c.richardson = 1;
    return c;
  }
};

double d1(const FieldFn& f, const Point& p, int axis,
          const StencilConfig& cfg = StencilConfig::base());
double d2(const FieldFn& f, const Point& p, int axisA, int axisB,
          const StencilConfig& cfg = StencilConfig::base());
double d3(const FieldFn& f, const Point& p, int axisA, int axisB, int axisC,
          const StencilConfig& cfg = StencilConfig::base());

// Directional time derivative through the unit normal, N^{-1} d/dt.
double dT(const FieldFn& f, const Point& p, double lapse,
          const StencilConfig& cfg = StencilConfig::derived());

} // namespace weyl
