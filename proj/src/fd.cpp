#include "weyllab/fd.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace weyl {

namespace {

double step_for(const Point& p, int axis, double base) {
  return base * std::max(1.0, std::fabs(p.coord(axis)));
}

double eval_checked(const FieldFn& f, const Point& p) {
  double v = f(p);
  if (!std::isfinite(v)) throw DomainError("field evaluated to a non-finite value");
  return v;
}

// Richardson table for central stencils of base order p (even error series).
double richardson(const std::function<double(double)>& D, double h, int order,
                  int levels) {
  std::vector<double> row(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i)
    row[static_cast<std::size_t>(i)] = D(h / std::pow(2.0, i));
  for (int j = 1; j < levels; ++j) {
    const double c = std::pow(2.0, order + 2 * (j - 1));
    for (int i = levels - 1; i >= j; --i)
      row[static_cast<std::size_t>(i)] =
          (c * row[static_cast<std::size_t>(i)] - row[static_cast<std::size_t>(i - 1)]) /
          (c - 1.0);
  }
  return row[static_cast<std::size_t>(levels - 1)];
}

// All stencil points across every extrapolation level must pass the guard;
// shrink the base step a few times before giving up.
double admissible_step(const FieldFn& f, const Point& p,
                       const std::vector<int>& axes, double h, int reach) {
  if (!f.domain) return h;
  for (int tries = 0; tries < 4; ++tries) {
    bool ok = true;
    for (int axis : axes) {
      for (int s = -reach; s <= reach && ok; ++s)
        if (!f.domain(p.shifted(axis, s * h))) ok = false;
      if (!ok) break;
    }
    if (ok) return h;
    h *= 0.5;
  }
  throw DomainError("stencil exits the field domain");
}

double d1_raw(const FieldFn& f, const Point& p, int axis, double h, int order) {
  if (order == 2)
    return (eval_checked(f, p.shifted(axis, h)) - eval_checked(f, p.shifted(axis, -h))) /
           (2.0 * h);
  return (eval_checked(f, p.shifted(axis, -2 * h)) -
          8.0 * eval_checked(f, p.shifted(axis, -h)) +
          8.0 * eval_checked(f, p.shifted(axis, h)) -
          eval_checked(f, p.shifted(axis, 2 * h))) /
         (12.0 * h);
}

double d2_same_raw(const FieldFn& f, const Point& p, int axis, double h, int order) {
  const double f0 = eval_checked(f, p);
  if (order == 2)
    return (eval_checked(f, p.shifted(axis, h)) - 2.0 * f0 +
            eval_checked(f, p.shifted(axis, -h))) /
           (h * h);
  return (-eval_checked(f, p.shifted(axis, -2 * h)) +
          16.0 * eval_checked(f, p.shifted(axis, -h)) - 30.0 * f0 +
          16.0 * eval_checked(f, p.shifted(axis, h)) -
          eval_checked(f, p.shifted(axis, 2 * h))) /
         (12.0 * h * h);
}

double d2_mixed_raw(const FieldFn& f, const Point& p, int axisA, int axisB,
                    double ha, double hb, int order) {
  struct Tap {
    int s;
    double c;
  };
  static const Tap taps2[] = {{-1, -0.5}, {1, 0.5}};
  static const Tap taps4[] = {{-2, 1.0 / 12.0}, {-1, -8.0 / 12.0}, {1, 8.0 / 12.0}, {2, -1.0 / 12.0}};
  const Tap* taps = order == 2 ? taps2 : taps4;
  const int n = order == 2 ? 2 : 4;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Point q = p.shifted(axisA, taps[i].s * ha).shifted(axisB, taps[j].s * hb);
      acc += taps[i].c * taps[j].c * eval_checked(f, q);
    }
  return acc / (ha * hb);
}

} // namespace

double d1(const FieldFn& f, const Point& p, int axis, const StencilConfig& cfg) {
  const int reach = (cfg.order == 2 ? 1 : 2);
  double h = admissible_step(f, p, {axis}, step_for(p, axis, cfg.step), reach);
  return richardson([&](double hh) { return d1_raw(f, p, axis, hh, cfg.order); }, h,
                    cfg.order, cfg.richardson);
}

double d2(const FieldFn& f, const Point& p, int axisA, int axisB,
          const StencilConfig& cfg) {
  if (axisA > axisB) std::swap(axisA, axisB); // mixed partials symmetric by construction
  const int reach = (cfg.order == 2 ? 1 : 2);
  if (axisA == axisB) {
    double h = admissible_step(f, p, {axisA}, step_for(p, axisA, cfg.step), reach);
    return richardson([&](double hh) { return d2_same_raw(f, p, axisA, hh, cfg.order); },
                      h, cfg.order, cfg.richardson);
  }
  double ha = admissible_step(f, p, {axisA}, step_for(p, axisA, cfg.step), reach);
  double hb = admissible_step(f, p, {axisB}, step_for(p, axisB, cfg.step), reach);
  const double h = std::min(ha, hb);
  return richardson(
      [&](double hh) { return d2_mixed_raw(f, p, axisA, axisB, hh, hh, cfg.order); }, h,
      cfg.order, cfg.richardson);
}

double d3(const FieldFn& f, const Point& p, int axisA, int axisB, int axisC,
          const StencilConfig& cfg) {
  StencilConfig inner = cfg;
  inner.step = cfg.step3;
  inner.richardson = std::max(1, cfg.richardson - 1);
  FieldFn second{[&](const Point& q) { return d2(f, q, axisA, axisB, inner); },
                 f.domain, nullptr};
  StencilConfig outer = inner;
  return d1(second, p, axisC, outer);
}

double dT(const FieldFn& f, const Point& p, double lapse, const StencilConfig& cfg) {
  return d1(f, p, 0, cfg) / lapse;
}

} // namespace weyl
