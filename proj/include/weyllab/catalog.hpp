#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyllab/fd.hpp"
#include "weyllab/tensor.hpp"

namespace weyl {

// Fluid parameters for the entropy machinery: equation of state P = (k-1)M,
// expansion parameter alpha, and their evolution coefficients u' defined by
// D_T u = u' H (u' = 0 wherever H = 0).
struct FluidParams {
  double k = 1.0;
  double alpha = 0.0;
  double kPrime = 0.0;
  double alphaPrime = 0.0;
};

struct DeclaredClasses {
  bool vacuum = false;
  bool pureElectric = false;
  bool conformallyFlat = false;
  bool staticMetric = false;
  bool flat = false;
  bool generic = false; // identity-exercise metric, no declared class
};

// Analytic foliated spacetime: lapse N(t,x), spatial metric g_ij(t,x), an
// optional closed-form fluid channel and per-quantity reference values.
struct MetricSpec {
  std::string name;
  FieldFn lapse;
  std::array<FieldFn, 6> g; // components 11,12,13,22,23,33
  std::function<bool(const Point&)> domain;

  std::function<double(const Point&)> fluidM; // null when no fluid metadata
  std::function<double(const Point&)> fluidP;
  std::optional<FluidParams> fluid;

  DeclaredClasses classes;
  std::map<std::string, double> params;

  // coordinate box [t, x1, x2, x3] used for seeded verification samples
  std::array<std::array<double, 2>, 4> sampleBox{};

  double N(const Point& p) const { return lapse(p); }
  Mat3 spatial(const Point& p) const;
  const FieldFn& gComp(int i, int j) const; // i,j in 1..3
  bool inDomain(const Point& p) const { return !domain || domain(p); }
};

std::vector<std::string> catalog_names();
MetricSpec make_metric(const std::string& name,
                       const nlohmann::json& params = nlohmann::json::object());
std::vector<MetricSpec> catalog_list();
nlohmann::json catalog_json();

// Custom metric from a JSON description with expression-valued components:
// {"name":..., "lapse":"...", "g":{"11":"...","22":"...","33":"...",...},
//  "domain":{"t":[a,b],"x1":[a,b],...}}
MetricSpec custom_metric(const nlohmann::json& desc);

// Closed-form oracle channel; nullopt when the quantity is not tabulated for
// the metric. Known quantities include "H", "M", "P", "k", "A2",
// "kretschmann", "s".
std::optional<double> exact_reference(const MetricSpec& spec,
                                      const std::string& quantity, const Point& p);

// Deterministic sample points inside the spec's sample box.
std::vector<Point> seeded_points(const MetricSpec& spec, int n, unsigned seed);

} // namespace weyl
