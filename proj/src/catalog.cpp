#include "weyllab/catalog.hpp"

#include <cmath>
#include <random>

#include "weyllab/expr.hpp"

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

int symIndex(int i, int j) {
  // (1,1)=0 (1,2)=1 (1,3)=2 (2,2)=3 (2,3)=4 (3,3)=5
  if (i > j) std::swap(i, j);
  static const int lut[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
  return lut[i - 1][j - 1];
}

FieldFn constant(double v) {
  FieldFn f;
  f.f = [v](const Point&) { return v; };
  return f;
}

FieldFn fn(std::function<double(const Point&)> e) {
  FieldFn f;
  f.f = std::move(e);
  return f;
}

double jget(const nlohmann::json& j, const std::string& key, double dflt) {
  return j.contains(key) ? j.at(key).get<double>() : dflt;
}

void set_diag(MetricSpec& s, FieldFn g11, FieldFn g22, FieldFn g33) {
  s.g[0] = std::move(g11);
  s.g[3] = std::move(g22);
  s.g[5] = std::move(g33);
  s.g[1] = s.g[2] = s.g[4] = constant(0.0);
}

MetricSpec minkowski() {
  MetricSpec s;
  s.name = "minkowski";
  s.lapse = constant(1.0);
  set_diag(s, constant(1.0), constant(1.0), constant(1.0));
  s.classes.flat = s.classes.vacuum = s.classes.conformallyFlat = true;
  s.classes.staticMetric = true;
  s.sampleBox = {{{0.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

MetricSpec schwarzschild(const nlohmann::json& params) {
  const double m = jget(params, "m", 1.0);
  MetricSpec s;
  s.name = "schwarzschild";
  s.params["m"] = m;
  auto f = [m](const Point& p) { return 1.0 - 2.0 * m / p.x[0]; };
  s.lapse = fn([f](const Point& p) { return std::sqrt(f(p)); });
  s.g[0] = fn([f](const Point& p) { return 1.0 / f(p); });
  s.g[3] = fn([](const Point& p) { return p.x[0] * p.x[0]; });
  s.g[5] = fn([](const Point& p) {
    const double st = std::sin(p.x[1]);
    return p.x[0] * p.x[0] * st * st;
  });
  s.g[1] = s.g[2] = s.g[4] = constant(0.0);
  // keep stencils off the horizon and the axis
  s.domain = [m](const Point& p) {
    return p.x[0] > 2.0 * m * 1.02 && p.x[1] > 0.35 && p.x[1] < kPi - 0.35;
  };
  s.classes.vacuum = true;
  s.classes.staticMetric = true;
  s.classes.pureElectric = true;
  s.sampleBox = {{{0.0, 1.0}, {3.0, 6.0}, {0.7, 2.4}, {0.3, 5.9}}};
  return s;
}

MetricSpec eds() {
  MetricSpec s;
  s.name = "eds";
  s.lapse = constant(1.0);
  auto a2 = [](const Point& p) { return std::pow(p.t, 4.0 / 3.0); };
  set_diag(s, fn(a2), fn(a2), fn(a2));
  s.domain = [](const Point& p) { return p.t > 0.2; };
  s.fluidM = [](const Point& p) { return 4.0 / (3.0 * p.t * p.t); };
  s.fluidP = [](const Point&) { return 0.0; };
  s.fluid = FluidParams{1.0, 1.0 / 3.0, 0.0, 0.0};
  s.classes.conformallyFlat = true;
  s.sampleBox = {{{0.6, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

MetricSpec desitter(const nlohmann::json& params) {
  const double lam = jget(params, "lambda", 1.0);
  MetricSpec s;
  s.name = "desitter";
  s.params["lambda"] = lam;
  s.lapse = constant(1.0);
  auto a2 = [lam](const Point& p) { return std::exp(2.0 * lam * p.t); };
  set_diag(s, fn(a2), fn(a2), fn(a2));
  s.fluidM = [lam](const Point&) { return 3.0 * lam * lam; };
  s.fluidP = [lam](const Point&) { return -3.0 * lam * lam; };
  s.fluid = FluidParams{0.0, 1.0 / 3.0, 0.0, 0.0};
  s.classes.conformallyFlat = true;
  s.sampleBox = {{{0.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

MetricSpec kasner(const nlohmann::json& params) {
  const double p1 = jget(params, "p1", 2.0 / 3.0);
  const double p2 = jget(params, "p2", 2.0 / 3.0);
  const double p3 = jget(params, "p3", -1.0 / 3.0);
  MetricSpec s;
  s.name = "kasner";
  s.params["p1"] = p1;
  s.params["p2"] = p2;
  s.params["p3"] = p3;
  s.lapse = constant(1.0);
  auto comp = [](double p) {
    return fn([p](const Point& q) { return std::pow(q.t, 2.0 * p); });
  };
  set_diag(s, comp(p1), comp(p2), comp(p3));
  s.domain = [](const Point& p) { return p.t > 0.2; };
  s.classes.vacuum = true;
  s.classes.pureElectric = true;
  s.sampleBox = {{{0.5, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

// Marginally bound Lemaitre-Tolman metric with areal radius
// R(t,r) = (r^{3/2} + c t)^{2/3}; coordinates (r, theta, phi).
MetricSpec ltb(const nlohmann::json& params) {
  const double c = jget(params, "c", 1.0);
  MetricSpec s;
  s.name = "ltb";
  s.params["c"] = c;
  s.lapse = constant(1.0);
  auto X = [c](const Point& p) { return std::pow(p.x[0], 1.5) + c * p.t; };
  auto R = [X](const Point& p) { return std::pow(X(p), 2.0 / 3.0); };
  auto Rp = [X](const Point& p) {
    return std::sqrt(p.x[0]) * std::pow(X(p), -1.0 / 3.0);
  };
  s.g[0] = fn([Rp](const Point& p) {
    const double v = Rp(p);
    return v * v;
  });
  s.g[3] = fn([R](const Point& p) {
    const double v = R(p);
    return v * v;
  });
  s.g[5] = fn([R](const Point& p) {
    const double v = R(p);
    const double st = std::sin(p.x[1]);
    return v * v * st * st;
  });
  s.g[1] = s.g[2] = s.g[4] = constant(0.0);
  s.domain = [X](const Point& p) {
    return p.x[0] > 0.5 && X(p) > 0.2 && p.x[1] > 0.35 && p.x[1] < kPi - 0.35;
  };
  s.fluid = FluidParams{1.0, 0.0, 0.0, 0.0}; // dust labelling for the scans
  s.classes.pureElectric = true;
  s.classes.vacuum = true; // constant mass function: vacuum in Lemaitre form
  s.sampleBox = {{{0.3, 1.5}, {0.8, 2.0}, {0.7, 2.4}, {0.3, 5.9}}};
  return s;
}

// Marginally bound Lemaitre-Tolman dust with mass function
// M(r) = m0 r^3 (1 + e r^2): R = (r^{3/2} + (3/2) sqrt(2 M(r)) t)^{2/3}.
MetricSpec ltb_dust(const nlohmann::json& params) {
  const double m0 = jget(params, "m0", 0.05);
  const double e = jget(params, "e", 0.3);
  MetricSpec s;
  s.name = "ltb-dust";
  s.params["m0"] = m0;
  s.params["e"] = e;
  s.lapse = constant(1.0);
  auto M = [m0, e](double r) { return m0 * r * r * r * (1.0 + e * r * r); };
  auto Mp = [m0, e](double r) { return m0 * (3.0 * r * r + 5.0 * e * r * r * r * r); };
  auto X = [M](const Point& p) {
    const double r = p.x[0];
    return std::pow(r, 1.5) + 1.5 * std::sqrt(2.0 * M(r)) * p.t;
  };
  auto Xp = [M, Mp](const Point& p) {
    const double r = p.x[0];
    return 1.5 * std::sqrt(r) + 1.5 * Mp(r) / std::sqrt(2.0 * M(r)) * p.t;
  };
  auto R = [X](const Point& p) { return std::pow(X(p), 2.0 / 3.0); };
  auto Rp = [X, Xp](const Point& p) {
    return (2.0 / 3.0) * std::pow(X(p), -1.0 / 3.0) * Xp(p);
  };
  s.g[0] = fn([Rp](const Point& p) {
    const double v = Rp(p);
    return v * v;
  });
  s.g[3] = fn([R](const Point& p) {
    const double v = R(p);
    return v * v;
  });
  s.g[5] = fn([R](const Point& p) {
    const double v = R(p);
    const double st = std::sin(p.x[1]);
    return v * v * st * st;
  });
  s.g[1] = s.g[2] = s.g[4] = constant(0.0);
  s.domain = [X, Xp](const Point& p) {
    return p.x[0] > 0.5 && p.x[0] < 2.5 && X(p) > 0.2 && Xp(p) > 0.2 &&
           p.x[1] > 0.35 && p.x[1] < kPi - 0.35;
  };
  s.fluidM = [M, Mp, R, Rp](const Point& p) {
    const double r = p.x[0];
    const double Rv = R(p);
    return 2.0 * Mp(r) / (Rv * Rv * Rp(p));
  };
  s.fluidP = [](const Point&) { return 0.0; };
  s.fluid = FluidParams{1.0, 0.0, 0.0, 0.0};
  s.classes.pureElectric = true;
  s.sampleBox = {{{0.2, 1.2}, {0.8, 2.0}, {0.7, 2.4}, {0.3, 5.9}}};
  return s;
}

// Conformal class g = e^{2 sigma(t,x)} delta; the default sigma = t gives
// flat-slicing de Sitter.
MetricSpec conformal(const nlohmann::json& params) {
  std::string sigmaExpr = params.contains("sigma") ? params.at("sigma").get<std::string>() : "t";
  MetricSpec s;
  s.name = "conformal";
  FieldFn sigma = compile_expression(sigmaExpr);
  auto a2 = [sigma](const Point& p) { return std::exp(2.0 * sigma(p)); };
  s.lapse = constant(1.0);
  set_diag(s, fn(a2), fn(a2), fn(a2));
  s.domain = [](const Point& p) { return p.t > -1.0; };
  s.classes.pureElectric = true;
  s.sampleBox = {{{0.2, 1.2}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

// Inhomogeneous metric with no special structure, used to exercise the
// curvature identities away from symmetric situations.
MetricSpec wavy() {
  MetricSpec s;
  s.name = "wavy";
  s.lapse = fn([](const Point& p) {
    return 1.0 + 0.1 * p.t * p.t + 0.05 * std::sin(p.x[0]);
  });
  s.g[0] = fn([](const Point& p) { return 1.0 + 0.1 * std::sin(p.x[0] + p.t); });
  s.g[3] = fn([](const Point& p) { return 1.0 + 0.1 * std::cos(p.x[1]) * std::exp(0.1 * p.t); });
  s.g[5] = fn([](const Point& p) { return 1.0 + 0.1 * std::sin(p.x[2]) * std::sin(p.t); });
  s.g[1] = fn([](const Point& p) { return 0.04 * std::cos(p.x[0]) * std::cos(p.t); });
  s.g[2] = constant(0.0);
  s.g[4] = fn([](const Point& p) { return 0.03 * std::sin(p.x[1] + p.x[2]); });
  s.classes.generic = true;
  s.sampleBox = {{{0.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return s;
}

} // namespace

Mat3 MetricSpec::spatial(const Point& p) const {
  Mat3 m;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      const double v = g[static_cast<std::size_t>(symIndex(i, j))](p);
      m(i - 1, j - 1) = v;
      m(j - 1, i - 1) = v;
    }
  return m;
}

const FieldFn& MetricSpec::gComp(int i, int j) const {
  return g[static_cast<std::size_t>(symIndex(i, j))];
}

std::vector<std::string> catalog_names() {
  return {"minkowski", "schwarzschild", "eds",      "desitter",
          "kasner",    "ltb",           "ltb-dust", "conformal", "wavy"};
}

MetricSpec make_metric(const std::string& name, const nlohmann::json& params) {
  MetricSpec s;
  if (name == "minkowski")
    s = minkowski();
  else if (name == "schwarzschild")
    s = schwarzschild(params);
  else if (name == "eds")
    s = eds();
  else if (name == "desitter")
    s = desitter(params);
  else if (name == "kasner")
    s = kasner(params);
  else if (name == "ltb")
    s = ltb(params);
  else if (name == "ltb-dust")
    s = ltb_dust(params);
  else if (name == "conformal")
    s = conformal(params);
  else if (name == "wavy")
    s = wavy();
  else
    throw std::invalid_argument("unknown catalog metric '" + name + "'");
  // domain guard also protects the component evaluators
  for (auto& comp : s.g) comp.domain = s.domain;
  s.lapse.domain = s.domain;
  return s;
}

std::vector<MetricSpec> catalog_list() {
  std::vector<MetricSpec> out;
  for (const auto& n : catalog_names()) out.push_back(make_metric(n));
  return out;
}

nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& spec : catalog_list()) {
    nlohmann::json j;
    j["name"] = spec.name;
    j["params"] = spec.params;
    nlohmann::json cls = nlohmann::json::array();
    if (spec.classes.flat) cls.push_back("flat");
    if (spec.classes.vacuum) cls.push_back("vacuum");
    if (spec.classes.conformallyFlat) cls.push_back("conformally-flat");
    if (spec.classes.staticMetric) cls.push_back("static");
    if (spec.classes.pureElectric) cls.push_back("pure-electric");
    if (spec.classes.generic) cls.push_back("generic");
    j["classes"] = cls;
    if (spec.fluid) {
      j["fluid"] = {{"k", spec.fluid->k},
                    {"alpha", spec.fluid->alpha},
                    {"kprime", spec.fluid->kPrime},
                    {"alphaprime", spec.fluid->alphaPrime}};
    }
    j["sample_box"] = {{spec.sampleBox[0][0], spec.sampleBox[0][1]},
                       {spec.sampleBox[1][0], spec.sampleBox[1][1]},
                       {spec.sampleBox[2][0], spec.sampleBox[2][1]},
                       {spec.sampleBox[3][0], spec.sampleBox[3][1]}};
    out.push_back(j);
  }
  return out;
}

MetricSpec custom_metric(const nlohmann::json& desc) {
  MetricSpec s;
  s.name = desc.contains("name") ? desc.at("name").get<std::string>() : "custom";
  s.lapse = compile_expression(desc.at("lapse").get<std::string>());
  const auto& gj = desc.at("g");
  static const char* keys[6] = {"11", "12", "13", "22", "23", "33"};
  for (int i = 0; i < 6; ++i) {
    if (gj.contains(keys[i]))
      s.g[static_cast<std::size_t>(i)] =
          compile_expression(gj.at(keys[i]).get<std::string>());
    else
      s.g[static_cast<std::size_t>(i)] = constant(0.0);
  }
  std::array<std::array<double, 2>, 4> box{
      {{-1e300, 1e300}, {-1e300, 1e300}, {-1e300, 1e300}, {-1e300, 1e300}}};
  if (desc.contains("domain")) {
    const auto& dj = desc.at("domain");
    static const char* axes[4] = {"t", "x1", "x2", "x3"};
    for (int a = 0; a < 4; ++a)
      if (dj.contains(axes[a])) {
        box[static_cast<std::size_t>(a)][0] = dj.at(axes[a]).at(0).get<double>();
        box[static_cast<std::size_t>(a)][1] = dj.at(axes[a]).at(1).get<double>();
      }
    s.domain = [box](const Point& p) {
      for (int a = 0; a < 4; ++a) {
        const double v = p.coord(a);
        if (v < box[static_cast<std::size_t>(a)][0] ||
            v > box[static_cast<std::size_t>(a)][1])
          return false;
      }
      return true;
    };
  }
  s.sampleBox = box;
  if (desc.contains("fluid")) {
    const auto& fj = desc.at("fluid");
    FluidParams fp;
    fp.k = jget(fj, "k", 1.0);
    fp.alpha = jget(fj, "alpha", 0.0);
    fp.kPrime = jget(fj, "kprime", 0.0);
    fp.alphaPrime = jget(fj, "alphaprime", 0.0);
    s.fluid = fp;
  }
  s.classes.generic = true;
  for (auto& comp : s.g) comp.domain = s.domain;
  s.lapse.domain = s.domain;
  return s;
}

std::optional<double> exact_reference(const MetricSpec& spec,
                                      const std::string& q, const Point& p) {
  const auto param = [&spec](const char* k, double dflt) {
    auto it = spec.params.find(k);
    return it == spec.params.end() ? dflt : it->second;
  };
  if (spec.name == "minkowski") {
    if (q == "s") return 1.0;
    return 0.0; // every curvature quantity vanishes
  }
  if (spec.name == "schwarzschild") {
    const double m = param("m", 1.0);
    const double r = p.x[0];
    if (q == "kretschmann") return 48.0 * m * m / std::pow(r, 6.0);
    if (q == "H") return 0.0;
    if (q == "M" || q == "P") return 0.0;
    if (q == "s") return 1.0;
    if (q == "N") return std::sqrt(1.0 - 2.0 * m / r);
    return std::nullopt;
  }
  if (spec.name == "eds") {
    const double M = 4.0 / (3.0 * p.t * p.t);
    if (q == "H") return -2.0 / p.t;
    if (q == "M") return M;
    if (q == "P") return 0.0;
    if (q == "k") return 1.0;
    if (q == "A2") return (5.0 / 3.0) * M * M;
    if (q == "s" || q == "W2bar") return 0.0;
    return std::nullopt;
  }
  if (spec.name == "desitter") {
    const double lam = param("lambda", 1.0);
    if (q == "H") return -3.0 * lam;
    if (q == "M") return 3.0 * lam * lam;
    if (q == "P") return -3.0 * lam * lam;
    if (q == "k") return 0.0;
    if (q == "s" || q == "W2bar") return 0.0;
    return std::nullopt;
  }
  if (spec.name == "kasner") {
    const double sum = param("p1", 2.0 / 3.0) + param("p2", 2.0 / 3.0) +
                       param("p3", -1.0 / 3.0);
    if (q == "H") return -sum / p.t;
    if (q == "M" || q == "P") return 0.0;
    if (q == "s") return 1.0;
    return std::nullopt;
  }
  if (spec.name == "ltb") {
    const double c = param("c", 1.0);
    const double X = std::pow(p.x[0], 1.5) + c * p.t;
    if (q == "H") return -c / X;
    if (q == "M" || q == "P") return 0.0;
    if (q == "s") return 1.0;
    if (q == "kretschmann") {
      const double meff = 2.0 * c * c / 9.0;
      const double R = std::pow(X, 2.0 / 3.0);
      return 48.0 * meff * meff / std::pow(R, 6.0);
    }
    return std::nullopt;
  }
  if (spec.name == "ltb-dust") {
    if (q == "P") return 0.0;
    if (q == "k") return 1.0;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Point> seeded_points(const MetricSpec& spec, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts;
  int guard = 0;
  while (static_cast<int>(pts.size()) < n && guard < 100 * n + 1000) {
    ++guard;
    Point p;
    p.t = spec.sampleBox[0][0] + u(rng) * (spec.sampleBox[0][1] - spec.sampleBox[0][0]);
    for (int a = 0; a < 3; ++a)
      p.x[static_cast<std::size_t>(a)] =
          spec.sampleBox[static_cast<std::size_t>(a + 1)][0] +
          u(rng) * (spec.sampleBox[static_cast<std::size_t>(a + 1)][1] -
                    spec.sampleBox[static_cast<std::size_t>(a + 1)][0]);
    if (spec.inDomain(p)) pts.push_back(p);
  }
  if (static_cast<int>(pts.size()) < n)
    throw DomainError("could not draw sample points inside the metric domain");
  return pts;
}

} // namespace weyl
