#include "weyllab.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "weyllab/parallel.hpp"
#include "weyllab/verify.hpp"

using nlohmann::json;

struct weyl_metric {
  weyl::MetricSpec spec;
};

namespace {

thread_local std::string g_err = "";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
weyl_status guarded(Fn&& fn) {
  try {
    fn();
    g_err = "";
    return WEYL_OK;
  } catch (const weyl::DomainError& e) {
    g_err = e.what();
    return WEYL_ERR_DOMAIN;
  } catch (const json::exception& e) {
    g_err = e.what();
    return WEYL_ERR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_err = e.what();
    return WEYL_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_err = e.what();
    return WEYL_ERR_INTERNAL;
  }
}

json parse_or_empty(const char* text) {
  if (!text || !*text) return json::object();
  return json::parse(text);
}

weyl::StencilConfig stencil_from(const json& opts) {
  weyl::StencilConfig cfg;
  if (opts.contains("fd")) {
    const json& fd = opts.at("fd");
    if (fd.contains("step")) cfg.step = fd.at("step").get<double>();
    if (fd.contains("order")) cfg.order = fd.at("order").get<int>();
    if (fd.contains("richardson_levels"))
      cfg.richardson = fd.at("richardson_levels").get<int>();
    if (cfg.order != 2 && cfg.order != 4)
      throw std::invalid_argument("fd.order must be 2 or 4");
    if (cfg.step <= 0.0 || cfg.richardson < 1)
      throw std::invalid_argument("invalid fd stencil configuration");
  }
  return cfg;
}

std::optional<weyl::FluidParams> fluid_from(const json& opts) {
  if (!opts.contains("fluid")) return std::nullopt;
  const json& f = opts.at("fluid");
  weyl::FluidParams p;
  p.k = f.value("k", 1.0);
  p.alpha = f.value("alpha", 0.0);
  p.kPrime = f.value("kprime", 0.0);
  p.alphaPrime = f.value("alphaprime", 0.0);
  return p;
}

weyl::RegionSpec region_from(const json& cfg) {
  weyl::RegionSpec r;
  if (!cfg.contains("region")) return r;
  const json& j = cfg.at("region");
  const std::string shape = j.value("shape", "box");
  if (shape == "ball") {
    r.shape = weyl::RegionSpec::Shape::Ball;
    if (j.contains("center"))
      for (int a = 0; a < 3; ++a)
        r.center(a) = j.at("center").at(static_cast<std::size_t>(a)).get<double>();
    r.radius = j.value("radius", 1.0);
    if (r.radius <= 0.0) throw std::invalid_argument("region.radius must be > 0");
  } else if (shape == "box") {
    if (j.contains("box")) {
      const json& b = j.at("box");
      for (std::size_t a = 0; a < 3; ++a) {
        r.box[a][0] = b.at(a).at(0).get<double>();
        r.box[a][1] = b.at(a).at(1).get<double>();
        if (!(r.box[a][0] < r.box[a][1]))
          throw std::invalid_argument("region.box sides must be nonempty");
      }
    }
  } else {
    throw std::invalid_argument("region.shape must be box or ball");
  }
  r.order = j.value("order", 6);
  r.panels = j.value("panels", 1);
  if (r.order < 2 || r.panels < 1)
    throw std::invalid_argument("region.order >= 2 and region.panels >= 1 required");
  return r;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ScanRow {
  double t, S_U, Spf_U, area, vol, bound, quadError;
};

std::vector<ScanRow> run_scan(const weyl::MetricSpec& spec, const json& cfg) {
  if (!cfg.contains("t0") || !cfg.contains("t1"))
    throw std::invalid_argument("scan config needs t0 and t1");
  const double t0 = cfg.at("t0").get<double>();
  const double t1 = cfg.at("t1").get<double>();
  const int steps = cfg.value("steps", 8);
  if (steps < 2) throw std::invalid_argument("steps >= 2 required for scans");
  const weyl::RegionSpec region = region_from(cfg);
  const auto fluid = fluid_from(cfg);
  const double tol = cfg.value("tol", 1e-10);
  const double zeta = cfg.value("zeta", 1.0);
  const weyl::StencilConfig fd = stencil_from(cfg);

  std::vector<ScanRow> rows(static_cast<std::size_t>(steps));
  std::string firstError;
  std::mutex errMu;
  weyl::parallel_for(steps, [&](int i) {
    const double t = t0 + (t1 - t0) * i / (steps - 1);
    try {
      weyl::RegionEntropy re =
          weyl::region_entropy(spec, region, t, fluid, tol, zeta, fd);
      rows[static_cast<std::size_t>(i)] = {t,       re.S_U,  re.Spf_U,    re.area,
                                           re.vol,  re.bound, re.quadError};
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(errMu);
      if (firstError.empty()) firstError = e.what();
    }
  });
  if (!firstError.empty()) throw weyl::DomainError(firstError);
  return rows;
}

json entropy_json(const weyl::EntropyPoint& e) {
  json out = {{"s", e.s},           {"S", e.S},
              {"Spf", e.Spf},       {"sqrt_g", e.sqrtg},
              {"W2_bar", e.W2bar},  {"R2_bar", e.R2bar},
              {"A2_bar", e.A2bar},  {"signed_W", e.signedW}};
  out["s_bar"] = e.sBar ? json(*e.sBar) : json(nullptr);
  out["s_crit"] = e.sCrit ? json(*e.sCrit) : json(nullptr);
  return out;
}

} // namespace

extern "C" {

weyl_status weyl_metric_open(const char* name, const char* params_json,
                             weyl_metric** out) {
  return guarded([&] {
    if (!name || !out) throw std::invalid_argument("name and out are required");
    json params = parse_or_empty(params_json);
    auto* m = new weyl_metric{weyl::make_metric(name, params)};
    *out = m;
  });
}

weyl_status weyl_metric_open_custom(const char* desc_json, weyl_metric** out) {
  return guarded([&] {
    if (!desc_json || !out) throw std::invalid_argument("description required");
    auto* m = new weyl_metric{weyl::custom_metric(json::parse(desc_json))};
    *out = m;
  });
}

void weyl_metric_close(weyl_metric* m) { delete m; }

weyl_status weyl_catalog_json(char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out is required");
    *out = dup_string(weyl::catalog_json().dump(2));
  });
}

weyl_status weyl_point_report_json(weyl_metric* m, double t, const double x[3],
                                   const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !x || !out) throw std::invalid_argument("metric, x, out required");
    json opts = parse_or_empty(options_json);
    const double tol = opts.value("tol", 1e-8);
    const double zeta = opts.value("zeta", 1.0);
    const weyl::StencilConfig fd = stencil_from(opts);
    const auto fluid = fluid_from(opts);

    weyl::Point p{t, {x[0], x[1], x[2]}};
    if (!m->spec.inDomain(p))
      throw weyl::DomainError("point outside the metric domain");

    json rep;
    rep["metric"] = m->spec.name;
    rep["classification"] = weyl::classification_json(m->spec, p, tol);
    rep["entropy"] =
        entropy_json(weyl::entropy_point(m->spec, p, fluid, 1e-10, zeta, fd));
    weyl::CurvatureBundle b = weyl::compute_curvature(m->spec, p, fd);
    weyl::FluidReadout fr = weyl::extract_fluid(b);
    rep["fluid"] = {{"M", fr.M},
                    {"P", fr.P},
                    {"momentum", fr.momentum},
                    {"anisotropy", fr.anisotropy}};
    rep["scalar_curvature"] = b.scalar;
    json refs = json::object();
    for (const char* q : {"H", "M", "P", "k", "A2", "kretschmann", "s"})
      if (auto v = weyl::exact_reference(m->spec, q, p)) refs[q] = *v;
    rep["reference"] = refs;
    *out = dup_string(rep.dump(2));
  });
}

weyl_status weyl_region_entropy_json(weyl_metric* m, const char* config_json,
                                     char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("metric and out required");
    json cfg = parse_or_empty(config_json);
    if (!cfg.contains("t")) throw std::invalid_argument("config needs t");
    const double t = cfg.at("t").get<double>();
    weyl::RegionEntropy re = weyl::region_entropy(
        m->spec, region_from(cfg), t, fluid_from(cfg), cfg.value("tol", 1e-10),
        cfg.value("zeta", 1.0), stencil_from(cfg));
    weyl::ExtremalReport ex =
        weyl::classify_extremal(m->spec, region_from(cfg), t,
                                cfg.value("extremal_tol", 1e-5), stencil_from(cfg));
    json j = {{"metric", m->spec.name},
              {"t", t},
              {"S_U", re.S_U},
              {"Spf_U", re.Spf_U},
              {"area", re.area},
              {"vol", re.vol},
              {"bound", re.bound},
              {"quadError", re.quadError},
              {"sup_s_crit", re.supSCrit},
              {"min_lapse", re.minLapse},
              {"extremal", {{"label", ex.label},
                            {"max_h", ex.maxH},
                            {"max_ricci", ex.maxRicci},
                            {"max_static_residual", ex.maxStaticRes},
                            {"max_lapse_laplacian", ex.maxLaplN},
                            {"max_weyl_bar", ex.maxWeylBar},
                            {"max_alpha_gap", ex.maxAlphaGap}}}};
    *out = dup_string(j.dump(2));
  });
}

weyl_status weyl_region_scan_csv(weyl_metric* m, const char* config_json,
                                 char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("metric and out required");
    const auto rows = run_scan(m->spec, parse_or_empty(config_json));
    std::string csv = "t,S_U,Spf_U,area,vol,bound,quadError\n";
    for (const ScanRow& r : rows) {
      csv += fmt17(r.t) + "," + fmt17(r.S_U) + "," + fmt17(r.Spf_U) + "," +
             fmt17(r.area) + "," + fmt17(r.vol) + "," + fmt17(r.bound) + "," +
             fmt17(r.quadError) + "\n";
    }
    *out = dup_string(csv);
  });
}

weyl_status weyl_region_scan_json(weyl_metric* m, const char* config_json,
                                  char** out) {
  return guarded([&] {
    if (!m || !out) throw std::invalid_argument("metric and out required");
    const auto rows = run_scan(m->spec, parse_or_empty(config_json));
    json arr = json::array();
    for (const ScanRow& r : rows)
      arr.push_back({{"t", r.t},
                     {"S_U", r.S_U},
                     {"Spf_U", r.Spf_U},
                     {"area", r.area},
                     {"vol", r.vol},
                     {"bound", r.bound},
                     {"quadError", r.quadError}});
    *out = dup_string(json({{"metric", m->spec.name}, {"rows", arr}}).dump(2));
  });
}

weyl_status weyl_verify_json(const char* config_json, char** out, int* all_pass) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("out is required");
    json cfg = parse_or_empty(config_json);
    std::vector<weyl::VerificationCase> cases;
    if (cfg.contains("metric")) {
      weyl::MetricSpec spec = weyl::make_metric(
          cfg.at("metric").get<std::string>(), cfg.value("params", json::object()));
      const unsigned seed = cfg.value("seed", 7771u);
      auto pts = weyl::seeded_points(spec, cfg.value("points", 3), seed);
      cases.push_back(weyl::check_curvature_identities(spec, pts));
      for (auto& vc : weyl::check_appendix_identities(spec, pts))
        cases.push_back(std::move(vc));
    } else {
      cases = weyl::run_default_suite();
    }
    bool ok = true;
    for (const auto& vc : cases) ok = ok && vc.pass;
    if (all_pass) *all_pass = ok ? 1 : 0;
    *out = dup_string(
        json({{"cases", weyl::suite_json(cases)}, {"pass", ok}}).dump(2));
  });
}

void weyl_string_free(char* s) { std::free(s); }

const char* weyl_last_error(void) { return g_err.c_str(); }

} // extern "C"
