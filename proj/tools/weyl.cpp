// Batch front-end for the foliated-curvature library; talks to the core
// exclusively through the C interface.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weyllab.h"

using nlohmann::json;

namespace {

int fail_config(const std::string& msg) {
  std::cerr << "config error: " << msg << "\n";
  return 2;
}

int fail_run(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return cfg;
}

int emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(outPath);
  if (!out) return fail_run("cannot write output file: " + outPath);
  out << text;
  return 0;
}

struct MetricHandle {
  weyl_metric* m = nullptr;
  ~MetricHandle() { weyl_metric_close(m); }
};

int open_metric(const json& cfg, MetricHandle& h) {
  if (cfg.contains("custom_metric"))
    return weyl_metric_open_custom(cfg.at("custom_metric").dump().c_str(), &h.m);
  if (!cfg.contains("metric")) throw std::invalid_argument("no metric selected");
  const std::string name = cfg.at("metric").get<std::string>();
  const std::string params = cfg.value("params", json::object()).dump();
  return weyl_metric_open(name.c_str(), params.c_str(), &h.m);
}

int map_status(weyl_status st) {
  if (st == WEYL_OK) return 0;
  if (st == WEYL_ERR_CONFIG) return fail_config(weyl_last_error());
  return fail_run(weyl_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  weyl_string_free(s);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature, foliation and entropy reports for analytic spacetimes"};
  app.require_subcommand(1);

  std::string configPath, metric, outPath, format = "json", paramsJson;
  double tol = -1.0;
  long long seed = -1;
  double tFlag = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> xFlag;
  double t0Flag = std::numeric_limits<double>::quiet_NaN();
  double t1Flag = std::numeric_limits<double>::quiet_NaN();
  int stepsFlag = -1;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--metric", metric, "catalog metric name");
    cmd->add_option("--config", configPath, "JSON config file");
    cmd->add_option("--out", outPath, "output path (default stdout)");
    cmd->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", tol, "tolerance override");
    cmd->add_option("--seed", seed, "seed override");
    cmd->add_option("--params", paramsJson, "metric parameter JSON");
  };

  CLI::App* cmdReport = app.add_subcommand("report", "pointwise curvature/entropy report");
  addCommon(cmdReport);
  cmdReport->add_option("--t", tFlag, "slice time");
  cmdReport->add_option("--x", xFlag, "spatial coordinates x1 x2 x3")->expected(3);

  CLI::App* cmdScan = app.add_subcommand("scan", "region entropy time series");
  addCommon(cmdScan);
  cmdScan->add_option("--t0", t0Flag, "scan start time");
  cmdScan->add_option("--t1", t1Flag, "scan end time");
  cmdScan->add_option("--steps", stepsFlag, "number of slices (>= 2)");

  CLI::App* cmdVerify = app.add_subcommand("verify", "run the verification suite");
  addCommon(cmdVerify);

  CLI::App* cmdRegion = app.add_subcommand("entropy-region", "single-slice region entropy");
  addCommon(cmdRegion);
  cmdRegion->add_option("--t", tFlag, "slice time");

  CLI::App* cmdCatalog = app.add_subcommand("catalog", "list available metrics");
  addCommon(cmdCatalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json cfg;
  try {
    cfg = load_config(configPath);
    // flag > file > default
    if (!metric.empty()) cfg["metric"] = metric;
    if (!paramsJson.empty()) cfg["params"] = json::parse(paramsJson);
    if (tol >= 0.0) cfg["tol"] = tol;
    if (seed >= 0) cfg["seed"] = static_cast<unsigned>(seed);
    if (!std::isnan(tFlag)) cfg["t"] = tFlag;
    if (!xFlag.empty()) cfg["x"] = xFlag;
    if (!std::isnan(t0Flag)) cfg["t0"] = t0Flag;
    if (!std::isnan(t1Flag)) cfg["t1"] = t1Flag;
    if (stepsFlag > 0) cfg["steps"] = stepsFlag;
  } catch (const std::exception& e) {
    return fail_config(e.what());
  }

  try {
    if (cmdCatalog->parsed()) {
      char* text = nullptr;
      const weyl_status st = weyl_catalog_json(&text);
      if (st != WEYL_OK) return map_status(st);
      return emit(take(text), outPath);
    }

    if (cmdVerify->parsed()) {
      char* text = nullptr;
      int pass = 0;
      const std::string vcfg = cfg.dump();
      const weyl_status st = weyl_verify_json(
          cfg.empty() ? nullptr : vcfg.c_str(), &text, &pass);
      if (st != WEYL_OK) return map_status(st);
      const int rc = emit(take(text), outPath);
      return rc != 0 ? rc : (pass ? 0 : 1);
    }

    MetricHandle h;
    try {
      const int rc = open_metric(cfg, h);
      if (rc != 0) return map_status(static_cast<weyl_status>(rc));
    } catch (const std::invalid_argument& e) {
      return fail_config(e.what());
    }

    if (cmdReport->parsed()) {
      if (!cfg.contains("t") || !cfg.contains("x"))
        return fail_config("report needs t and x (flags or config keys)");
      double x[3];
      for (int a = 0; a < 3; ++a)
        x[a] = cfg.at("x").at(static_cast<std::size_t>(a)).get<double>();
      char* text = nullptr;
      const weyl_status st = weyl_point_report_json(
          h.m, cfg.at("t").get<double>(), x, cfg.dump().c_str(), &text);
      if (st != WEYL_OK) return map_status(st);
      return emit(take(text), outPath);
    }

    if (cmdRegion->parsed()) {
      char* text = nullptr;
      const weyl_status st =
          weyl_region_entropy_json(h.m, cfg.dump().c_str(), &text);
      if (st != WEYL_OK) return map_status(st);
      return emit(take(text), outPath);
    }

    if (cmdScan->parsed()) {
      char* text = nullptr;
      const weyl_status st =
          format == "csv"
              ? weyl_region_scan_csv(h.m, cfg.dump().c_str(), &text)
              : weyl_region_scan_json(h.m, cfg.dump().c_str(), &text);
      if (st != WEYL_OK) return map_status(st);
      return emit(take(text), outPath);
    }
  } catch (const std::exception& e) {
    return fail_run(e.what());
  }
  return fail_config("no subcommand handled");
}
