#pragma once

#include "weyllab/entropy.hpp"

namespace weyl {

struct EvolutionReport {
  std::string name;
  double lhs{0.0}; // time derivative measured by finite differences
  double rhs{0.0}; // closed-form evolution expression from the bundle
  double residual{0.0};
  double relResidual{0.0};
  bool pass{false};
  bool skipped{false};
  std::string note;
};

struct VerificationCase {
  std::string name;
  std::string metric;
  double maxResidual{0.0};
  double tol{0.0};
  bool pass{false};
  nlohmann::json witnesses = nlohmann::json::array();
};

// Electric-side evolution of the squared Weyl norm:
// (1/2) D_T |W|^2 = 16 H |E|^2 - 24 h_jl E_ij E_il + 4 (M+P) h_ij E_ij.
EvolutionReport check_weyl_evolution_electric(const MetricSpec& spec, const Point& p,
                                              const StencilConfig& cfg = StencilConfig::base());

// Electric-side entropy evolution, full bracket formula plus the vacuum
// branch D_T S = -H sqrt(g).
EvolutionReport check_entropy_evolution_electric(const MetricSpec& spec, const Point& p,
                                                 std::optional<FluidParams> fluid = std::nullopt,
                                                 const StencilConfig& cfg = StencilConfig::base());

struct MonotonicityScan {
  std::string metric;
  double minDtSpf{0.0};
  int points{0};
  int alphaViolations{0}; // samples where the expansion hypothesis fails
  bool parameterBoundsOk{true};
  bool equalityBiconditional{true};
  bool pass{false};
  nlohmann::json records = nlohmann::json::array();
};

MonotonicityScan check_monotonicity_electric(const MetricSpec& spec,
                                             const RegionSpec& region,
                                             const std::vector<double>& timeGrid,
                                             std::optional<FluidParams> fluid = std::nullopt,
                                             const StencilConfig& cfg = StencilConfig::base());

// Magnetic-side evolution lemma on synthetic component data:
// (1/2) D_T |W|^2 = -16 h_kp W_Tijk W_Tijp, checked against a brute-force
// contraction and for nonnegativity under h <= alpha H g <= 0.
struct MagneticCheck {
  int tensors{0};
  double maxOracleResidual{0.0};
  double minRhs{0.0};       // of the evolution right-hand side
  double minDtS{0.0};       // of the assembled entropy evolution display
  bool lapseMonotonePredicate{true};
  bool pass{false};
};

MagneticCheck check_weyl_evolution_magnetic(int tensors = 100, unsigned seed = 20240901);

// Metric-based variant; reports "not exercised" unless the metric actually
// has a vanishing electric block.
EvolutionReport check_weyl_evolution_magnetic(const MetricSpec& spec, const Point& p,
                                              const StencilConfig& cfg = StencilConfig::base());

// Pointwise algebraic curvature identities: norm splitting across the two
// signatures, the A-tensor norm against the Einstein tensor, and the
// Weyl + A decomposition of the Riemann tensor.
VerificationCase check_curvature_identities(const MetricSpec& spec,
                                            const std::vector<Point>& points,
                                            const StencilConfig& cfg = StencilConfig::base());

std::vector<VerificationCase> check_appendix_identities(
    const MetricSpec& spec, const std::vector<Point>& points,
    const StencilConfig& cfg = StencilConfig::base());

// Conformal family g = e^{2 sigma} delta: umbilical slices, spatially
// constant mean curvature, nondecreasing entropy.
VerificationCase check_conformal_class(const std::string& sigmaExpr,
                                       const std::vector<Point>& points,
                                       const StencilConfig& cfg = StencilConfig::base());

std::vector<VerificationCase> run_default_suite();
nlohmann::json suite_json(const std::vector<VerificationCase>& cases);

} // namespace weyl
