#pragma once

#include <cstddef>
#include <vector>

#include "weyllab/types.hpp"

namespace weyl {

enum class Var : unsigned char { Lower, Upper };

enum class MetricKind { Lorentzian, Riemannian };

// Lorentzian metric gamma = -N^2 dt^2 + g and its Riemannian companion
// gammaBar = N^2 dt^2 + g, in adapted coordinates (block diagonal).
struct MetricPair {
  double lapse{1.0};
  Mat4 gamma;
  Mat4 gammaBar;
  Mat4 invGamma;
  Mat4 invGammaBar;

  static MetricPair fromLapseSpatial(double N, const Mat3& g);

  const Mat4& metric(MetricKind k) const {
    return k == MetricKind::Lorentzian ? gamma : gammaBar;
  }
  const Mat4& inverse(MetricKind k) const {
    return k == MetricKind::Lorentzian ? invGamma : invGammaBar;
  }
  Mat3 spatial() const { return gamma.bottomRightCorner<3, 3>(); }
  Mat3 spatialInv() const { return invGamma.bottomRightCorner<3, 3>(); }
};

// Dense tensor at a point, rank 0..4, four-valued indices
// (0 = time coordinate direction, 1..3 spatial).
class Tensor4 {
public:
  explicit Tensor4(int rank, Var v = Var::Lower)
      : rank_(rank), c_(size_of(rank), 0.0) {
    if (rank < 0 || rank > 4) throw ShapeError("Tensor4: rank out of range");
    var_.fill(v);
  }

  int rank() const { return rank_; }
  Var variance(int slot) const { return var_[static_cast<std::size_t>(slot)]; }
  void setVariance(int slot, Var v) { var_[static_cast<std::size_t>(slot)] = v; }

  double& operator()(int a) { return c_[idx({a, 0, 0, 0})]; }
  double& operator()(int a, int b) { return c_[idx({a, b, 0, 0})]; }
  double& operator()(int a, int b, int c) { return c_[idx({a, b, c, 0})]; }
  double& operator()(int a, int b, int c, int d) { return c_[idx({a, b, c, d})]; }
  double operator()(int a) const { return c_[idx({a, 0, 0, 0})]; }
  double operator()(int a, int b) const { return c_[idx({a, b, 0, 0})]; }
  double operator()(int a, int b, int c) const { return c_[idx({a, b, c, 0})]; }
  double operator()(int a, int b, int c, int d) const { return c_[idx({a, b, c, d})]; }

  double at(const std::array<int, 4>& i) const { return c_[idx(i)]; }
  double& at(const std::array<int, 4>& i) { return c_[idx(i)]; }

  const std::vector<double>& data() const { return c_; }
  std::vector<double>& data() { return c_; }

  double maxAbs() const;

private:
  static std::size_t size_of(int rank) {
    std::size_t s = 1;
    for (int i = 0; i < rank; ++i) s *= 4;
    return s;
  }
  std::size_t idx(const std::array<int, 4>& i) const {
    std::size_t k = 0;
    for (int s = 0; s < rank_; ++s)
      k = 4 * k + static_cast<std::size_t>(i[static_cast<std::size_t>(s)]);
    return k;
  }

  int rank_;
  std::array<Var, 4> var_{};
  std::vector<double> c_;
};

// Raise/lower one slot with the chosen metric.
Tensor4 raise_index(const Tensor4& t, int slot, const MetricPair& m, MetricKind k);
Tensor4 lower_index(const Tensor4& t, int slot, const MetricPair& m, MetricKind k);

// Trace over two slots. Lower/lower pairs use the inverse metric, upper/upper
// the metric, mixed pairs the Kronecker delta.
Tensor4 contract(const Tensor4& t, int slotA, int slotB, const MetricPair& m,
                 MetricKind k = MetricKind::Lorentzian);

// Full contraction |P|^2 with the chosen metric; all slots are raised
// internally if needed. Lorentzian norms may be negative.
double norm_sq(const Tensor4& t, const MetricPair& m,
               MetricKind k = MetricKind::Lorentzian);

// Spatial-block norms of a rank-4 all-lower tensor, T-components taken in the
// orthonormal time direction T = N^{-1} d/dt, spatial indices raised with g.
struct BlockNorms {
  double Tijk{0.0};
  double TiTj{0.0};
  double ijkl{0.0};
};

BlockNorms block_norms(const Tensor4& t, double N, const Mat3& gInv);

// Max violation of the Riemann-type symmetries (antisymmetry in both pairs,
// pair exchange, first Bianchi).
double riemann_symmetry_residual(const Tensor4& t);

} // namespace weyl
