#include "weyllab/tensor.hpp"

#include <cmath>

namespace weyl {

MetricPair MetricPair::fromLapseSpatial(double N, const Mat3& g) {
  MetricPair m;
  m.lapse = N;
  m.gamma.setZero();
  m.gammaBar.setZero();
  m.gamma(0, 0) = -N * N;
  m.gammaBar(0, 0) = N * N;
  m.gamma.bottomRightCorner<3, 3>() = g;
  m.gammaBar.bottomRightCorner<3, 3>() = g;
  Mat3 gInv = g.inverse();
  m.invGamma.setZero();
  m.invGammaBar.setZero();
  m.invGamma(0, 0) = -1.0 / (N * N);
  m.invGammaBar(0, 0) = 1.0 / (N * N);
  m.invGamma.bottomRightCorner<3, 3>() = gInv;
  m.invGammaBar.bottomRightCorner<3, 3>() = gInv;
  return m;
}

double Tensor4::maxAbs() const {
  double v = 0.0;
  for (double c : c_) v = std::max(v, std::fabs(c));
  return v;
}

namespace {

// Apply a 4x4 matrix to one slot of the tensor.
Tensor4 apply_slot(const Tensor4& t, int slot, const Mat4& M) {
  Tensor4 out(t.rank());
  for (int s = 0; s < t.rank(); ++s) out.setVariance(s, t.variance(s));
  std::array<int, 4> i{0, 0, 0, 0};
  const int r = t.rank();
  const auto loop = [&](auto&& self, int depth) -> void {
    if (depth == r) {
      std::array<int, 4> j = i;
      double acc = 0.0;
      for (int a = 0; a < 4; ++a) {
        j[static_cast<std::size_t>(slot)] = a;
        acc += M(i[static_cast<std::size_t>(slot)], a) * t.at(j);
      }
      out.at(i) = acc;
      return;
    }
    for (int a = 0; a < 4; ++a) {
      i[static_cast<std::size_t>(depth)] = a;
      self(self, depth + 1);
    }
  };
  loop(loop, 0);
  return out;
}

} // namespace

Tensor4 raise_index(const Tensor4& t, int slot, const MetricPair& m, MetricKind k) {
  if (t.variance(slot) == Var::Upper) return t;
  Tensor4 out = apply_slot(t, slot, m.inverse(k));
  out.setVariance(slot, Var::Upper);
  return out;
}

Tensor4 lower_index(const Tensor4& t, int slot, const MetricPair& m, MetricKind k) {
  if (t.variance(slot) == Var::Lower) return t;
  Tensor4 out = apply_slot(t, slot, m.metric(k));
  out.setVariance(slot, Var::Lower);
  return out;
}

Tensor4 contract(const Tensor4& t, int slotA, int slotB, const MetricPair& m,
                 MetricKind k) {
  const int r = t.rank();
  if (r < 2) throw ShapeError("contract: rank < 2");
  if (slotA == slotB || slotA < 0 || slotB < 0 || slotA >= r || slotB >= r)
    throw ShapeError("contract: bad slots");
  if (slotA > slotB) std::swap(slotA, slotB);

  const Var va = t.variance(slotA);
  const Var vb = t.variance(slotB);
  Mat4 w;
  if (va == Var::Lower && vb == Var::Lower)
    w = m.inverse(k);
  else if (va == Var::Upper && vb == Var::Upper)
    w = m.metric(k);
  else
    w = Mat4::Identity();

  Tensor4 out(r - 2);
  {
    int os = 0;
    for (int s = 0; s < r; ++s)
      if (s != slotA && s != slotB) out.setVariance(os++, t.variance(s));
  }

  std::array<int, 4> oi{0, 0, 0, 0};
  const auto loop = [&](auto&& self, int depth) -> void {
    if (depth == r - 2) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          std::array<int, 4> fi{0, 0, 0, 0};
          int os = 0;
          for (int s = 0; s < r; ++s) {
            if (s == slotA)
              fi[static_cast<std::size_t>(s)] = a;
            else if (s == slotB)
              fi[static_cast<std::size_t>(s)] = b;
            else
              fi[static_cast<std::size_t>(s)] = oi[static_cast<std::size_t>(os++)];
          }
          acc += w(a, b) * t.at(fi);
        }
      out.at(oi) = acc;
      return;
    }
    for (int a = 0; a < 4; ++a) {
      oi[static_cast<std::size_t>(depth)] = a;
      self(self, depth + 1);
    }
  };
  loop(loop, 0);
  return out;
}

double norm_sq(const Tensor4& t, const MetricPair& m, MetricKind k) {
  Tensor4 up = t;
  for (int s = 0; s < t.rank(); ++s)
    if (up.variance(s) == Var::Lower) up = raise_index(up, s, m, k);
  Tensor4 down = t;
  for (int s = 0; s < t.rank(); ++s)
    if (down.variance(s) == Var::Upper) down = lower_index(down, s, m, k);
  double acc = 0.0;
  const auto& a = up.data();
  const auto& b = down.data();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

BlockNorms block_norms(const Tensor4& t, double N, const Mat3& gInv) {
  if (t.rank() != 4) throw ShapeError("block_norms: rank-4 tensor required");
  BlockNorms out;
  const double n2 = 1.0 / (N * N);
  // |t_Tijk|^2, one T slot (component t -> factor 1/N each tensor)
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int kk = 1; kk < 4; ++kk)
        for (int ip = 1; ip < 4; ++ip)
          for (int jp = 1; jp < 4; ++jp)
            for (int kp = 1; kp < 4; ++kp)
              out.Tijk += n2 * gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) *
                          gInv(kk - 1, kp - 1) * t(0, i, j, kk) * t(0, ip, jp, kp);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int ip = 1; ip < 4; ++ip)
        for (int jp = 1; jp < 4; ++jp)
          out.TiTj += n2 * n2 * gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) *
                      t(0, i, 0, j) * t(0, ip, 0, jp);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int kk = 1; kk < 4; ++kk)
        for (int l = 1; l < 4; ++l)
          for (int ip = 1; ip < 4; ++ip)
            for (int jp = 1; jp < 4; ++jp)
              for (int kp = 1; kp < 4; ++kp)
                for (int lp = 1; lp < 4; ++lp)
                  out.ijkl += gInv(i - 1, ip - 1) * gInv(j - 1, jp - 1) *
                              gInv(kk - 1, kp - 1) * gInv(l - 1, lp - 1) *
                              t(i, j, kk, l) * t(ip, jp, kp, lp);
  return out;
}

double riemann_symmetry_residual(const Tensor4& t) {
  if (t.rank() != 4) throw ShapeError("riemann_symmetry_residual: rank 4 required");
  double res = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          res = std::max(res, std::fabs(t(a, b, c, d) + t(b, a, c, d)));
          res = std::max(res, std::fabs(t(a, b, c, d) + t(a, b, d, c)));
          res = std::max(res, std::fabs(t(a, b, c, d) - t(c, d, a, b)));
          res = std::max(res, std::fabs(t(a, b, c, d) + t(a, c, d, b) + t(a, d, b, c)));
        }
  return res;
}

} // namespace weyl
