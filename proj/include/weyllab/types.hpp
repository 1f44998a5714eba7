#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace weyl {

using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;

// Spacetime point in adapted coordinates (t, x1, x2, x3).
struct Point {
  double t{0.0};
  std::array<double, 3> x{0.0, 0.0, 0.0};

  // axis 0 = t, 1..3 = spatial
  double coord(int axis) const {
    return axis == 0 ? t : x[static_cast<std::size_t>(axis - 1)];
  }

  Point shifted(int axis, double dh) const {
    Point q = *this;
    if (axis == 0)
      q.t += dh;
    else
      q.x[static_cast<std::size_t>(axis - 1)] += dh;
    return q;
  }
};

class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public std::logic_error {
public:
  explicit ShapeError(const std::string& what) : std::logic_error(what) {}
};

} // namespace weyl
