#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace photon {

// Natural units throughout: hbar = c = 1.
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;
using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

namespace tol {
// Exact constructions are held to the tight bound; values that have been
// through boosts or rotations accumulate rounding and get the loose one.
inline constexpr double construct = 1e-12;
inline constexpr double transformed = 1e-9;
inline constexpr double unit_direction = 1e-9;
}  // namespace tol

inline bool is_finite(const Vec3& v) { return v.allFinite(); }

inline void require_finite(const Vec3& v, const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + " has non-finite components");
  }
}

inline void require_unit(const Vec3& v, const char* what,
                         double tolerance = tol::unit_direction) {
  require_finite(v, what);
  if (std::abs(v.norm() - 1.0) > tolerance) {
    throw std::invalid_argument(std::string(what) + " must be a unit vector");
  }
}

// Plain bilinear cross product of a real direction with a complex field
// vector. Eigen's cross() conjugates complex coefficients, which is not what
// any of the spin or curl formulas here mean.
inline CVec3 cross(const Vec3& a, const CVec3& b) {
  return CVec3(a.y() * b.z() - a.z() * b.y(),
               a.z() * b.x() - a.x() * b.z(),
               a.x() * b.y() - a.y() * b.x());
}

// Deterministic seed for in-plane orientations: the global z axis projected
// onto the plane orthogonal to k, or the x axis when k is (anti)parallel to z.
inline Vec3 reference_transverse_axis(const Vec3& k) {
  const Vec3 z = Vec3::UnitZ();
  if (k.cross(z).norm() >= 1e-6) {
    return (z - k.dot(z) * k).normalized();
  }
  const Vec3 x = Vec3::UnitX();
  return (x - k.dot(x) * k).normalized();
}

}  // namespace photon
