#pragma once

#include "photon/vec.hpp"

namespace photon {

// Proper rotation of three-space. The constructor rejects anything that is
// not orthogonal with determinant +1, so a Rotation is valid by construction.
class Rotation {
 public:
  explicit Rotation(const Mat3& m) : m_(m) {
    if (!m.allFinite()) {
      throw std::invalid_argument("rotation matrix has non-finite entries");
    }
    if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > tol::construct) {
      throw std::invalid_argument("rotation matrix is not orthogonal");
    }
    if (std::abs(m.determinant() - 1.0) > tol::construct) {
      throw std::invalid_argument("rotation matrix must have determinant +1");
    }
  }

  static Rotation identity() { return Rotation(Mat3::Identity()); }

  // Rodrigues: R = I + sin(t) K + (1 - cos(t)) K^2 with K the cross-product
  // matrix of the (unit) axis.
  static Rotation axis_angle(const Vec3& axis, double angle) {
    require_unit(axis, "rotation axis");
    Mat3 k;
    k << 0.0, -axis.z(), axis.y(),
        axis.z(), 0.0, -axis.x(),
        -axis.y(), axis.x(), 0.0;
    const Mat3 m =
        Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
    return Rotation(m);
  }

  // Shortest rotation taking unit vector `from` onto unit vector `to`.
  static Rotation align(const Vec3& from, const Vec3& to) {
    require_unit(from, "align source");
    require_unit(to, "align target");
    const Vec3 axis_raw = from.cross(to);
    const double s = axis_raw.norm();
    const double c = from.dot(to);
    if (s < 1e-12) {
      if (c > 0.0) return identity();
      // Antiparallel pair: half turn about any axis orthogonal to `from`.
      return axis_angle(reference_transverse_axis(from), kPi);
    }
    return axis_angle(axis_raw / s, std::atan2(s, c));
  }

  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation operator*(const Rotation& other) const { return Rotation(m_ * other.m_); }
  Rotation inverse() const { return Rotation(m_.transpose().eval()); }
  const Mat3& matrix() const { return m_; }

 private:
  Mat3 m_;
};

}  // namespace photon
