#pragma once

#include "photon/vec.hpp"

#include <array>

namespace photon {

// Spin-1 generators in the Cartesian representation, (S_j)_{kl} = -i eps_{jkl}.
// Hermitian, and S_x^2 + S_y^2 + S_z^2 = 2 I.
inline const std::array<CMat3, 3>& spin_matrices() {
  static const std::array<CMat3, 3> s = [] {
    std::array<CMat3, 3> m;
    for (auto& x : m) x.setZero();
    m[0](1, 2) = -kImag;
    m[0](2, 1) = kImag;
    m[1](0, 2) = kImag;
    m[1](2, 0) = -kImag;
    m[2](0, 1) = -kImag;
    m[2](1, 0) = kImag;
    return m;
  }();
  return s;
}

// Helicity operator k.S for a unit direction k. Acting on a vector it is the
// cross product in disguise: (k.S) psi = i k x psi.
inline CMat3 spin_dot(const Vec3& k) {
  require_unit(k, "direction k");
  const auto& s = spin_matrices();
  return k.x() * s[0] + k.y() * s[1] + k.z() * s[2];
}

struct HelicityBasis {
  CVec3 chi_plus;   // eigenvalue +1 of k.S
  CVec3 chi_minus;  // eigenvalue -1
  CVec3 chi_zero;   // eigenvalue  0, numerically equal to k itself
  Vec3 k;
};

inline double helicity_singular_gap(const Vec3& k) {
  return 1.0 - (k.x() * k.y() + k.y() * k.z() + k.z() * k.x());
}

// Closed-form helicity eigenvectors,
//   chi_pm[j] = (1 - k_j (k_x+k_y+k_z) +- i (k_next - k_prev)) / (2 sqrt(expr)),
// expr = 1 - (k_x k_y + k_y k_z + k_z k_x). Exactly normalized, but the
// expression degenerates where expr -> 0, i.e. at k = +-(1,1,1)/sqrt(3).
inline HelicityBasis helicity_basis_closed_form(const Vec3& k) {
  require_unit(k, "direction k");
  const double expr = helicity_singular_gap(k);
  if (!(expr > 1e-6)) {
    throw std::domain_error("closed-form helicity basis is singular near (1,1,1)/sqrt(3)");
  }
  const double sum = k.x() + k.y() + k.z();
  const double den = 2.0 * std::sqrt(expr);
  const auto component = [&](double kj, double diff, double sign) {
    return Complex((1.0 - kj * sum) / den, sign * diff / den);
  };
  CVec3 plus(component(k.x(), k.y() - k.z(), 1.0),
             component(k.y(), k.z() - k.x(), 1.0),
             component(k.z(), k.x() - k.y(), 1.0));
  CVec3 minus(component(k.x(), k.y() - k.z(), -1.0),
              component(k.y(), k.z() - k.x(), -1.0),
              component(k.z(), k.x() - k.y(), -1.0));
  // The shared denominator loses relative accuracy as expr -> threshold; it
  // only scales the vectors, so renormalizing recovers full precision.
  plus.normalize();
  minus.normalize();
  return {plus, minus, k.cast<Complex>(), k};
}

// Frame fallback valid everywhere: with u, v, k a right-handed orthonormal
// triad, chi_pm = (u +- i v) / sqrt(2) satisfies (k.S) chi_pm = +- chi_pm.
inline HelicityBasis helicity_basis_transverse_frame(const Vec3& k) {
  require_unit(k, "direction k");
  const Vec3 v = reference_transverse_axis(k);
  const Vec3 u = v.cross(k);
  const CVec3 uc = u.cast<Complex>();
  const CVec3 vc = v.cast<Complex>();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {(uc + kImag * vc) * inv_sqrt2, (uc - kImag * vc) * inv_sqrt2,
          k.cast<Complex>(), k};
}

// Closed form where it is well conditioned, frame construction otherwise.
inline HelicityBasis helicity_basis(const Vec3& k) {
  require_unit(k, "direction k");
  if (helicity_singular_gap(k) > 1e-6) return helicity_basis_closed_form(k);
  return helicity_basis_transverse_frame(k);
}

// Projector onto the plane orthogonal to k. Equals spin_dot(k) squared.
inline CMat3 transverse_projector(const Vec3& k) {
  require_unit(k, "direction k");
  return CMat3::Identity() - (k * k.transpose()).cast<Complex>();
}

}  // namespace photon
