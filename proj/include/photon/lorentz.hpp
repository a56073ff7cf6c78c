#pragma once

#include "photon/rotation.hpp"
#include "photon/tensor.hpp"
#include "photon/vec.hpp"

namespace photon {

namespace detail {

// Field transform for a boost with velocity beta along +x:
//   e1' = e1              b1' = b1
//   e2' = g (e2 - B b3)   b2' = g (b2 + B e3)
//   e3' = g (e3 + B b2)   b3' = g (b3 - B e2)
inline AntisymTensor boost_along_x(const AntisymTensor& f, double beta, double gamma) {
  const Vec3& e = f.e;
  const Vec3& b = f.b;
  return {Vec3(e.x(), gamma * (e.y() - beta * b.z()), gamma * (e.z() + beta * b.y())),
          Vec3(b.x(), gamma * (b.y() + beta * e.z()), gamma * (b.z() - beta * e.y()))};
}

}  // namespace detail

// Pure Lorentz boost into the frame moving with velocity beta (|beta| < 1).
class LorentzBoost {
 public:
  explicit LorentzBoost(const Vec3& beta) : beta_(beta) {
    require_finite(beta, "beta");
    if (!(beta.squaredNorm() < 1.0)) {
      throw std::invalid_argument("beta magnitude must be < 1");
    }
    gamma_ = 1.0 / std::sqrt(1.0 - beta.squaredNorm());
  }

  const Vec3& beta() const { return beta_; }
  double speed() const { return beta_.norm(); }
  double gamma() const { return gamma_; }
  LorentzBoost inverse() const { return LorentzBoost(-beta_); }

  // Boost along an arbitrary direction = rotate beta onto +x, apply the
  // closed-form x transform, rotate back.
  AntisymTensor transform(const AntisymTensor& f) const {
    const double v = speed();
    if (v == 0.0) return f;
    const Rotation r = Rotation::align(beta_ / v, Vec3::UnitX());
    return rotate(detail::boost_along_x(rotate(f, r), v, gamma_), r.inverse());
  }

  // Aberration: boost the null four-vector (1, k) and renormalize its space
  // part. The parallel component maps to g(k.bhat - v), the transverse part
  // is untouched, and the new frequency-per-unit-frequency is g(1 - beta.k).
  Vec3 aberrate(const Vec3& k) const {
    require_unit(k, "propagation direction k");
    const double v = speed();
    if (v == 0.0) return k.normalized();
    const Vec3 bhat = beta_ / v;
    const double kpar = bhat.dot(k);
    const Vec3 space = k + ((gamma_ - 1.0) * kpar - gamma_ * v) * bhat;
    return space.normalized();
  }

  PhotonTensor transform(const PhotonTensor& p) const {
    return PhotonTensor::validated(transform(p.tensor()), aberrate(p.k()), p.helicity(),
                                   tol::transformed);
  }

 private:
  Vec3 beta_;
  double gamma_;
};

// Frequency seen by an observer receding along the propagation direction at
// speed beta: E' = E sqrt((1 - beta) / (1 + beta)).
inline double doppler_shift(double energy, double beta) {
  if (!(energy > 0.0)) throw std::invalid_argument("energy must be positive");
  if (!(std::abs(beta) < 1.0)) throw std::invalid_argument("beta magnitude must be < 1");
  return energy * std::sqrt((1.0 - beta) / (1.0 + beta));
}

}  // namespace photon
