#pragma once

#include "photon/rotation.hpp"
#include "photon/vec.hpp"

#include <utility>

namespace photon {

// Rank-2 antisymmetric tensor over Minkowski space, stored as its six
// independent components: f^{0i} = e_i and the purely spatial block packed
// into b via f^{ij} = -eps_{ijk} b_k. Signature (+,-,-,-).
struct AntisymTensor {
  Vec3 e{Vec3::Zero()};
  Vec3 b{Vec3::Zero()};
};

struct TensorInvariants {
  double trace;    // vanishes identically by antisymmetry
  double ff;       // f_{mu nu} f^{mu nu}  = 2 (e.e - b.b)
  double ff_dual;  // f_{mu nu} f*^{mu nu} = -4 e.b
};

inline TensorInvariants invariants(const AntisymTensor& f) {
  return {0.0, 2.0 * (f.e.squaredNorm() - f.b.squaredNorm()), -4.0 * f.e.dot(f.b)};
}

// Hodge dual: (e, b) -> (-b, e). Applying it twice flips the sign of both
// blocks, i.e. dual^2 equals charge conjugation and dual^4 the identity.
inline AntisymTensor dual(const AntisymTensor& f) { return {-f.b, f.e}; }

enum class DiscreteOp { P, T, C, D };

inline AntisymTensor discrete_symmetry(const AntisymTensor& f, DiscreteOp op) {
  switch (op) {
    case DiscreteOp::P:
      return {-f.e, f.b};
    case DiscreteOp::T:
      return {f.e, -f.b};
    case DiscreteOp::C:
      return {-f.e, -f.b};
    case DiscreteOp::D:
      return dual(f);
  }
  throw std::invalid_argument("unknown discrete symmetry");
}

inline AntisymTensor rotate(const AntisymTensor& f, const Rotation& r) {
  return {r * f.e, r * f.b};
}

// Norms of the contractions k_mu f^{mu nu} and k_mu f*^{mu nu} for the null
// vector k^mu = (1, k). Both vanish exactly when (e, b, k) form a photon
// triad; for generic tensors they measure the failure of transversality.
inline std::pair<double, double> transversality_residual(const AntisymTensor& f,
                                                         const Vec3& k) {
  require_unit(k, "propagation direction k");
  const double time_part = k.dot(f.e);
  const Vec3 space_part = f.e + k.cross(f.b);
  const double dual_time = -k.dot(f.b);
  const Vec3 dual_space = -f.b + k.cross(f.e);
  return {std::sqrt(time_part * time_part + space_part.squaredNorm()),
          std::sqrt(dual_time * dual_time + dual_space.squaredNorm())};
}

// Pitch of the field helix traced along the propagation axis.
inline double helix_length(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return 2.0 * kPi / omega;
}

// Antisymmetric tensor constrained to the single-photon form: e and b of
// equal length, mutually orthogonal, and transverse to the unit propagation
// direction k = e x b / |e x b|. Instances only exist validated.
class PhotonTensor {
 public:
  static PhotonTensor validated(const AntisymTensor& f, const Vec3& k, int helicity,
                                double tolerance = tol::construct) {
    require_finite(f.e, "e");
    require_finite(f.b, "b");
    require_unit(k, "propagation direction k", tolerance);
    if (helicity != 1 && helicity != -1) {
      throw std::invalid_argument("helicity must be +1 or -1");
    }
    const double scale = std::max(f.e.norm(), f.b.norm());
    if (!(scale > 0.0)) {
      throw std::invalid_argument("photon tensor must be nonzero");
    }
    if (std::abs(f.e.norm() - f.b.norm()) > tolerance * scale) {
      throw std::invalid_argument("|e| and |b| must agree");
    }
    if (std::abs(f.e.dot(f.b)) > tolerance * scale * scale) {
      throw std::invalid_argument("e and b must be orthogonal");
    }
    const Vec3 ehat = f.e / scale;
    const Vec3 bhat = f.b / f.b.norm();
    // ehat inherits the |e| vs |b| slack, so the direction check gets headroom.
    if ((ehat.cross(bhat) - k).norm() > 8.0 * tolerance) {
      throw std::invalid_argument("k must equal the direction of e x b");
    }
    return PhotonTensor(f, k, helicity);
  }

  const AntisymTensor& tensor() const { return f_; }
  const Vec3& k() const { return k_; }
  int helicity() const { return helicity_; }
  double omega() const { return f_.e.norm(); }
  double helix_length() const { return photon::helix_length(omega()); }

 private:
  PhotonTensor(const AntisymTensor& f, const Vec3& k, int helicity)
      : f_(f), k_(k), helicity_(helicity) {}

  AntisymTensor f_;
  Vec3 k_;
  int helicity_;
};

// Snapshot of a circularly polarized plane-wave tensor at the spatial origin.
// The field vector e starts at angle `phase` in the transverse frame (u, v)
// with u = v x k and v the reference transverse axis, and turns with angular
// velocity -helicity * omega as time advances.
inline PhotonTensor make_photon_tensor(const Vec3& k, int helicity, double omega,
                                       double phase = 0.0, double time = 0.0) {
  require_unit(k, "propagation direction k");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (helicity != 1 && helicity != -1) {
    throw std::invalid_argument("helicity must be +1 or -1");
  }
  const Vec3 khat = k.normalized();
  const Vec3 v = reference_transverse_axis(khat);
  const Vec3 u = v.cross(khat);
  const double angle = phase - helicity * omega * time;
  const Vec3 ehat = std::cos(angle) * u + std::sin(angle) * v;
  const AntisymTensor f{omega * ehat, omega * khat.cross(ehat)};
  return PhotonTensor::validated(f, khat, helicity);
}

}  // namespace photon
