#pragma once

#include "photon/grid.hpp"
#include "photon/spin.hpp"
#include "photon/vec.hpp"

#include <functional>
#include <utility>

namespace photon {

enum class Representation { momentum, position };

// Three complex components on every grid node: the state of a single photon,
// stored per component for cache-friendly transforms. Inner products carry
// the cell volume of the active representation, so norms are discretized
// integrals rather than bare sums.
class SpinorField {
 public:
  SpinorField(const MomentumGrid& grid, Representation rep) : grid_(grid), rep_(rep) {
    const auto sz = static_cast<Eigen::Index>(grid.size());
    for (auto& c : comps_) c = Eigen::VectorXcd::Zero(sz);
  }

  const MomentumGrid& grid() const { return grid_; }
  Representation representation() const { return rep_; }

  Eigen::VectorXcd& component(int c) { return comps_[c]; }
  const Eigen::VectorXcd& component(int c) const { return comps_[c]; }

  CVec3 value(std::size_t idx) const {
    const auto i = static_cast<Eigen::Index>(idx);
    return {comps_[0][i], comps_[1][i], comps_[2][i]};
  }
  void set_value(std::size_t idx, const CVec3& v) {
    const auto i = static_cast<Eigen::Index>(idx);
    comps_[0][i] = v.x();
    comps_[1][i] = v.y();
    comps_[2][i] = v.z();
  }

  double cell_volume() const {
    return rep_ == Representation::momentum ? grid_.cell_volume()
                                            : grid_.position_cell_volume();
  }

  double squared_norm() const {
    double s = 0.0;
    for (const auto& c : comps_) s += c.squaredNorm();
    return s * cell_volume();
  }
  double norm() const { return std::sqrt(squared_norm()); }

  void normalize() {
    const double n = norm();
    if (!(n > 0.0)) throw std::domain_error("cannot normalize a null state");
    for (auto& c : comps_) c /= n;
  }

 private:
  MomentumGrid grid_;
  Representation rep_;
  std::array<Eigen::VectorXcd, 3> comps_;
};

struct Observables {
  double norm;
  double energy;     // <|H|> per unit norm; the zero-helicity part carries none
  double helicity;   // <khat.S> per unit norm
  Vec3 mean_momentum;
  double transversality_defect;  // weight of longitudinal + zero-momentum content
};

inline Observables observables(const SpinorField& psi) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("observables require the momentum representation");
  }
  const MomentumGrid& g = psi.grid();
  const int n = g.n();
  double norm2 = 0.0;
  double energy = 0.0;
  double helicity = 0.0;
  double defect2 = 0.0;
  Vec3 mean_p = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        const CVec3 v = psi.value(idx);
        const double w = v.squaredNorm();
        if (w == 0.0) continue;
        norm2 += w;
        const Vec3 p = g.node(i, j, l);
        if (idx == g.origin_index()) {
          defect2 += w;  // no direction at p = 0: all of it is defect
          continue;
        }
        const double pm = p.norm();
        const Vec3 khat = p / pm;
        const CVec3 kc = khat.cast<Complex>();
        const Complex longitudinal = kc.dot(v);  // conjugate-linear in kc (real)
        const double wl = std::norm(longitudinal);
        defect2 += wl;
        energy += pm * (w - wl);
        helicity += v.dot(kImag * cross(khat, v)).real();
        mean_p += w * p;
      }
    }
  }
  const double vol = g.cell_volume();
  norm2 *= vol;
  if (!(norm2 > 0.0)) throw std::domain_error("null state has no observables");
  return {std::sqrt(norm2), energy * vol / norm2, helicity * vol / norm2,
          mean_p * vol / norm2, std::sqrt(defect2 * vol / norm2)};
}

// Helicity eigenstate with a Gaussian momentum profile
// exp(-(p - p0)^2 / (4 sigma^2)) centered away from the origin, normalized.
inline SpinorField gaussian_packet(const MomentumGrid& grid, const Vec3& p0, double sigma,
                                   int helicity) {
  require_finite(p0, "p0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (helicity != 1 && helicity != -1) {
    throw std::invalid_argument("helicity must be +1 or -1");
  }
  if (p0.norm() <= 3.0 * sigma) {
    throw std::invalid_argument("packet overlaps the momentum origin: |p0| must exceed 3 sigma");
  }
  if (p0.cwiseAbs().maxCoeff() >= grid.p_max()) {
    throw std::invalid_argument("p0 lies outside the grid");
  }
  SpinorField psi(grid, Representation::momentum);
  const int n = grid.n();
  const double inv4s2 = 1.0 / (4.0 * sigma * sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = grid.index(i, j, l);
        if (idx == grid.origin_index()) continue;
        const Vec3 p = grid.node(i, j, l);
        const double amp = std::exp(-(p - p0).squaredNorm() * inv4s2);
        if (amp == 0.0) continue;
        const HelicityBasis basis = helicity_basis(p / p.norm());
        psi.set_value(idx, amp * (helicity > 0 ? basis.chi_plus : basis.chi_minus));
      }
    }
  }
  psi.normalize();
  return psi;
}

// General superposition from an envelope c(p) and helicity amplitudes
// alpha(p), beta(p): psi(p) = c(p) (alpha chi_plus + beta chi_minus).
inline SpinorField general_state(const MomentumGrid& grid,
                                 const std::function<Complex(const Vec3&)>& envelope,
                                 const std::function<Complex(const Vec3&)>& alpha,
                                 const std::function<Complex(const Vec3&)>& beta) {
  SpinorField psi(grid, Representation::momentum);
  const int n = grid.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = grid.index(i, j, l);
        if (idx == grid.origin_index()) continue;
        const Vec3 p = grid.node(i, j, l);
        const Complex c = envelope(p);
        const Complex a = alpha(p);
        const Complex b = beta(p);
        if (!std::isfinite(std::abs(c)) || !std::isfinite(std::abs(a)) ||
            !std::isfinite(std::abs(b))) {
          throw std::invalid_argument("state amplitudes must be finite");
        }
        if (c == 0.0 || (a == 0.0 && b == 0.0)) continue;
        const HelicityBasis basis = helicity_basis(p / p.norm());
        psi.set_value(idx, c * (a * basis.chi_plus + b * basis.chi_minus));
      }
    }
  }
  psi.normalize();
  return psi;
}

}  // namespace photon
