#pragma once

#include "photon/field.hpp"
#include "photon/fourier.hpp"

#include <vector>

namespace photon {

// Hamiltonian in the momentum representation: (H psi)(p) = i p x psi(p),
// i.e. |p| times the helicity operator khat.S. The p = 0 node is annihilated.
inline SpinorField apply_hamiltonian(const SpinorField& psi) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("apply_hamiltonian requires the momentum representation");
  }
  const MomentumGrid& g = psi.grid();
  SpinorField out(g, Representation::momentum);
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        const CVec3 v = psi.value(idx);
        if (v.squaredNorm() == 0.0) continue;
        out.set_value(idx, kImag * cross(g.node(i, j, l), v));
      }
    }
  }
  return out;
}

// Curl of a position-representation field, computed spectrally: transform to
// momentum space, multiply by i p x, transform back. Exact for band-limited
// fields, which every field on this grid is.
inline SpinorField spectral_curl(const SpinorField& psi) {
  if (psi.representation() != Representation::position) {
    throw std::invalid_argument("spectral_curl requires the position representation");
  }
  return to_position(apply_hamiltonian(to_momentum(psi)));
}

// Remove the longitudinal part khat (khat . psi) at every node and zero the
// origin node, leaving a strictly transverse state.
inline SpinorField project_transverse(const SpinorField& psi) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("project_transverse requires the momentum representation");
  }
  const MomentumGrid& g = psi.grid();
  SpinorField out = psi;
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        if (idx == g.origin_index()) {
          out.set_value(idx, CVec3::Zero());
          continue;
        }
        const CVec3 v = psi.value(idx);
        if (v.squaredNorm() == 0.0) continue;
        const Vec3 p = g.node(i, j, l);
        const CVec3 kc = (p / p.norm()).cast<Complex>();
        out.set_value(idx, v - kc.dot(v) * kc);
      }
    }
  }
  return out;
}

namespace detail {

// Per-node data for the closed-form propagator exp(-i t |p| khat.S):
//   U psi = psi + sin(theta) khat x psi - (1 - cos(theta)) (psi - khat (khat.psi))
// with theta = t |p|, from (khat.S)^3 = khat.S. Helicity eigenstates pick up
// the phases exp(-+ i theta); the longitudinal part is left alone.
struct PropagatorTable {
  std::vector<double> sin_theta;
  std::vector<double> one_minus_cos;
  std::vector<Vec3> khat;

  PropagatorTable(const MomentumGrid& g, double t) {
    const std::size_t sz = g.size();
    sin_theta.resize(sz);
    one_minus_cos.resize(sz);
    khat.resize(sz);
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          const std::size_t idx = g.index(i, j, l);
          const Vec3 p = g.node(i, j, l);
          const double pm = p.norm();
          if (pm == 0.0) {
            sin_theta[idx] = 0.0;
            one_minus_cos[idx] = 0.0;
            khat[idx] = Vec3::Zero();
            continue;
          }
          const double theta = t * pm;
          sin_theta[idx] = std::sin(theta);
          one_minus_cos[idx] = 1.0 - std::cos(theta);
          khat[idx] = p / pm;
        }
      }
    }
  }

  void apply(SpinorField& psi) const {
    const std::size_t sz = psi.grid().size();
    for (std::size_t idx = 0; idx < sz; ++idx) {
      const CVec3 v = psi.value(idx);
      if (v.squaredNorm() == 0.0) continue;
      const CVec3 kc = khat[idx].cast<Complex>();
      const CVec3 rotated = v + sin_theta[idx] * cross(khat[idx], v) -
                            one_minus_cos[idx] * (v - kc.dot(v) * kc);
      psi.set_value(idx, rotated);
    }
  }
};

}  // namespace detail

// One exact application of the unitary propagator over a signed time span.
inline SpinorField propagate(const SpinorField& psi, double time) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("propagate requires the momentum representation");
  }
  if (!std::isfinite(time)) throw std::invalid_argument("time must be finite");
  SpinorField out = psi;
  detail::PropagatorTable(psi.grid(), time).apply(out);
  return out;
}

struct EvolutionConfig {
  double dt;
  int steps;
  bool project_transverse = false;
};

// Repeated exact stepping. Each step applies the same per-node rotation, so
// unitarity holds to rounding regardless of dt or step count.
inline SpinorField evolve(const SpinorField& psi, const EvolutionConfig& cfg) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("evolve requires the momentum representation");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw std::invalid_argument("dt must be positive and finite");
  }
  if (cfg.steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (std::abs(psi.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("evolve expects a unit-norm state");
  }
  const detail::PropagatorTable table(psi.grid(), cfg.dt);
  SpinorField state = psi;
  for (int s = 0; s < cfg.steps; ++s) {
    table.apply(state);
    if (cfg.project_transverse) state = project_transverse(state);
  }
  return state;
}

// Residual ||(H - helicity * energy) psi|| / ||psi|| for a thin-shell
// helicity eigenstate of mean |p| = energy and Gaussian radial width
// `shell_width` (defaults to two grid spacings). Stationarity on the grid is
// only approximate: the residual scales with the realizable shell width.
inline double stationary_residual(const MomentumGrid& grid, double energy, int helicity,
                                  double shell_width = -1.0) {
  if (helicity != 1 && helicity != -1) {
    throw std::invalid_argument("helicity must be +1 or -1");
  }
  if (shell_width < 0.0) shell_width = 2.0 * grid.spacing();
  if (!(shell_width > 0.0)) throw std::invalid_argument("shell width must be positive");
  if (!(energy > 2.0 * shell_width) || !(energy < grid.p_max() - 2.0 * shell_width)) {
    throw std::invalid_argument("energy must sit well inside (0, p_max)");
  }
  SpinorField psi(grid, Representation::momentum);
  const int n = grid.n();
  const double inv4w2 = 1.0 / (4.0 * shell_width * shell_width);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = grid.index(i, j, l);
        if (idx == grid.origin_index()) continue;
        const Vec3 p = grid.node(i, j, l);
        const double pm = p.norm();
        const double amp = std::exp(-(pm - energy) * (pm - energy) * inv4w2);
        if (amp == 0.0) continue;
        const HelicityBasis basis = helicity_basis(p / pm);
        psi.set_value(idx, amp * (helicity > 0 ? basis.chi_plus : basis.chi_minus));
      }
    }
  }
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::domain_error("shell state vanished on this grid");
  const SpinorField hpsi = apply_hamiltonian(psi);
  double residual2 = 0.0;
  const double target = helicity * energy;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    residual2 += (hpsi.value(idx) - target * psi.value(idx)).squaredNorm();
  }
  return std::sqrt(residual2 * grid.cell_volume()) / norm;
}

}  // namespace photon
