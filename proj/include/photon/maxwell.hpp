#pragma once

#include "photon/evolve.hpp"
#include "photon/field.hpp"
#include "photon/fourier.hpp"

namespace photon {

struct MaxwellResiduals {
  double curl_e;  // || -curl E - dB/dt || / max(||curl E||, ||dB/dt||)
  double curl_b;  // ||  curl B - dE/dt || / max(||curl B||, ||dE/dt||)
  double div_e;   // || p . E~ || / || |p| E~ ||
  double div_b;   // likewise for B
};

namespace detail {

inline SpinorField real_part(const SpinorField& pos) {
  SpinorField out(pos.grid(), Representation::position);
  for (int c = 0; c < 3; ++c) out.component(c) = pos.component(c).real().cast<Complex>();
  return out;
}

inline SpinorField imag_part(const SpinorField& pos) {
  SpinorField out(pos.grid(), Representation::position);
  for (int c = 0; c < 3; ++c) out.component(c) = pos.component(c).imag().cast<Complex>();
  return out;
}

}  // namespace detail

// Reads the real and imaginary parts of a position-representation state as a
// field pair (E, B) = (Re psi, Im psi) and measures how well they satisfy
//   -curl E = dB/dt,   curl B = dE/dt,   div E = div B = 0.
// Time derivatives come from exact evolution over +-dt (central difference,
// so the curl residuals shrink as O(dt^2)); spatial derivatives are spectral.
// All norms are evaluated in the momentum representation, where the unitary
// transform makes them equal to their position-space counterparts.
//
// This is a numerical correspondence between equation sets, nothing more:
// psi stays a probability amplitude, and (E, B) read off this way carry no
// local energy density. See the README for the caveats.
inline MaxwellResiduals maxwell_residual(const SpinorField& psi, double dt) {
  if (psi.representation() != Representation::position) {
    throw std::invalid_argument("maxwell_residual requires the position representation");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt must be positive and finite");
  }
  const MomentumGrid& g = psi.grid();
  const SpinorField psi_mom = to_momentum(psi);
  if (observables(psi_mom).transversality_defect > 1e-6) {
    throw std::invalid_argument("state is not transverse: defect exceeds 1e-6");
  }

  // E, B and their central-difference time derivatives, all momentum side.
  const SpinorField e_mom = to_momentum(detail::real_part(psi));
  const SpinorField b_mom = to_momentum(detail::imag_part(psi));
  const SpinorField psi_fwd = to_position(propagate(psi_mom, dt));
  const SpinorField psi_bwd = to_position(propagate(psi_mom, -dt));
  SpinorField de_pos(g, Representation::position);
  SpinorField db_pos(g, Representation::position);
  for (int c = 0; c < 3; ++c) {
    de_pos.component(c) =
        ((psi_fwd.component(c).real() - psi_bwd.component(c).real()) / (2.0 * dt))
            .cast<Complex>();
    db_pos.component(c) =
        ((psi_fwd.component(c).imag() - psi_bwd.component(c).imag()) / (2.0 * dt))
            .cast<Complex>();
  }
  const SpinorField de_mom = to_momentum(de_pos);
  const SpinorField db_mom = to_momentum(db_pos);

  const int n = g.n();
  double curl_e_resid2 = 0.0, curl_b_resid2 = 0.0;
  double curl_e2 = 0.0, curl_b2 = 0.0, de2 = 0.0, db2 = 0.0;
  double div_e2 = 0.0, div_b2 = 0.0, scaled_e2 = 0.0, scaled_b2 = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        const Vec3 pr = g.node(i, j, l);
        const CVec3 p = pr.cast<Complex>();
        const CVec3 ev = e_mom.value(idx);
        const CVec3 bv = b_mom.value(idx);
        const CVec3 dev = de_mom.value(idx);
        const CVec3 dbv = db_mom.value(idx);
        const CVec3 curl_e = kImag * cross(pr, ev);
        const CVec3 curl_b = kImag * cross(pr, bv);
        curl_e2 += curl_e.squaredNorm();
        curl_b2 += curl_b.squaredNorm();
        de2 += dev.squaredNorm();
        db2 += dbv.squaredNorm();
        curl_e_resid2 += (-curl_e - dbv).squaredNorm();
        curl_b_resid2 += (curl_b - dev).squaredNorm();
        div_e2 += std::norm(p.dot(ev));
        div_b2 += std::norm(p.dot(bv));
        scaled_e2 += p.squaredNorm() * ev.squaredNorm();
        scaled_b2 += p.squaredNorm() * bv.squaredNorm();
      }
    }
  }
  const auto rel = [](double resid2, double a2, double b2) {
    const double scale = std::sqrt(std::max(a2, b2));
    if (scale == 0.0) return std::sqrt(resid2);
    return std::sqrt(resid2) / scale;
  };
  const auto rel_div = [](double resid2, double scaled2) {
    if (scaled2 == 0.0) return std::sqrt(resid2);
    return std::sqrt(resid2 / scaled2);
  };
  return {rel(curl_e_resid2, curl_e2, db2), rel(curl_b_resid2, curl_b2, de2),
          rel_div(div_e2, scaled_e2), rel_div(div_b2, scaled_b2)};
}

}  // namespace photon
