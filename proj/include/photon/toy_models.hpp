#pragma once

#include "photon/quadrature.hpp"
#include "photon/vec.hpp"

#include <functional>
#include <vector>

namespace photon {

// Rigidly rotating energy distributions: classical toys tuned so that total
// energy omega0 and total angular momentum 1 coexist (hbar = c = 1). Every
// mass element at radius r moves on a circle with the speed profile below,
// which stays below c at all radii.
inline double omega_profile(double r, double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  const double x = omega0 * r;
  return omega0 / std::sqrt(x * x + 1.0);
}

inline double velocity_profile(double r, double omega0) {
  return r * omega_profile(r, omega0);
}

// Relativistic velocity composition along one line: (v + dv) / (1 + v dv).
inline double relativistic_step(double v, double dv) {
  if (!(std::abs(v) < 1.0) || !(std::abs(dv) < 1.0)) {
    throw std::invalid_argument("speeds must be below 1");
  }
  return (v + dv) / (1.0 + v * dv);
}

// Planar distribution: energy per unit area epsilon(r) on r_min <= r <= r_max,
// spinning with the omega0 profile.
struct RadialDistribution {
  std::function<double(double)> epsilon;
  double r_min;
  double r_max;
  double omega0;
};

// One-dimensional distribution: energy per unit length epsilon(x) on
// |x| <= half_length, rotating about its center.
struct LinearDistribution {
  std::function<double(double)> epsilon;
  double half_length;
  double omega0;
};

struct EnergySpin {
  double energy;
  double spin;
};

namespace detail {

inline void check_radial(const RadialDistribution& d) {
  if (!d.epsilon) throw std::invalid_argument("distribution has no density");
  if (!(d.omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(d.r_min >= 0.0) || !(d.r_max > d.r_min) || !std::isfinite(d.r_max)) {
    throw std::invalid_argument("distribution support must satisfy 0 <= r_min < r_max < inf");
  }
}

inline void check_linear(const LinearDistribution& d) {
  if (!d.epsilon) throw std::invalid_argument("distribution has no density");
  if (!(d.omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(d.half_length > 0.0) || !std::isfinite(d.half_length)) {
    throw std::invalid_argument("distribution half length must be positive and finite");
  }
}

}  // namespace detail

// E = Int 2 pi r eps(r) dr, S = omega0 Int 2 pi r^3 eps(r) dr. The second
// form uses gamma(r) v(r) = omega0 r, an exact identity of the speed profile,
// which turns the momentum carried per unit of eps into omega0 r.
inline EnergySpin energy_and_spin(const RadialDistribution& d, double rel_tol = 1e-10) {
  detail::check_radial(d);
  const double two_pi = 2.0 * kPi;
  const double energy =
      integrate([&](double r) { return two_pi * r * d.epsilon(r); }, d.r_min, d.r_max, rel_tol);
  const double spin =
      d.omega0 * integrate([&](double r) { return two_pi * r * r * r * d.epsilon(r); },
                           d.r_min, d.r_max, rel_tol);
  return {energy, spin};
}

inline EnergySpin energy_and_spin(const LinearDistribution& d, double rel_tol = 1e-10) {
  detail::check_linear(d);
  const double energy =
      integrate([&](double x) { return d.epsilon(x); }, -d.half_length, d.half_length, rel_tol);
  const double spin =
      d.omega0 * integrate([&](double x) { return x * x * d.epsilon(x); }, -d.half_length,
                           d.half_length, rel_tol);
  return {energy, spin};
}

// The three reference models. Each is normalized analytically so that
// E = omega0 and S = 1 exactly; the quadrature in energy_and_spin is an
// independent check of those constants, not their source.

// Uniform disk: eps = omega0^3 / (2 pi) out to R = sqrt(2) / omega0.
inline RadialDistribution make_disk(double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  const double eps = omega0 * omega0 * omega0 / (2.0 * kPi);
  return {[eps](double) { return eps; }, 0.0, std::sqrt(2.0) / omega0, omega0};
}

// Hollow ring with eps = K / r^3 between R1 = (sqrt(k^2+1) - k) / omega0 and
// R2 = R1 + 2 k / omega0, K = 1 / (4 pi k). The bounds satisfy
// R1 R2 = 1 / omega0^2, which is what fixes E = omega0 and S = 1.
inline RadialDistribution make_ring(double omega0, double k) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("ring width parameter k must be positive");
  }
  const double r1 = (std::sqrt(k * k + 1.0) - k) / omega0;
  const double r2 = r1 + 2.0 * k / omega0;
  const double amp = 1.0 / (4.0 * kPi * k);
  return {[amp](double r) { return amp / (r * r * r); }, r1, r2, omega0};
}

// Uniform rotating string: eps = omega0^2 / (2 sqrt(3)), |x| <= sqrt(3)/omega0.
inline LinearDistribution make_string(double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  const double eps = omega0 * omega0 / (2.0 * std::sqrt(3.0));
  return {[eps](double) { return eps; }, std::sqrt(3.0) / omega0, omega0};
}

// Geometric cross sections of the supports.
inline double cross_section(const RadialDistribution& d) {
  detail::check_radial(d);
  return kPi * (d.r_max * d.r_max - d.r_min * d.r_min);
}

inline double cross_section(const LinearDistribution& d) {
  detail::check_linear(d);
  return 2.0 * d.half_length;
}

enum class ToyModel { disk, ring, string };

struct ScalingPoint {
  double omega0;
  double energy;   // measured by quadrature
  double sigma_t;  // geometric cross section
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  double slope;  // d ln(sigma_t) / d ln(E), least-squares over the points
};

inline double loglog_slope(const std::vector<ScalingPoint>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("need at least two points for a slope");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& p : pts) {
    if (!(p.energy > 0.0) || !(p.sigma_t > 0.0)) {
      throw std::invalid_argument("scaling points must be positive");
    }
    const double x = std::log(p.energy);
    const double y = std::log(p.sigma_t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw std::invalid_argument("scaling points are degenerate");
  return (m * sxy - sx * sy) / denom;
}

// sigma_T versus measured E across frequencies. Surfaces scale as E^-2,
// the string length as E^-1.
inline ScalingResult cross_section_scaling(ToyModel model, const std::vector<double>& omega0s,
                                           double ring_k = 1.0) {
  if (omega0s.size() < 2) throw std::invalid_argument("need at least two frequencies");
  ScalingResult result;
  result.points.reserve(omega0s.size());
  for (const double w : omega0s) {
    double energy = 0.0;
    double sigma = 0.0;
    switch (model) {
      case ToyModel::disk: {
        const auto d = make_disk(w);
        energy = energy_and_spin(d, 1e-14).energy;
        sigma = cross_section(d);
        break;
      }
      case ToyModel::ring: {
        const auto d = make_ring(w, ring_k);
        energy = energy_and_spin(d, 1e-14).energy;
        sigma = cross_section(d);
        break;
      }
      case ToyModel::string: {
        const auto d = make_string(w);
        energy = energy_and_spin(d, 1e-14).energy;
        sigma = cross_section(d);
        break;
      }
    }
    result.points.push_back({w, energy, sigma});
  }
  result.slope = loglog_slope(result.points);
  return result;
}

struct CalibratedShape {
  double amplitude;     // A multiplying the raw profile
  double radius_scale;  // rho stretching its argument
  RadialDistribution distribution;
};

// Rescale an arbitrary non-negative radial profile s(r) into a distribution
// A s(r / rho) with E = omega0 and S = 1. Writing the raw moments
// m1 = Int 2 pi r s dr and m3 = Int 2 pi r^3 s dr, the unique solution is
// rho = sqrt(m1 / m3) / omega0 and A = omega0^3 m3 / m1^2.
inline CalibratedShape calibrate_scale(const RadialDistribution& shape, double omega0) {
  detail::check_radial(shape);
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  const double two_pi = 2.0 * kPi;
  const double m1 =
      integrate([&](double r) { return two_pi * r * shape.epsilon(r); }, shape.r_min,
                shape.r_max, 1e-12);
  const double m3 =
      integrate([&](double r) { return two_pi * r * r * r * shape.epsilon(r); }, shape.r_min,
                shape.r_max, 1e-12);
  if (!(m1 > 0.0) || !(m3 > 0.0)) {
    throw std::invalid_argument("shape must have positive first and third moments");
  }
  const double rho = std::sqrt(m1 / m3) / omega0;
  const double amp = omega0 * omega0 * omega0 * m3 / (m1 * m1);
  RadialDistribution scaled{
      [profile = shape.epsilon, amp, rho](double r) { return amp * profile(r / rho); },
      shape.r_min * rho, shape.r_max * rho, omega0};
  return {amp, rho, std::move(scaled)};
}

struct ToyModelReport {
  double omega0;
  double energy;
  double spin;
  double sigma_t;
  double rel_err_energy;  // |E - omega0| / omega0
  double rel_err_spin;    // |S - 1|
};

template <class Distribution>
ToyModelReport toy_model_report(const Distribution& d) {
  const EnergySpin es = energy_and_spin(d);
  return {d.omega0,
          es.energy,
          es.spin,
          cross_section(d),
          std::abs(es.energy - d.omega0) / d.omega0,
          std::abs(es.spin - 1.0)};
}

}  // namespace photon
