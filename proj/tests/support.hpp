#pragma once

#include <photon/photon.hpp>

#include <random>

// Deterministic generators shared by the property-style tests.
namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed0123u) {
  return std::mt19937_64{seed};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline photon::Vec3 random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  photon::Vec3 v;
  do {
    v = photon::Vec3(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

inline photon::Rotation random_rotation(std::mt19937_64& rng) {
  return photon::Rotation::axis_angle(random_unit_vector(rng),
                                      uniform(rng, -photon::kPi, photon::kPi));
}

inline photon::Vec3 random_beta(std::mt19937_64& rng, double max_speed = 0.9) {
  return uniform(rng, 0.0, max_speed) * random_unit_vector(rng);
}

inline photon::CVec3 random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return {photon::Complex(gauss(rng), gauss(rng)), photon::Complex(gauss(rng), gauss(rng)),
          photon::Complex(gauss(rng), gauss(rng))};
}

inline int random_helicity(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1 : -1;
}

}  // namespace testutil
