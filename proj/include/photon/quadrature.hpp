#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace photon {

// Adaptive Gauss-Kronrod (G7, K15) integration on [a, b] to a relative
// tolerance. Thin wrapper so callers never touch the backend directly.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integration bounds must be finite and ordered");
  }
  if (!(rel_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (a == b) return 0.0;
  const double value = ::boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, 15, rel_tol);
  if (!std::isfinite(value)) {
    throw std::domain_error("integrand is not integrable on the given interval");
  }
  return value;
}

}  // namespace photon
