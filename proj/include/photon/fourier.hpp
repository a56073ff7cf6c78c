#pragma once

#include "photon/field.hpp"
#include "photon/grid.hpp"

namespace photon {

namespace detail {

// One-axis kernel of the unitary momentum -> position transform,
//   F[m][j] = (dp / sqrt(2 pi)) exp(+i p_j r_m).
// Because dp dr n = 2 pi, the matrix below composed with its inverse kernel
// reproduces the identity exactly (up to rounding): the row phases are n-th
// roots of unity in disguise.
inline Eigen::MatrixXcd momentum_to_position_kernel(const MomentumGrid& g) {
  const int n = g.n();
  const double scale = g.spacing() / std::sqrt(2.0 * kPi);
  Eigen::MatrixXcd f(n, n);
  for (int m = 0; m < n; ++m) {
    const double r = g.position_coord(m);
    for (int j = 0; j < n; ++j) {
      f(m, j) = scale * std::exp(Complex(0.0, g.coord(j) * r));
    }
  }
  return f;
}

// Inverse kernel G[j][m] = (dr / sqrt(2 pi)) exp(-i p_j r_m).
inline Eigen::MatrixXcd position_to_momentum_kernel(const MomentumGrid& g) {
  const int n = g.n();
  const double scale = g.position_spacing() / std::sqrt(2.0 * kPi);
  Eigen::MatrixXcd f(n, n);
  for (int j = 0; j < n; ++j) {
    const double p = g.coord(j);
    for (int m = 0; m < n; ++m) {
      f(j, m) = scale * std::exp(Complex(0.0, -p * g.position_coord(m)));
    }
  }
  return f;
}

// Apply the same n x n kernel along each axis of an n^3 row-major scalar
// field (last index fastest) via three dense matrix products.
inline void apply_along_axes(Eigen::VectorXcd& a, const Eigen::MatrixXcd& f, int n) {
  using MapT = Eigen::Map<Eigen::MatrixXcd>;
  const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
  // Axis 2 (contiguous): columns of an (n x n^2) view.
  MapT m2(a.data(), n, nn);
  m2 = (f * m2).eval();
  // Axis 1: each i-slab is an (n x n) column-major block with rows indexed
  // by axis 2 and columns by axis 1.
  for (int i = 0; i < n; ++i) {
    MapT slab(a.data() + static_cast<Eigen::Index>(i) * nn, n, n);
    slab = (slab * f.transpose()).eval();
  }
  // Axis 0: columns of an (n^2 x n) view.
  MapT m0(a.data(), nn, n);
  m0 = (m0 * f.transpose()).eval();
}

}  // namespace detail

inline SpinorField to_position(const SpinorField& psi) {
  if (psi.representation() != Representation::momentum) {
    throw std::invalid_argument("to_position requires a momentum-representation state");
  }
  const Eigen::MatrixXcd kernel = detail::momentum_to_position_kernel(psi.grid());
  SpinorField out(psi.grid(), Representation::position);
  for (int c = 0; c < 3; ++c) {
    out.component(c) = psi.component(c);
    detail::apply_along_axes(out.component(c), kernel, psi.grid().n());
  }
  return out;
}

inline SpinorField to_momentum(const SpinorField& psi) {
  if (psi.representation() != Representation::position) {
    throw std::invalid_argument("to_momentum requires a position-representation state");
  }
  const Eigen::MatrixXcd kernel = detail::position_to_momentum_kernel(psi.grid());
  SpinorField out(psi.grid(), Representation::momentum);
  for (int c = 0; c < 3; ++c) {
    out.component(c) = psi.component(c);
    detail::apply_along_axes(out.component(c), kernel, psi.grid().n());
  }
  return out;
}

}  // namespace photon
