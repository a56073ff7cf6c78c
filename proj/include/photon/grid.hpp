#pragma once

#include "photon/vec.hpp"

#include <cstddef>

namespace photon {

// Uniform cubic momentum grid with an even number n of nodes per axis at
// p_j = (j - n/2) dp, dp = 2 p_max / n, so the origin sits exactly on node
// n/2. Its Fourier-conjugate position grid has spacing dr = 2 pi / (n dp)
// and the same indexing; dp dr n = 2 pi makes the discrete transform unitary.
class MomentumGrid {
 public:
  MomentumGrid(int nodes_per_axis, double p_max) : n_(nodes_per_axis), p_max_(p_max) {
    if (n_ < 8 || n_ % 2 != 0) {
      throw std::invalid_argument("nodes per axis must be even and at least 8");
    }
    if (!(p_max > 0.0) || !std::isfinite(p_max)) {
      throw std::invalid_argument("p_max must be positive and finite");
    }
    dp_ = 2.0 * p_max_ / n_;
    dr_ = 2.0 * kPi / (n_ * dp_);
  }

  int n() const { return n_; }
  double p_max() const { return p_max_; }
  double spacing() const { return dp_; }
  double position_spacing() const { return dr_; }
  std::size_t size() const {
    const auto m = static_cast<std::size_t>(n_);
    return m * m * m;
  }

  double coord(int j) const { return (j - n_ / 2) * dp_; }
  double position_coord(int m) const { return (m - n_ / 2) * dr_; }

  Vec3 node(int i, int j, int l) const { return {coord(i), coord(j), coord(l)}; }
  Vec3 position_node(int i, int j, int l) const {
    return {position_coord(i), position_coord(j), position_coord(l)};
  }

  // Row-major flattening, last axis fastest.
  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }
  std::size_t origin_index() const { return index(n_ / 2, n_ / 2, n_ / 2); }

  double cell_volume() const { return dp_ * dp_ * dp_; }
  double position_cell_volume() const { return dr_ * dr_ * dr_; }

  bool operator==(const MomentumGrid& other) const {
    return n_ == other.n_ && p_max_ == other.p_max_;
  }

 private:
  int n_;
  double p_max_;
  double dp_;
  double dr_;
};

}  // namespace photon
