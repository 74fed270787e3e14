// Copyright 2026 The hjba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HJBA_GRID3_HPP_
#define HJBA_GRID3_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hjba/errors.hpp"
#include "hjba/pose.hpp"

namespace hjba {

/// Node-centered discretization of (x, y, theta). The theta axis spans
/// exactly [-pi, pi) and wraps (index n_theta aliases index 0); x and y are
/// node-centered with the endpoints included. Layout is flat row-major with
/// theta fastest-varying.
struct Grid3 {
  std::array<double, 3> lo{-1.0, -1.0, -kPi};
  std::array<double, 3> hi{1.0, 1.0, kPi};
  std::array<int, 3> n{3, 3, 3};

  static Grid3 make(double x_lo, double x_hi, double y_lo, double y_hi,
                    int nx, int ny, int ntheta) {
    Grid3 g;
    g.lo = {x_lo, y_lo, -kPi};
    g.hi = {x_hi, y_hi, kPi};
    g.n = {nx, ny, ntheta};
    g.validate();
    return g;
  }

  void validate() const {
    for (int a = 0; a < 3; ++a) {
      if (n[a] < 3) throw ValidationError("grid: need at least 3 nodes per axis");
      if (!(hi[a] > lo[a])) throw ValidationError("grid: hi must exceed lo");
    }
  }

  double spacing(int axis) const {
    // Periodic theta: n cells cover the full circle; x, y: n - 1 intervals.
    return axis == 2 ? (hi[2] - lo[2]) / n[2]
                     : (hi[axis] - lo[axis]) / (n[axis] - 1);
  }

  std::int64_t size() const {
    return static_cast<std::int64_t>(n[0]) * n[1] * n[2];
  }

  std::int64_t flat(int i, int j, int k) const {
    return (static_cast<std::int64_t>(i) * n[1] + j) * n[2] + k;
  }

  std::array<int, 3> unflat(std::int64_t f) const {
    const int k = static_cast<int>(f % n[2]);
    f /= n[2];
    const int j = static_cast<int>(f % n[1]);
    const int i = static_cast<int>(f / n[1]);
    return {i, j, k};
  }

  double coord(int axis, int idx) const { return lo[axis] + spacing(axis) * idx; }

  Pose cell_center(int i, int j, int k) const {
    return Pose(coord(0, i), coord(1, j), coord(2, k));
  }

  Pose cell_center(std::int64_t f) const {
    const auto [i, j, k] = unflat(f);
    return cell_center(i, j, k);
  }

  bool in_bounds_xy(double x, double y) const {
    return x >= lo[0] - 1e-9 && x <= hi[0] + 1e-9 && y >= lo[1] - 1e-9 &&
           y <= hi[1] + 1e-9;
  }

  int wrap_theta_index(int k) const {
    const int m = n[2];
    return ((k % m) + m) % m;
  }

  /// Nearest cell index for a pose; theta wrapped modulo 2*pi first.
  /// Throws OutOfBoundsError if (x, y) is outside the grid.
  std::array<int, 3> state_to_index(const Pose& p) const {
    if (!in_bounds_xy(p.x, p.y)) {
      throw OutOfBoundsError("state_to_index: (x, y) outside grid");
    }
    const auto nearest = [&](int axis, double v) {
      const int idx =
          static_cast<int>(std::lround((v - lo[axis]) / spacing(axis)));
      return std::clamp(idx, 0, n[axis] - 1);
    };
    const double t = wrap_angle(p.theta);
    int k = static_cast<int>(std::lround((t - lo[2]) / spacing(2)));
    k = wrap_theta_index(k);
    return {nearest(0, p.x), nearest(1, p.y), k};
  }

  bool operator==(const Grid3& o) const {
    return lo == o.lo && hi == o.hi && n == o.n;
  }
};

/// Scalar samples over a Grid3.
struct ValueField {
  Grid3 grid;
  std::vector<double> values;

  static ValueField zeros(const Grid3& g) {
    ValueField f;
    f.grid = g;
    f.values.assign(static_cast<std::size_t>(g.size()), 0.0);
    return f;
  }

  double at(int i, int j, int k) const {
    return values[static_cast<std::size_t>(grid.flat(i, j, k))];
  }
  double& at(int i, int j, int k) {
    return values[static_cast<std::size_t>(grid.flat(i, j, k))];
  }

  /// Trilinear interpolation with theta wraparound; exact at grid nodes.
  /// Throws OutOfBoundsError if (x, y) is outside the grid.
  double interpolate(const Pose& p) const {
    if (!grid.in_bounds_xy(p.x, p.y)) {
      throw OutOfBoundsError("interpolate: (x, y) outside grid");
    }
    const auto lerp_cell = [&](int axis, double v, int& i0, double& f) {
      const double s = grid.spacing(axis);
      double u = (v - grid.lo[axis]) / s;
      i0 = static_cast<int>(std::floor(u));
      i0 = std::clamp(i0, 0, grid.n[axis] - 2);
      f = std::clamp(u - i0, 0.0, 1.0);
    };
    int i0, j0;
    double fx, fy;
    lerp_cell(0, p.x, i0, fx);
    lerp_cell(1, p.y, j0, fy);

    const double s = grid.spacing(2);
    const double t = wrap_angle(p.theta);
    double u = (t - grid.lo[2]) / s;
    int k0 = static_cast<int>(std::floor(u));
    const double ft = u - k0;
    k0 = grid.wrap_theta_index(k0);
    const int k1 = grid.wrap_theta_index(k0 + 1);

    double acc = 0.0;
    for (int di = 0; di < 2; ++di) {
      for (int dj = 0; dj < 2; ++dj) {
        for (int dk = 0; dk < 2; ++dk) {
          const double w = (di ? fx : 1.0 - fx) * (dj ? fy : 1.0 - fy) *
                           (dk ? ft : 1.0 - ft);
          acc += w * at(i0 + di, j0 + dj, dk ? k1 : k0);
        }
      }
    }
    return acc;
  }
};

/// Visits cells [begin, end) of the flat index space in order.
template <class Fn>
void for_each_cell_range(const Grid3& g, std::int64_t begin, std::int64_t end,
                         Fn&& fn) {
  for (std::int64_t f = begin; f < end; ++f) {
    const auto [i, j, k] = g.unflat(f);
    fn(i, j, k, f);
  }
}

/// Visits every cell exactly once in deterministic (flat index) order.
template <class Fn>
void for_each_cell(const Grid3& g, Fn&& fn) {
  for_each_cell_range(g, 0, g.size(), fn);
}

}  // namespace hjba

#endif  // HJBA_GRID3_HPP_
