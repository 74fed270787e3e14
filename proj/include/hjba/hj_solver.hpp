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

#ifndef HJBA_HJ_SOLVER_HPP_
#define HJBA_HJ_SOLVER_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <utility>
#include <vector>

#include "hjba/errors.hpp"
#include "hjba/grid3.hpp"
#include "hjba/parallel.hpp"
#include "hjba/pose.hpp"
#include "hjba/vehicle.hpp"

namespace hjba {

/// Unicycle with fixed speed magnitude and bounded turn rate.
struct DubinsParams {
  double speed = 1.0;      // m/s
  double omega_max = 1.0;  // rad/s
  bool allow_reverse = true;

  /// Ties the turn rate to the vehicle's minimum turning radius.
  static DubinsParams from_vehicle(const VehicleGeometry& geom,
                                   double speed = 1.0,
                                   bool allow_reverse = true) {
    DubinsParams p;
    p.speed = speed;
    p.omega_max = speed * std::tan(geom.max_steer) / geom.wheelbase;
    p.allow_reverse = allow_reverse;
    return p;
  }

  void validate() const {
    if (!(speed > 0.0)) throw ValidationError("dubins: speed must be > 0");
    if (!(omega_max > 0.0)) throw ValidationError("dubins: omega_max must be > 0");
  }
};

/// Box of tolerated deviation around the parking goal pose.
struct GoalSet {
  Pose center;
  double eps_x = 0.25;      // m
  double eps_y = 0.25;      // m
  double eps_theta = 5.0 * kPi / 180.0;  // rad

  void validate() const {
    if (!(eps_x > 0.0 && eps_y > 0.0 && eps_theta > 0.0)) {
      throw ValidationError("goal set: half widths must be > 0");
    }
  }
};

struct SolverOptions {
  double cfl = 0.5;
  double tol = 1e-4;          // max per-step node change for convergence
  double max_horizon = 120.0; // s
  int threads = 1;
  std::vector<double> checkpoints;  // horizons at which to snapshot the field
};

struct BrtResult {
  ValueField field;
  double horizon = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<std::pair<double, ValueField>> checkpoint_fields;
};

/// Scaled box distance to the goal set: negative strictly inside the
/// tolerance box, zero on its boundary, positive outside. The theta
/// component is wrapped. Scaled by min(eps) so the values stay meters-like.
inline ValueField goal_level_set(const Grid3& grid, const GoalSet& goal) {
  goal.validate();
  if (!grid.in_bounds_xy(goal.center.x, goal.center.y)) {
    throw OutOfBoundsError("goal_level_set: goal center outside grid");
  }
  const double scale = std::min({goal.eps_x, goal.eps_y, goal.eps_theta});
  ValueField f = ValueField::zeros(grid);
  for_each_cell(grid, [&](int i, int j, int k, std::int64_t flat) {
    const double dx = std::abs(grid.coord(0, i) - goal.center.x) / goal.eps_x;
    const double dy = std::abs(grid.coord(1, j) - goal.center.y) / goal.eps_y;
    const double dt =
        std::abs(angle_diff(grid.coord(2, k), goal.center.theta)) /
        goal.eps_theta;
    f.values[static_cast<std::size_t>(flat)] =
        (std::max({dx, dy, dt}) - 1.0) * scale;
  });
  return f;
}

/// Optimal-control Hamiltonian min_u <grad, f(z, u)> for the unicycle.
/// With a = p_x v cos(theta) + p_y v sin(theta):
/// forward-only gives a - omega_max |p_theta|; with reverse allowed the
/// speed sign is also minimized over, giving -|a| - omega_max |p_theta|.
inline double hamiltonian(double pose_theta, double grad_x, double grad_y,
                          double grad_theta, const DubinsParams& params) {
  const double a = params.speed *
                   (grad_x * std::cos(pose_theta) + grad_y * std::sin(pose_theta));
  const double turn = params.omega_max * std::abs(grad_theta);
  return (params.allow_reverse ? -std::abs(a) : a) - turn;
}

/// Integrates the value function backward in time with a Lax-Friedrichs
/// numerical Hamiltonian (central differences plus dissipation
/// alpha = (v, v, omega_max)), explicit CFL-limited steps, and the
/// variational min applied after each step:
///   V <- min(V_stepped, V_previous),   V(., T) = l(.)
/// Stops when the max node change per step drops below opts.tol or the
/// horizon is reached. The zero-sublevel set of the result is the backward
/// reachable tube. Throws DivergedError if any value becomes non-finite.
inline BrtResult solve_brt_from_level_set(ValueField initial,
                                          const DubinsParams& params,
                                          const SolverOptions& opts) {
  params.validate();
  const Grid3& grid = initial.grid;
  const double dx = grid.spacing(0);
  const double dy = grid.spacing(1);
  const double dtheta = grid.spacing(2);
  const double ax = params.speed, ay = params.speed, at = params.omega_max;
  const double dt_cfl = opts.cfl / (ax / dx + ay / dy + at / dtheta);

  BrtResult result;
  std::vector<double> prev = std::move(initial.values);
  std::vector<double> next(prev.size());

  std::vector<double> cos_k(grid.n[2]), sin_k(grid.n[2]);
  for (int k = 0; k < grid.n[2]; ++k) {
    cos_k[k] = std::cos(grid.coord(2, k));
    sin_k[k] = std::sin(grid.coord(2, k));
  }

  std::vector<double> checkpoints = opts.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  std::size_t next_cp = 0;

  const int nx = grid.n[0], ny = grid.n[1], nt = grid.n[2];
  double t = 0.0;
  bool converged = false;
  int iterations = 0;

  while (t < opts.max_horizon - 1e-12) {
    double dt = std::min(dt_cfl, opts.max_horizon - t);
    if (next_cp < checkpoints.size() && checkpoints[next_cp] > t + 1e-12) {
      dt = std::min(dt, checkpoints[next_cp] - t);
    }

    std::atomic<bool> nonfinite{false};
    // One entry per x-row; each row is written by exactly one worker.
    std::vector<double> row_change(static_cast<std::size_t>(nx), 0.0);

    parallel_for_ranges(nx, opts.threads, [&](std::int64_t ib, std::int64_t ie) {
      for (int i = static_cast<int>(ib); i < static_cast<int>(ie); ++i) {
        double local_change = 0.0;
        const int im = std::max(i - 1, 0);
        const int ip = std::min(i + 1, nx - 1);
        for (int j = 0; j < ny; ++j) {
          const int jm = std::max(j - 1, 0);
          const int jp = std::min(j + 1, ny - 1);
          for (int k = 0; k < nt; ++k) {
            const int km = grid.wrap_theta_index(k - 1);
            const int kp = grid.wrap_theta_index(k + 1);
            const std::int64_t c = grid.flat(i, j, k);
            const double vc = prev[static_cast<std::size_t>(c)];

            // Linear extrapolation ghost nodes at clamped x/y edges make the
            // central difference one-sided and kill the dissipation there.
            const double vxm = (i == 0)
                ? 2.0 * vc - prev[static_cast<std::size_t>(grid.flat(ip, j, k))]
                : prev[static_cast<std::size_t>(grid.flat(im, j, k))];
            const double vxp = (i == nx - 1)
                ? 2.0 * vc - prev[static_cast<std::size_t>(grid.flat(im, j, k))]
                : prev[static_cast<std::size_t>(grid.flat(ip, j, k))];
            const double vym = (j == 0)
                ? 2.0 * vc - prev[static_cast<std::size_t>(grid.flat(i, jp, k))]
                : prev[static_cast<std::size_t>(grid.flat(i, jm, k))];
            const double vyp = (j == ny - 1)
                ? 2.0 * vc - prev[static_cast<std::size_t>(grid.flat(i, jm, k))]
                : prev[static_cast<std::size_t>(grid.flat(i, jp, k))];
            const double vtm = prev[static_cast<std::size_t>(grid.flat(i, j, km))];
            const double vtp = prev[static_cast<std::size_t>(grid.flat(i, j, kp))];

            const double px = (vxp - vxm) / (2.0 * dx);
            const double py = (vyp - vym) / (2.0 * dy);
            const double pt = (vtp - vtm) / (2.0 * dtheta);

            const double a = params.speed * (px * cos_k[k] + py * sin_k[k]);
            const double ham =
                (params.allow_reverse ? -std::abs(a) : a) - at * std::abs(pt);
            const double dissipation =
                0.5 * (ax * (vxp - 2.0 * vc + vxm) / dx +
                       ay * (vyp - 2.0 * vc + vym) / dy +
                       at * (vtp - 2.0 * vc + vtm) / dtheta);
            const double stepped = vc - dt * ham + dt * dissipation;
            const double vn = std::min(stepped, vc);
            if (!std::isfinite(vn)) nonfinite.store(true);
            next[static_cast<std::size_t>(c)] = vn;
            local_change = std::max(local_change, vc - vn);
          }
        }
        row_change[static_cast<std::size_t>(i)] = local_change;
      }
    });

    if (nonfinite.load()) {
      throw DivergedError("solve_brt: non-finite value encountered");
    }
    prev.swap(next);
    t += dt;
    ++iterations;

    if (next_cp < checkpoints.size() &&
        t >= checkpoints[next_cp] - 1e-12) {
      ValueField snap;
      snap.grid = grid;
      snap.values = prev;
      result.checkpoint_fields.emplace_back(checkpoints[next_cp],
                                            std::move(snap));
      ++next_cp;
    }

    const double max_change =
        *std::max_element(row_change.begin(), row_change.end());
    if (max_change < opts.tol) {
      converged = true;
      break;
    }
  }

  result.field.grid = grid;
  result.field.values = std::move(prev);
  result.horizon = t;
  result.converged = converged;
  result.iterations = iterations;
  return result;
}

inline BrtResult solve_brt(const Grid3& grid, const GoalSet& goal,
                           const DubinsParams& params,
                           const SolverOptions& opts = {}) {
  return solve_brt_from_level_set(goal_level_set(grid, goal), params, opts);
}

/// Membership test for the backward reachable tube (boundary included).
inline bool brt_contains(const BrtResult& result, const Pose& pose) {
  return result.field.interpolate(pose) <= 0.0;
}

}  // namespace hjba

#endif  // HJBA_HJ_SOLVER_HPP_
