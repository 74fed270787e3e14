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

#ifndef HJBA_SAFE_SET_HPP_
#define HJBA_SAFE_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hjba/errors.hpp"
#include "hjba/grid3.hpp"
#include "hjba/hj_solver.hpp"
#include "hjba/parallel.hpp"
#include "hjba/polytope.hpp"
#include "hjba/pose.hpp"
#include "hjba/rng.hpp"
#include "hjba/vehicle.hpp"

namespace hjba {

/// Per-cell collision-freedom flags: a cell is safe iff the footprint at its
/// center pose keeps more than `margin` distance to every obstacle.
struct SafetyMask {
  Grid3 grid;
  std::vector<std::uint8_t> safe;  // one flag per cell

  bool at(std::int64_t flat) const {
    return safe[static_cast<std::size_t>(flat)] != 0;
  }
};

/// Drops obstacles that cannot touch any footprint whose reference point
/// lies in the grid. Keeps anything within a body-diagonal of the bounds.
inline std::vector<ConvexPolytope> filter_obstacles_to_grid(
    const Grid3& grid, const VehicleGeometry& geom,
    const std::vector<ConvexPolytope>& obstacles, double margin = 0.0) {
  const double reach =
      std::max(geom.length - geom.rear_overhang, geom.rear_overhang) +
      0.5 * geom.width + margin;
  std::vector<ConvexPolytope> kept;
  for (const auto& obs : obstacles) {
    const auto [lo, hi] = obs.aabb();
    if (hi.x < grid.lo[0] - reach || lo.x > grid.hi[0] + reach ||
        hi.y < grid.lo[1] - reach || lo.y > grid.hi[1] + reach) {
      continue;
    }
    kept.push_back(obs);
  }
  return kept;
}

inline SafetyMask compute_safety_mask(
    const Grid3& grid, const VehicleGeometry& geom,
    const std::vector<ConvexPolytope>& obstacles, double margin = 0.0,
    int threads = 1) {
  SafetyMask mask;
  mask.grid = grid;
  mask.safe.assign(static_cast<std::size_t>(grid.size()), 1);
  const auto in_grid = filter_obstacles_to_grid(grid, geom, obstacles, margin);
  if (in_grid.empty()) return mask;

  parallel_for_ranges(grid.size(), threads, [&](std::int64_t b, std::int64_t e) {
    for_each_cell_range(grid, b, e, [&](int i, int j, int k, std::int64_t flat) {
      const Pose pose = grid.cell_center(i, j, k);
      if (footprint_collides(geom, pose, in_grid, margin)) {
        mask.safe[static_cast<std::size_t>(flat)] = 0;
      }
    });
  });
  return mask;
}

/// S = G intersect C, with the member cell-center poses materialized in
/// deterministic (flat cell) order.
struct SafeReachableSet {
  Grid3 grid;
  std::vector<std::uint8_t> member;
  std::vector<Pose> member_poses;
  std::vector<std::int64_t> member_cells;
};

inline SafeReachableSet intersect(const SafetyMask& mask,
                                  const BrtResult& brt) {
  if (!(mask.grid == brt.field.grid)) {
    throw GridMismatchError("intersect: mask and tube use different grids");
  }
  SafeReachableSet s;
  s.grid = mask.grid;
  s.member.assign(mask.safe.size(), 0);
  for_each_cell(mask.grid, [&](int i, int j, int k, std::int64_t flat) {
    const std::size_t f = static_cast<std::size_t>(flat);
    if (mask.safe[f] != 0 && brt.field.values[f] <= 0.0) {
      s.member[f] = 1;
      s.member_poses.push_back(mask.grid.cell_center(i, j, k));
      s.member_cells.push_back(flat);
    }
  });
  return s;
}

/// One halfspace constraint of a sampling predicate, on x or y, optionally
/// measured relative to the goal coordinate.
struct PredicateTerm {
  int axis = 0;           // 0 = x, 1 = y
  bool greater = true;    // direction of the inequality
  bool strict = false;    // > / < instead of >= / <=
  double value = 0.0;     // threshold (offset when relative_to_goal)
  bool relative_to_goal = true;
};

/// Conjunction of halfplane constraints plus optional heading bounds.
struct SamplingPredicate {
  std::vector<PredicateTerm> terms;
  std::optional<double> theta_min;
  std::optional<double> theta_max;

  bool accepts(const Pose& p, const Pose& goal) const {
    for (const auto& term : terms) {
      const double coord = term.axis == 0 ? p.x : p.y;
      const double ref = term.relative_to_goal
                             ? (term.axis == 0 ? goal.x : goal.y) + term.value
                             : term.value;
      if (term.greater) {
        if (term.strict ? !(coord > ref) : !(coord >= ref)) return false;
      } else {
        if (term.strict ? !(coord < ref) : !(coord <= ref)) return false;
      }
    }
    if (theta_min && p.theta < *theta_min) return false;
    if (theta_max && p.theta > *theta_max) return false;
    return true;
  }
};

/// A sampled member of S used as the meeting waypoint of the two searches.
struct ConnectedState {
  Pose pose;
  int id = 0;
};

struct SampleResult {
  std::vector<ConnectedState> states;
  bool truncated = false;  // fewer than requested members satisfied the predicate
};

/// Uniform sampling without replacement from the predicate-satisfying
/// members of S; deterministic for a fixed seed. Throws
/// EmptySampleSpaceError when nothing satisfies the predicate.
inline SampleResult sample_connected_states(const SafeReachableSet& s,
                                            const SamplingPredicate& predicate,
                                            const Pose& goal, int count,
                                            std::uint64_t seed) {
  std::vector<Pose> filtered;
  for (const auto& pose : s.member_poses) {
    if (predicate.accepts(pose, goal)) filtered.push_back(pose);
  }
  if (filtered.empty()) {
    throw EmptySampleSpaceError(
        "sample_connected_states: no member of S satisfies the predicate");
  }
  SampleResult result;
  const std::size_t want = static_cast<std::size_t>(std::max(count, 0));
  if (filtered.size() <= want) {
    result.truncated = filtered.size() < want;
    for (std::size_t i = 0; i < filtered.size(); ++i) {
      result.states.push_back({filtered[i], static_cast<int>(i)});
    }
    return result;
  }
  // Partial Fisher-Yates with an explicit portable generator.
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(
                rng.next_below(static_cast<std::uint64_t>(filtered.size() - i)));
    std::swap(filtered[i], filtered[j]);
    result.states.push_back({filtered[i], static_cast<int>(i)});
  }
  return result;
}

}  // namespace hjba

#endif  // HJBA_SAFE_SET_HPP_
