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

#ifndef HJBA_VEHICLE_HPP_
#define HJBA_VEHICLE_HPP_

#include <cmath>
#include <vector>

#include "hjba/errors.hpp"
#include "hjba/polytope.hpp"
#include "hjba/pose.hpp"

namespace hjba {

/// Rectangular kinematic car. The pose reference point is the rear-axle
/// center; the body extends rear_overhang behind it and
/// (length - rear_overhang) ahead of it.
struct VehicleGeometry {
  double length = 4.7;        // m
  double width = 2.0;         // m
  double wheelbase = 2.7;     // m
  double max_steer = 0.6;     // rad
  double rear_overhang = 1.0; // m, rear axle to rear bumper

  static VehicleGeometry defaults() { return VehicleGeometry{}; }

  double min_turn_radius() const { return wheelbase / std::tan(max_steer); }

  void validate() const {
    if (!(length > wheelbase && wheelbase > 0.0)) {
      throw ValidationError("vehicle: need length > wheelbase > 0");
    }
    if (!(width > 0.0)) throw ValidationError("vehicle: width must be > 0");
    if (!(max_steer > 0.0 && max_steer < kPi / 2.0)) {
      throw ValidationError("vehicle: max_steer must be in (0, pi/2)");
    }
    if (rear_overhang < 0.0 || rear_overhang > length) {
      throw ValidationError("vehicle: rear_overhang must be in [0, length]");
    }
  }
};

/// Body rectangle at `pose`: the local box
/// [-rear_overhang, length - rear_overhang] x [-width/2, width/2]
/// rotated by theta and translated by (x, y).
inline ConvexPolytope vehicle_footprint(const VehicleGeometry& geom,
                                        const Pose& pose) {
  const double x0 = -geom.rear_overhang;
  const double x1 = geom.length - geom.rear_overhang;
  const double hw = 0.5 * geom.width;
  return ConvexPolytope::from_vertices({
      pose.to_world({x0, -hw}),
      pose.to_world({x1, -hw}),
      pose.to_world({x1, hw}),
      pose.to_world({x0, hw}),
  });
}

/// True iff the footprint at `pose` is within `margin` of any obstacle.
inline bool footprint_collides(const VehicleGeometry& geom, const Pose& pose,
                               const std::vector<ConvexPolytope>& obstacles,
                               double margin = 0.0) {
  if (obstacles.empty()) return false;
  const ConvexPolytope body = vehicle_footprint(geom, pose);
  const auto [blo, bhi] = body.aabb();
  for (const auto& obs : obstacles) {
    const auto [olo, ohi] = obs.aabb();
    // AABB reject before the exact distance test.
    if (olo.x > bhi.x + margin || ohi.x < blo.x - margin ||
        olo.y > bhi.y + margin || ohi.y < blo.y - margin) {
      continue;
    }
    if (polytope_distance(body, obs) <= margin) return true;
  }
  return false;
}

}  // namespace hjba

#endif  // HJBA_VEHICLE_HPP_
