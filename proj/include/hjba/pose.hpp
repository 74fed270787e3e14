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

#ifndef HJBA_POSE_HPP_
#define HJBA_POSE_HPP_

#include <cmath>

namespace hjba {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle into [-pi, pi).
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a - kPi;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm_sq()); }
  /// Counter-clockwise perpendicular.
  Vec2 perp() const { return {-y, x}; }
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
  }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// SE(2) state (x, y, theta) with theta kept in [-pi, pi).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Pose() = default;
  Pose(double px, double py, double ptheta)
      : x(px), y(py), theta(wrap_angle(ptheta)) {}

  Vec2 position() const { return {x, y}; }
  Vec2 heading_dir() const { return {std::cos(theta), std::sin(theta)}; }

  /// Maps a point from this pose's local frame to the world frame.
  Vec2 to_world(Vec2 local) const {
    return local.rotated(theta) + position();
  }
};

inline double distance(const Pose& a, const Pose& b) {
  return (a.position() - b.position()).norm();
}

/// Shortest signed angular difference a - b, in [-pi, pi).
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

}  // namespace hjba

#endif  // HJBA_POSE_HPP_
