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

#ifndef HJBA_REEDS_SHEPP_HPP_
#define HJBA_REEDS_SHEPP_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "hjba/pose.hpp"
#include "hjba/vehicle.hpp"

namespace hjba {

enum class RsSegmentType : std::uint8_t { Left, Straight, Right };

struct RsSegment {
  RsSegmentType type = RsSegmentType::Straight;
  int direction = 1;    // +1 forward, -1 backward
  double length = 0.0;  // m, >= 0
};

/// Shortest bounded-curvature path with reversals, as a word of arcs and
/// straights at a fixed turn radius.
struct RsPath {
  std::vector<RsSegment> segments;
  double turn_radius = 1.0;
  double total_length = 0.0;

  int cusp_count() const {
    int cusps = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].direction != segments[i - 1].direction) ++cusps;
    }
    return cusps;
  }
};

namespace rs_detail {

constexpr double kEps = 1e-10;

inline double mod2pi(double x) {
  double v = std::fmod(x, kTwoPi);
  if (v < -kPi) {
    v += kTwoPi;
  } else if (v > kPi) {
    v -= kTwoPi;
  }
  return v;
}

inline void polar(double x, double y, double& r, double& theta) {
  r = std::sqrt(x * x + y * y);
  theta = std::atan2(y, x);
}

inline void tau_omega(double u, double v, double xi, double eta, double phi,
                      double& tau, double& omega) {
  const double delta = mod2pi(u - v);
  const double A = std::sin(u) - std::sin(delta);
  const double B = std::cos(u) - std::cos(delta) - 1.0;
  const double t1 = std::atan2(eta * A - xi * B, xi * A + eta * B);
  const double t2 = 2.0 * (std::cos(delta) - std::cos(v) - std::cos(u)) + 3.0;
  tau = (t2 < 0.0) ? mod2pi(t1 + kPi) : mod2pi(t1);
  omega = mod2pi(tau - u + v - phi);
}

// Base word solvers in the canonical frame (unit radius, start at origin
// facing +x). Each returns signed segment parameters for its "positive"
// word; the caller applies time-flip / reflect / backwards symmetries.

inline bool LpSpLp(double x, double y, double phi, double& t, double& u,
                   double& v) {
  polar(x - std::sin(phi), y - 1.0 + std::cos(phi), u, t);
  if (t >= -kEps) {
    v = mod2pi(phi - t);
    if (v >= -kEps) return true;
  }
  return false;
}

inline bool LpSpRp(double x, double y, double phi, double& t, double& u,
                   double& v) {
  double t1, u1;
  polar(x + std::sin(phi), y - 1.0 - std::cos(phi), u1, t1);
  if (u1 * u1 >= 4.0) {
    u = std::sqrt(u1 * u1 - 4.0);
    const double theta = std::atan2(2.0, u);
    t = mod2pi(t1 + theta);
    v = mod2pi(t - phi);
    return t >= -kEps && v >= -kEps;
  }
  return false;
}

inline bool LpRmL(double x, double y, double phi, double& t, double& u,
                  double& v) {
  const double xi = x - std::sin(phi);
  const double eta = y - 1.0 + std::cos(phi);
  double u1, theta;
  polar(xi, eta, u1, theta);
  if (u1 <= 4.0) {
    u = -2.0 * std::asin(0.25 * u1);
    t = mod2pi(theta + 0.5 * u + kPi);
    v = mod2pi(phi - t + u);
    return t >= -kEps && u <= kEps;
  }
  return false;
}

inline bool LpRupLumRm(double x, double y, double phi, double& t, double& u,
                       double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  const double rho = 0.25 * (2.0 + std::sqrt(xi * xi + eta * eta));
  if (rho <= 1.0) {
    u = std::acos(rho);
    tau_omega(u, -u, xi, eta, phi, t, v);
    return t >= -kEps && v <= kEps;
  }
  return false;
}

inline bool LpRumLumRp(double x, double y, double phi, double& t, double& u,
                       double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  const double rho = (20.0 - xi * xi - eta * eta) / 16.0;
  if (rho >= 0.0 && rho <= 1.0) {
    u = -std::acos(rho);
    if (u >= -0.5 * kPi) {
      tau_omega(u, u, xi, eta, phi, t, v);
      return t >= -kEps && v >= -kEps;
    }
  }
  return false;
}

inline bool LpRmSmLm(double x, double y, double phi, double& t, double& u,
                     double& v) {
  const double xi = x - std::sin(phi);
  const double eta = y - 1.0 + std::cos(phi);
  double rho, theta;
  polar(xi, eta, rho, theta);
  if (rho >= 2.0) {
    const double r = std::sqrt(rho * rho - 4.0);
    u = 2.0 - r;
    t = mod2pi(theta + std::atan2(r, -2.0));
    v = mod2pi(phi - 0.5 * kPi - t);
    return t >= -kEps && u <= kEps && v <= kEps;
  }
  return false;
}

inline bool LpRmSmRm(double x, double y, double phi, double& t, double& u,
                     double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  double rho, theta;
  polar(-eta, xi, rho, theta);
  if (rho >= 2.0) {
    t = theta;
    u = 2.0 - rho;
    v = mod2pi(t + 0.5 * kPi - phi);
    return t >= -kEps && u <= kEps && v <= kEps;
  }
  return false;
}

inline bool LpRmSLmRp(double x, double y, double phi, double& t, double& u,
                      double& v) {
  const double xi = x + std::sin(phi);
  const double eta = y - 1.0 - std::cos(phi);
  double rho, theta;
  polar(xi, eta, rho, theta);
  if (rho >= 2.0) {
    u = 4.0 - std::sqrt(rho * rho - 4.0);
    if (u <= kEps) {
      t = mod2pi(
          std::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
      v = mod2pi(t - phi);
      return t >= -kEps && v >= -kEps;
    }
  }
  return false;
}

using Word = std::array<RsSegmentType, 5>;
constexpr RsSegmentType L = RsSegmentType::Left;
constexpr RsSegmentType S = RsSegmentType::Straight;
constexpr RsSegmentType R = RsSegmentType::Right;

// Segment type rows; N-padded entries carry zero parameters.
inline const std::array<Word, 18>& word_table() {
  static const std::array<Word, 18> table = {{
      {L, R, L, S, S},  // 0
      {R, L, R, S, S},  // 1
      {L, R, L, R, S},  // 2
      {R, L, R, L, S},  // 3
      {L, R, S, L, S},  // 4
      {R, L, S, R, S},  // 5
      {L, S, R, L, S},  // 6
      {R, S, L, R, S},  // 7
      {L, R, S, R, S},  // 8
      {R, L, S, L, S},  // 9
      {R, S, R, L, S},  // 10
      {L, S, L, R, S},  // 11
      {L, S, R, S, S},  // 12
      {R, S, L, S, S},  // 13
      {L, S, L, S, S},  // 14
      {R, S, R, S, S},  // 15
      {L, R, S, L, R},  // 16
      {R, L, S, R, L},  // 17
  }};
  return table;
}

struct Candidate {
  int word = -1;  // row in word_table()
  std::array<double, 5> params{};  // signed, unit-radius
  int segment_count = 0;
  double length() const {
    double sum = 0.0;
    for (int i = 0; i < segment_count; ++i) sum += std::abs(params[i]);
    return sum;
  }
};

class Best {
 public:
  void offer(int word, std::initializer_list<double> params) {
    Candidate c;
    c.word = word;
    int i = 0;
    for (double p : params) c.params[static_cast<std::size_t>(i++)] = p;
    c.segment_count = i;
    const double len = c.length();
    if (len < best_len_) {
      best_len_ = len;
      best_ = c;
    }
  }

  const Candidate& candidate() const { return best_; }
  double length() const { return best_len_; }

 private:
  Candidate best_;
  double best_len_ = std::numeric_limits<double>::infinity();
};

inline void collect_csc(double x, double y, double phi, Best& best) {
  double t, u, v;
  if (LpSpLp(x, y, phi, t, u, v)) best.offer(14, {t, u, v});
  if (LpSpLp(-x, y, -phi, t, u, v)) best.offer(14, {-t, -u, -v});  // timeflip
  if (LpSpLp(x, -y, -phi, t, u, v)) best.offer(15, {t, u, v});     // reflect
  if (LpSpLp(-x, -y, phi, t, u, v)) best.offer(15, {-t, -u, -v});
  if (LpSpRp(x, y, phi, t, u, v)) best.offer(12, {t, u, v});
  if (LpSpRp(-x, y, -phi, t, u, v)) best.offer(12, {-t, -u, -v});
  if (LpSpRp(x, -y, -phi, t, u, v)) best.offer(13, {t, u, v});
  if (LpSpRp(-x, -y, phi, t, u, v)) best.offer(13, {-t, -u, -v});
}

inline void collect_ccc(double x, double y, double phi, Best& best) {
  double t, u, v;
  if (LpRmL(x, y, phi, t, u, v)) best.offer(0, {t, u, v});
  if (LpRmL(-x, y, -phi, t, u, v)) best.offer(0, {-t, -u, -v});
  if (LpRmL(x, -y, -phi, t, u, v)) best.offer(1, {t, u, v});
  if (LpRmL(-x, -y, phi, t, u, v)) best.offer(1, {-t, -u, -v});
  // Backwards: solve in the reversed frame and emit the word reversed.
  const double xb = x * std::cos(phi) + y * std::sin(phi);
  const double yb = x * std::sin(phi) - y * std::cos(phi);
  if (LpRmL(xb, yb, phi, t, u, v)) best.offer(0, {v, u, t});
  if (LpRmL(-xb, yb, -phi, t, u, v)) best.offer(0, {-v, -u, -t});
  if (LpRmL(xb, -yb, -phi, t, u, v)) best.offer(1, {v, u, t});
  if (LpRmL(-xb, -yb, phi, t, u, v)) best.offer(1, {-v, -u, -t});
}

inline void collect_cccc(double x, double y, double phi, Best& best) {
  double t, u, v;
  if (LpRupLumRm(x, y, phi, t, u, v)) best.offer(2, {t, u, -u, v});
  if (LpRupLumRm(-x, y, -phi, t, u, v)) best.offer(2, {-t, -u, u, -v});
  if (LpRupLumRm(x, -y, -phi, t, u, v)) best.offer(3, {t, u, -u, v});
  if (LpRupLumRm(-x, -y, phi, t, u, v)) best.offer(3, {-t, -u, u, -v});
  if (LpRumLumRp(x, y, phi, t, u, v)) best.offer(2, {t, u, u, v});
  if (LpRumLumRp(-x, y, -phi, t, u, v)) best.offer(2, {-t, -u, -u, -v});
  if (LpRumLumRp(x, -y, -phi, t, u, v)) best.offer(3, {t, u, u, v});
  if (LpRumLumRp(-x, -y, phi, t, u, v)) best.offer(3, {-t, -u, -u, -v});
}

inline void collect_ccsc(double x, double y, double phi, Best& best) {
  constexpr double kHalfPi = 0.5 * kPi;
  double t, u, v;
  if (LpRmSmLm(x, y, phi, t, u, v)) best.offer(4, {t, -kHalfPi, u, v});
  if (LpRmSmLm(-x, y, -phi, t, u, v)) best.offer(4, {-t, kHalfPi, -u, -v});
  if (LpRmSmLm(x, -y, -phi, t, u, v)) best.offer(5, {t, -kHalfPi, u, v});
  if (LpRmSmLm(-x, -y, phi, t, u, v)) best.offer(5, {-t, kHalfPi, -u, -v});
  if (LpRmSmRm(x, y, phi, t, u, v)) best.offer(8, {t, -kHalfPi, u, v});
  if (LpRmSmRm(-x, y, -phi, t, u, v)) best.offer(8, {-t, kHalfPi, -u, -v});
  if (LpRmSmRm(x, -y, -phi, t, u, v)) best.offer(9, {t, -kHalfPi, u, v});
  if (LpRmSmRm(-x, -y, phi, t, u, v)) best.offer(9, {-t, kHalfPi, -u, -v});
  const double xb = x * std::cos(phi) + y * std::sin(phi);
  const double yb = x * std::sin(phi) - y * std::cos(phi);
  if (LpRmSmLm(xb, yb, phi, t, u, v)) best.offer(6, {v, u, -kHalfPi, t});
  if (LpRmSmLm(-xb, yb, -phi, t, u, v)) best.offer(6, {-v, -u, kHalfPi, -t});
  if (LpRmSmLm(xb, -yb, -phi, t, u, v)) best.offer(7, {v, u, -kHalfPi, t});
  if (LpRmSmLm(-xb, -yb, phi, t, u, v)) best.offer(7, {-v, -u, kHalfPi, -t});
  if (LpRmSmRm(xb, yb, phi, t, u, v)) best.offer(10, {v, u, -kHalfPi, t});
  if (LpRmSmRm(-xb, yb, -phi, t, u, v)) best.offer(10, {-v, -u, kHalfPi, -t});
  if (LpRmSmRm(xb, -yb, -phi, t, u, v)) best.offer(11, {v, u, -kHalfPi, t});
  if (LpRmSmRm(-xb, -yb, phi, t, u, v)) best.offer(11, {-v, -u, kHalfPi, -t});
}

inline void collect_ccscc(double x, double y, double phi, Best& best) {
  constexpr double kHalfPi = 0.5 * kPi;
  double t, u, v;
  if (LpRmSLmRp(x, y, phi, t, u, v)) {
    best.offer(16, {t, -kHalfPi, u, -kHalfPi, v});
  }
  if (LpRmSLmRp(-x, y, -phi, t, u, v)) {
    best.offer(16, {-t, kHalfPi, -u, kHalfPi, -v});
  }
  if (LpRmSLmRp(x, -y, -phi, t, u, v)) {
    best.offer(17, {t, -kHalfPi, u, -kHalfPi, v});
  }
  if (LpRmSLmRp(-x, -y, phi, t, u, v)) {
    best.offer(17, {-t, kHalfPi, -u, kHalfPi, -v});
  }
}

}  // namespace rs_detail

/// Pose reached after driving `arc` meters from `start` with signed
/// curvature `curvature` (0 for straight) and direction `dir` (+1/-1).
inline Pose integrate_arc(const Pose& start, double curvature, int dir,
                          double arc) {
  const double s = dir >= 0 ? arc : -arc;
  if (std::abs(curvature) < 1e-12) {
    return Pose(start.x + s * std::cos(start.theta),
                start.y + s * std::sin(start.theta), start.theta);
  }
  const double theta1 = start.theta + s * curvature;
  return Pose(start.x + (std::sin(theta1) - std::sin(start.theta)) / curvature,
              start.y - (std::cos(theta1) - std::cos(start.theta)) / curvature,
              theta1);
}

inline double rs_segment_curvature(const RsSegment& seg, double turn_radius) {
  switch (seg.type) {
    case RsSegmentType::Left:
      return 1.0 / turn_radius;
    case RsSegmentType::Right:
      return -1.0 / turn_radius;
    default:
      return 0.0;
  }
}

/// Minimum-length path over the full canonical word families (time-flip,
/// reflect and backwards symmetries applied). Ties break to the earliest
/// word in the fixed enumeration order.
inline RsPath rs_shortest(const Pose& from, const Pose& to,
                          double turn_radius) {
  RsPath path;
  path.turn_radius = turn_radius;

  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double c = std::cos(from.theta), s = std::sin(from.theta);
  const double x = (c * dx + s * dy) / turn_radius;
  const double y = (-s * dx + c * dy) / turn_radius;
  const double phi = rs_detail::mod2pi(to.theta - from.theta);

  if (std::abs(x) < 1e-12 && std::abs(y) < 1e-12 && std::abs(phi) < 1e-12) {
    return path;  // zero-length, no segments
  }

  rs_detail::Best best;
  rs_detail::collect_csc(x, y, phi, best);
  rs_detail::collect_ccc(x, y, phi, best);
  rs_detail::collect_cccc(x, y, phi, best);
  rs_detail::collect_ccsc(x, y, phi, best);
  rs_detail::collect_ccscc(x, y, phi, best);

  const rs_detail::Candidate& cand = best.candidate();
  const auto& word = rs_detail::word_table()[static_cast<std::size_t>(cand.word)];
  for (int i = 0; i < cand.segment_count; ++i) {
    const double p = cand.params[static_cast<std::size_t>(i)];
    if (std::abs(p) < 1e-12) continue;
    RsSegment seg;
    seg.type = word[static_cast<std::size_t>(i)];
    seg.direction = p > 0.0 ? 1 : -1;
    seg.length = std::abs(p) * turn_radius;
    path.segments.push_back(seg);
    path.total_length += seg.length;
  }
  return path;
}

/// Poses along the path at arc-length intervals <= step, both endpoints
/// included, each lying exactly on the analytic curve. The flag is the
/// travel direction of the segment each pose belongs to.
inline std::vector<std::pair<Pose, int>> rs_sample(const RsPath& path,
                                                   const Pose& from,
                                                   double step) {
  std::vector<std::pair<Pose, int>> out;
  const int first_dir =
      path.segments.empty() ? 1 : path.segments.front().direction;
  out.emplace_back(from, first_dir);
  Pose cursor = from;
  for (const auto& seg : path.segments) {
    const double kappa = rs_segment_curvature(seg, path.turn_radius);
    const int m = std::max(1, static_cast<int>(std::ceil(seg.length / step)));
    for (int i = 1; i <= m; ++i) {
      const double s = seg.length * i / m;
      out.emplace_back(integrate_arc(cursor, kappa, seg.direction, s),
                       seg.direction);
    }
    cursor = out.back().first;
  }
  return out;
}

/// End pose of the path when integrated from `from`.
inline Pose rs_end_pose(const RsPath& path, const Pose& from) {
  Pose cursor = from;
  for (const auto& seg : path.segments) {
    cursor = integrate_arc(cursor, rs_segment_curvature(seg, path.turn_radius),
                           seg.direction, seg.length);
  }
  return cursor;
}

/// Analytic expansion: shortest RS path, accepted only if every sampled
/// footprint along it stays farther than `margin` from all obstacles.
inline std::optional<RsPath> rs_expansion(
    const Pose& from, const Pose& to, double turn_radius,
    const VehicleGeometry& geom, const std::vector<ConvexPolytope>& obstacles,
    double margin, double step) {
  RsPath path = rs_shortest(from, to, turn_radius);
  for (const auto& [pose, dir] : rs_sample(path, from, step)) {
    (void)dir;
    if (footprint_collides(geom, pose, obstacles, margin)) return std::nullopt;
  }
  return path;
}

}  // namespace hjba

#endif  // HJBA_REEDS_SHEPP_HPP_
