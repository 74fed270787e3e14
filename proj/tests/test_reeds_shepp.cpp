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

#include <gtest/gtest.h>

#include <cmath>

#include "hjba/polytope.hpp"
#include "hjba/reeds_shepp.hpp"
#include "hjba/rng.hpp"
#include "hjba/vehicle.hpp"
#include "oracles.hpp"

namespace hjba {
namespace {

constexpr double kRadius = 2.7 / 0.68413680834169779;  // 2.7 / tan(0.6)

Pose random_pose(SplitMix64& rng, double span) {
  return Pose(rng.next_range(-span, span), rng.next_range(-span, span),
              rng.next_range(-kPi, kPi));
}

TEST(RsShortest, IdenticalPosesGiveEmptyPath) {
  const Pose p(1.2, -3.4, 0.7);
  const auto path = rs_shortest(p, p, kRadius);
  EXPECT_EQ(path.segments.size(), 0u);
  EXPECT_EQ(path.total_length, 0.0);
  EXPECT_EQ(path.cusp_count(), 0);
}

TEST(RsShortest, StraightAheadIsSingleForwardStraight) {
  const auto path = rs_shortest(Pose(0, 0, 0), Pose(5, 0, 0), kRadius);
  ASSERT_EQ(path.segments.size(), 1u);
  EXPECT_EQ(path.segments[0].type, RsSegmentType::Straight);
  EXPECT_EQ(path.segments[0].direction, 1);
  EXPECT_NEAR(path.segments[0].length, 5.0, 1e-9);
  EXPECT_NEAR(path.total_length, 5.0, 1e-9);
}

TEST(RsShortest, StraightBehindIsSingleBackwardStraight) {
  const auto path = rs_shortest(Pose(0, 0, 0), Pose(-4, 0, 0), kRadius);
  ASSERT_EQ(path.segments.size(), 1u);
  EXPECT_EQ(path.segments[0].type, RsSegmentType::Straight);
  EXPECT_EQ(path.segments[0].direction, -1);
  EXPECT_NEAR(path.total_length, 4.0, 1e-9);
}

TEST(RsShortest, SegmentsIntegrateToTarget) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Pose a = random_pose(rng, 12.0);
    const Pose b = random_pose(rng, 12.0);
    const auto path = rs_shortest(a, b, kRadius);
    double sum = 0.0;
    for (const auto& seg : path.segments) sum += seg.length;
    EXPECT_NEAR(sum, path.total_length, 1e-9);
    const Pose end = rs_end_pose(path, a);
    EXPECT_NEAR(end.x, b.x, 1e-6) << "trial " << trial;
    EXPECT_NEAR(end.y, b.y, 1e-6) << "trial " << trial;
    EXPECT_NEAR(std::abs(angle_diff(end.theta, b.theta)), 0.0, 1e-6)
        << "trial " << trial;
  }
}

TEST(RsShortest, ReversalSymmetry) {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Pose a = random_pose(rng, 10.0);
    const Pose b = random_pose(rng, 10.0);
    EXPECT_NEAR(rs_shortest(a, b, kRadius).total_length,
                rs_shortest(b, a, kRadius).total_length, 1e-9)
        << "trial " << trial;
  }
}

TEST(RsShortest, RigidMotionInvariance) {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const Pose a = random_pose(rng, 8.0);
    const Pose b = random_pose(rng, 8.0);
    const double len = rs_shortest(a, b, kRadius).total_length;
    // Apply the same SE(2) transform to both poses.
    const double ang = rng.next_range(-kPi, kPi);
    const Vec2 t{rng.next_range(-20, 20), rng.next_range(-20, 20)};
    const auto xf = [&](const Pose& p) {
      const Vec2 r = p.position().rotated(ang) + t;
      return Pose(r.x, r.y, p.theta + ang);
    };
    EXPECT_NEAR(rs_shortest(xf(a), xf(b), kRadius).total_length, len, 1e-9);
  }
}

TEST(RsShortest, LowerBoundedByEuclideanDistance) {
  SplitMix64 rng(45);
  for (int trial = 0; trial < 500; ++trial) {
    const Pose a = random_pose(rng, 10.0);
    const Pose b = random_pose(rng, 10.0);
    EXPECT_GE(rs_shortest(a, b, kRadius).total_length + 1e-9,
              distance(a, b));
  }
}

TEST(RsShortest, NeverBeatenByBangBangSequences) {
  // Every quantized bang-bang control sequence is a feasible
  // curvature-bounded path between its own endpoints, so the analytic
  // shortest path may never exceed its length.
  SplitMix64 rng(46);
  for (int trial = 0; trial < 300; ++trial) {
    const Pose start = random_pose(rng, 5.0);
    const auto bb = test_oracles::random_bang_bang(start, kRadius, rng);
    const auto path = rs_shortest(start, bb.end, kRadius);
    EXPECT_LE(path.total_length, bb.total_length + 1e-6)
        << "trial " << trial << ": rs " << path.total_length << " vs bang-bang "
        << bb.total_length;
  }
}

TEST(RsShortest, Deterministic) {
  const Pose a(0.3, -2.0, 1.1), b(-4.0, 5.0, -2.2);
  const auto p1 = rs_shortest(a, b, kRadius);
  const auto p2 = rs_shortest(a, b, kRadius);
  ASSERT_EQ(p1.segments.size(), p2.segments.size());
  for (std::size_t i = 0; i < p1.segments.size(); ++i) {
    EXPECT_EQ(p1.segments[i].type, p2.segments[i].type);
    EXPECT_EQ(p1.segments[i].direction, p2.segments[i].direction);
    EXPECT_EQ(p1.segments[i].length, p2.segments[i].length);
  }
}

TEST(RsSample, ZeroLengthPathYieldsSinglePose) {
  const Pose p(1, 2, 0.5);
  const auto samples = rs_sample(rs_shortest(p, p, kRadius), p, 0.1);
  ASSERT_EQ(samples.size(), 1u);
  EXPECT_NEAR(samples[0].first.x, 1.0, 1e-12);
}

TEST(RsSample, StraightSegmentSpacing) {
  const auto path = rs_shortest(Pose(0, 0, 0), Pose(1, 0, 0), kRadius);
  const auto samples = rs_sample(path, Pose(0, 0, 0), 0.25);
  ASSERT_EQ(samples.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(samples[static_cast<std::size_t>(i)].first.x, 0.25 * i, 1e-12);
    EXPECT_EQ(samples[static_cast<std::size_t>(i)].second, 1);
  }
}

TEST(RsSample, FullCircleStaysOnCircle) {
  RsPath path;
  path.turn_radius = kRadius;
  path.segments.push_back({RsSegmentType::Left, 1, kTwoPi * kRadius});
  path.total_length = kTwoPi * kRadius;
  const Pose start(2.0, -1.0, 0.3);
  // Left-turn center sits at radius kRadius along the left normal.
  const Vec2 center{start.x - kRadius * std::sin(start.theta),
                    start.y + kRadius * std::cos(start.theta)};
  for (const auto& [pose, dir] : rs_sample(path, start, 0.1)) {
    EXPECT_EQ(dir, 1);
    EXPECT_NEAR((pose.position() - center).norm(), kRadius, 1e-9);
  }
}

TEST(RsSample, CurvatureBoundHolds) {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const Pose a = random_pose(rng, 8.0);
    const Pose b = random_pose(rng, 8.0);
    const auto path = rs_shortest(a, b, kRadius);
    const auto samples = rs_sample(path, a, 0.1);
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (samples[i].second != samples[i - 1].second) continue;
      const double ds =
          (samples[i].first.position() - samples[i - 1].first.position()).norm();
      if (ds < 1e-9) continue;
      const double dth =
          std::abs(angle_diff(samples[i].first.theta, samples[i - 1].first.theta));
      EXPECT_LE(dth / ds, 1.0 / kRadius + 0.05 * 0.1);
    }
  }
}

TEST(RsExpansion, ObstacleFreeAlwaysSucceeds) {
  VehicleGeometry geom;
  SplitMix64 rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const Pose a = random_pose(rng, 8.0);
    const Pose b = random_pose(rng, 8.0);
    EXPECT_TRUE(
        rs_expansion(a, b, kRadius, geom, {}, 0.0, 0.1).has_value());
  }
}

TEST(RsExpansion, BisectingWallForcesFailure) {
  VehicleGeometry geom;
  // A tall slab between the poses blocks every candidate corridor.
  const auto wall =
      ConvexPolytope::axis_aligned_box({4.9, -200.0}, {5.1, 200.0});
  const auto result = rs_expansion(Pose(0, 0, 0), Pose(10, 0, 0), kRadius,
                                   geom, {wall}, 0.0, 0.1);
  EXPECT_FALSE(result.has_value());
}

TEST(RsExpansion, IdenticalPosesSucceedWithEmptyPath) {
  VehicleGeometry geom;
  const Pose p(0, 0, 0);
  const auto result = rs_expansion(p, p, kRadius, geom, {}, 0.0, 0.1);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->segments.size(), 0u);
}

TEST(RsPath, CuspCountCountsDirectionFlips) {
  RsPath path;
  path.turn_radius = kRadius;
  path.segments.push_back({RsSegmentType::Left, 1, 1.0});
  path.segments.push_back({RsSegmentType::Right, -1, 1.0});
  path.segments.push_back({RsSegmentType::Straight, -1, 2.0});
  path.segments.push_back({RsSegmentType::Left, 1, 0.5});
  EXPECT_EQ(path.cusp_count(), 2);
}

}  // namespace
}  // namespace hjba
