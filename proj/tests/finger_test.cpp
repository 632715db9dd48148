// Copyright 2026 The fcshand Authors
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
#include <numbers>

#include "fcshand/finger.hpp"

namespace fcshand {
namespace {

const FingerConfig kFinger{};

TEST(ChamberPressure, Anchors) {
  EXPECT_EQ(to_kpa(chamber_pressure(lpm(0.0), kFinger)), 0.0);
  EXPECT_NEAR(to_kpa(chamber_pressure(lpm(50.0), kFinger)), 32.3, 1e-12);
  EXPECT_NEAR(to_kpa(chamber_pressure(lpm(25.0), kFinger)), 16.15, 1e-12);
}

TEST(ChamberPressure, CappedAtMaximum) {
  EXPECT_EQ(to_kpa(chamber_pressure(lpm(150.0), kFinger)), 35.0);
  double prev = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double p = to_kpa(chamber_pressure(lpm(i), kFinger));
    EXPECT_GE(p, prev);
    EXPECT_LE(p, 35.0);
    prev = p;
  }
}

TEST(BendingRadius, Examples) {
  EXPECT_TRUE(std::isinf(bending_radius(kpa(0.0), kFinger).si()));
  EXPECT_NEAR(bending_radius(kpa(32.3), kFinger).si(), 0.08 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(bending_radius(kpa(32.3), kFinger).si(), 0.0255, 1e-4);
  EXPECT_GT(bending_radius(kpa(20.0), kFinger), bending_radius(kpa(30.0), kFinger));
  EXPECT_THROW(bending_radius(kpa(35.1), kFinger), std::invalid_argument);
  EXPECT_THROW(bending_radius(kpa(-1.0), kFinger), std::invalid_argument);
}

TEST(TipForce, Examples) {
  EXPECT_NEAR(tip_force(kpa(32.3), kFinger).si(), 0.38, 1e-12);
  EXPECT_EQ(tip_force(kpa(0.0), kFinger).si(), 0.0);
  EXPECT_NEAR(tip_force(kpa(16.15), kFinger).si(), 0.19, 1e-12);
}

TEST(TipForce, HomogeneousDegreeOne) {
  for (double p = 0.5; p <= 17.5; p += 0.5) {
    EXPECT_NEAR(tip_force(kpa(2.0 * p), kFinger).si(), 2.0 * tip_force(kpa(p), kFinger).si(), 1e-12);
    const double k1 = 1.0 / bending_radius(kpa(p), kFinger).si();
    const double k2 = 1.0 / bending_radius(kpa(2.0 * p), kFinger).si();
    EXPECT_NEAR(k2, 2.0 * k1, 1e-12 * k2);
  }
}

TEST(Posture, StraightFingerIsCollinear) {
  const FingerPose pose = posture(kpa(0.0), kFinger);
  ASSERT_EQ(pose.marks.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(pose.marks[i].x, 0.08 * static_cast<double>(i) / 7.0, 1e-15);
    EXPECT_EQ(pose.marks[i].y, 0.0);
  }
  EXPECT_TRUE(std::isinf(pose.radius().si()));
}

TEST(Posture, HalfCircleEndsOneDiameterAway) {
  const FingerPose pose = posture(kpa(32.3), kFinger);
  const double r = pose.radius().si();
  const Point2 tip = pose.marks.back();
  EXPECT_NEAR(std::hypot(tip.x, tip.y), 2.0 * r, 1e-12);
  EXPECT_NEAR(tip.x, 0.0, 1e-12);
}

// Independent arc parametrisation: rotate the base-to-centre vector about the
// centre (0, r) by the swept angle.
Point2 arc_point(double r, double angle) {
  const double cx = 0.0, cy = r;
  const double vx = 0.0 - cx, vy = 0.0 - cy;
  return {cx + vx * std::cos(angle) - vy * std::sin(angle), cy + vx * std::sin(angle) + vy * std::cos(angle)};
}

TEST(Posture, MarksOnCircleWithEqualArcSpacing) {
  for (double p = 1.0; p <= 35.0; p += 2.5) {
    const FingerPose pose = posture(kpa(p), kFinger);
    const double r = pose.radius().si();
    for (std::size_t i = 0; i < pose.marks.size(); ++i) {
      const Point2 m = pose.marks[i];
      EXPECT_NEAR(std::hypot(m.x, m.y - r), r, 1e-9);
      const Point2 want = arc_point(r, (0.08 * static_cast<double>(i) / 7.0) / r);
      EXPECT_NEAR(m.x, want.x, 1e-9);
      EXPECT_NEAR(m.y, want.y, 1e-9);
    }
  }
}

TEST(Posture, ChordNeverExceedsArc) {
  for (double p = 0.0; p <= 35.0; p += 0.25) {
    const FingerPose pose = posture(kpa(p), kFinger);
    const double chord = std::hypot(pose.marks.back().x, pose.marks.back().y);
    if (p == 0.0) {
      EXPECT_NEAR(chord, 0.08, 1e-15);
    } else {
      EXPECT_LT(chord, 0.08);
    }
  }
}

TEST(MeanDisplacement, Examples) {
  const FingerPose a = posture(kpa(20.0), kFinger);
  EXPECT_EQ(mean_displacement(a, a).si(), 0.0);

  FingerPose shifted = a;
  for (auto& m : shifted.marks) m.x += 1e-3;
  EXPECT_NEAR(mean_displacement(a, shifted).si(), 1e-3, 1e-15);

  FingerPose stepped = a;
  for (std::size_t i = 0; i < stepped.marks.size(); ++i) stepped.marks[i].y += 1e-3 * static_cast<double>(i + 1);
  EXPECT_NEAR(mean_displacement(a, stepped).si(), 4.5e-3, 1e-15);

  FingerPose short_pose = a;
  short_pose.marks.pop_back();
  EXPECT_THROW(mean_displacement(a, short_pose), std::invalid_argument);
}

TEST(FingerConfig, Validation) {
  FingerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.pressure_map = PiecewiseLinearCurve({{0.0, 1.0}, {50.0, 32.3}});
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = FingerConfig{};
  cfg.pressure_map = PiecewiseLinearCurve({{0.0, 0.0}, {20.0, 30.0}, {50.0, 20.0}});
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(FingerConfig, ExplicitCurvatureGain) {
  FingerConfig cfg;
  cfg.curvature_gain = 2.0;
  EXPECT_NEAR(bending_radius(kpa(10.0), cfg).si(), 1.0 / 20.0, 1e-15);
}

}  // namespace
}  // namespace fcshand
