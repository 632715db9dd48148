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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fcshand/curve.hpp"
#include "fcshand/units.hpp"

namespace fcshand {

inline constexpr double kAnchorFlowLpm = 50.0;
inline constexpr double kAnchorPressureKpa = 32.3;
inline constexpr double kAnchorTipForceN = 0.38;

struct FingerConfig {
  Length finger_length = mm(80.0);
  // q_src [L/min] -> chamber pressure [kPa]
  PiecewiseLinearCurve pressure_map{{{0.0, 0.0}, {kAnchorFlowLpm, kAnchorPressureKpa}}};
  // 1/(m*kPa). Unset means a half-circle bend at the anchor pressure.
  std::optional<double> curvature_gain;
  double tipforce_gain = kAnchorTipForceN / kAnchorPressureKpa;  // N/kPa
  Pressure p_max = kpa(35.0);
  std::size_t n_marks = 8;

  // Curvature gain actually in use.
  double effective_curvature_gain() const;
  void validate() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Sampled finger posture in the base frame. x runs along the unbent finger
/// axis, y towards the bending side. Curvature 0 means straight (infinite
/// radius).
struct FingerPose {
  std::vector<Point2> marks;
  Pressure p_f;
  double curvature = 0.0;  // 1/m

  // Bending radius; +infinity when straight.
  Length radius() const;
};

Pressure chamber_pressure(VolumetricFlow q_src, const FingerConfig& cfg);

// Throws std::invalid_argument if p_f is negative or above p_max.
Length bending_radius(Pressure p_f, const FingerConfig& cfg);
Force tip_force(Pressure p_f, const FingerConfig& cfg);

// Constant-curvature arc rooted at the origin and tangent to +x, with marks
// equally spaced along the arc from base to tip.
FingerPose posture(Pressure p_f, const FingerConfig& cfg);

// Mean Euclidean distance between corresponding marks.
Length mean_displacement(const FingerPose& before, const FingerPose& after);

}  // namespace fcshand
