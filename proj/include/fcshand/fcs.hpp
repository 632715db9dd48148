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

#include <string_view>

#include "fcshand/curve.hpp"
#include "fcshand/units.hpp"

namespace fcshand {

/// Operating regime of the flow-channel-switching lever.
///   A: lever at rest, finger line only.
///   B: lever lifted, finger and injection lines both open.
///   C: finger line pinched shut, injection line only.
enum class FcsState { A, B, C };

std::string_view to_string(FcsState s);

struct FcsConfig {
  double alpha = 116.0 / 118.0;  // fraction of q_src sent to tube 3
  double epsilon = 2.6;          // lever arm ratio, f1 = epsilon * f3
  Area s3 = m2(1.155e-5);
  Area exhaust_port_area = mm2(7.1);  // metadata only
  Force f_rot = newton(0.0);          // jet force needed to start lever rotation
  PiecewiseLinearCurve f_block_curve; // q1 [L/min] -> blocking force [N]
  double gamma = 44.0 / 116.0;        // tube 3 -> output tube 2 transmission

  // Throws std::invalid_argument on any violated range.
  void validate() const;
};

struct FcsOutputs {
  VolumetricFlow q1;         // finger line
  VolumetricFlow q2;         // injection line
  VolumetricFlow q_exhaust;  // exhaust port
  VolumetricFlow q3;         // internal tube 3
  Force f3;
  Force f1;
  FcsState state = FcsState::A;
};

struct FlowSplit {
  VolumetricFlow q1;
  VolumetricFlow q3;
};

// Default f_block calibration: the four (q1_max, f_block) pairs of the
// measured prototypes.
PiecewiseLinearCurve default_f_block_curve();

FlowSplit split_flow(VolumetricFlow q_src, double alpha);

// Momentum flux of the tube-3 jet on the lever: rho * q3^2 / s3.
Force lever_force(VolumetricFlow q3, Area s3, Density rho_air);

Force tube_tip_force(Force f3, double epsilon);

// Inverse of tube_tip_force(lever_force(q3, s3, rho), epsilon) for s3.
Area calibrate_s3(double epsilon, Density rho_air, VolumetricFlow q3, Force f1);

Force blocking_force(VolumetricFlow q1, const PiecewiseLinearCurve& curve);

inline bool check_blocking(Force f1, Force f_block) { return f1 >= f_block; }

FcsState classify_state(VolumetricFlow q_src, const FcsConfig& cfg, const PhysConstants& consts);

FcsOutputs steady_outputs(VolumetricFlow q_src, const FcsConfig& cfg, const PhysConstants& consts);

// Rotation-onset force that puts the A->B transition exactly at q_ab.
Force calibrate_f_rot(VolumetricFlow q_ab, const FcsConfig& cfg, const PhysConstants& consts);

}  // namespace fcshand
