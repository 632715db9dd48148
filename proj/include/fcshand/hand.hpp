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

#include <optional>
#include <string_view>

#include "fcshand/finger.hpp"
#include "fcshand/units.hpp"

namespace fcshand {

enum class FrictionState { High, Low };
enum class SlipOutcome { SlidesInGrip, HeldFixed };

std::string_view to_string(FrictionState s);
std::string_view to_string(SlipOutcome s);

struct HandConfig {
  int n_fingers = 2;
  double mu_high = 2.0;
  double mu_low = 0.2;
  std::optional<double> mu_pivot_crit;  // unset: midway between mu_low and mu_high
  Length max_opening = mm(73.0);

  double mu(FrictionState s) const { return s == FrictionState::High ? mu_high : mu_low; }
  double pivot_threshold() const;
  void validate() const;
};

struct GraspScene {
  Length object_width;
  double object_mass = 0.0;  // kg
  FrictionState friction = FrictionState::High;

  void validate() const;
};

// Coulomb holding capacity: tip force * finger count * mu.
Force payload(Force tip, const HandConfig& hand, double mu);

bool can_grasp(const GraspScene& scene, const HandConfig& hand, Force tip, double g = 9.81);

SlipOutcome placement_slip(const GraspScene& scene, const HandConfig& hand, Force tip, double g = 9.81);

bool pivot_feasible(double mu, const HandConfig& hand);

/// Surface friction over grasp episodes. Any injection makes the surface
/// slippery until the object is released, after which the lubricant has
/// evaporated and a fresh episode starts high-friction.
class FrictionTracker {
 public:
  void record_injection(bool active) { injected_ = injected_ || active; }
  void release() { injected_ = false; }
  FrictionState state() const { return injected_ ? FrictionState::Low : FrictionState::High; }

 private:
  bool injected_ = false;
};

// Friction of the current episode given its injection flags.
template <typename Range>
FrictionState friction_state(const Range& injection_events) {
  FrictionTracker t;
  for (bool e : injection_events) t.record_injection(e);
  return t.state();
}

/// Disturbance proxies for placing an object. Releasing by opening the
/// fingers drags the object with the finger marks; releasing by slip leaves
/// the finger posture untouched.
struct PlacementDisturbance {
  Length translation;         // mean finger-mark travel during release
  bool rotation_disturbed = false;
};

PlacementDisturbance placement_disturbance(const FingerPose& holding, const FingerPose& released);

}  // namespace fcshand
