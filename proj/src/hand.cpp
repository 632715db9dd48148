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

#include "fcshand/hand.hpp"

#include <stdexcept>

namespace fcshand {

std::string_view to_string(FrictionState s) { return s == FrictionState::High ? "high" : "low"; }

std::string_view to_string(SlipOutcome s) {
  return s == SlipOutcome::SlidesInGrip ? "slides" : "held";
}

double HandConfig::pivot_threshold() const {
  return mu_pivot_crit.value_or(0.5 * (mu_low + mu_high));
}

void HandConfig::validate() const {
  if (n_fingers < 2) throw std::invalid_argument("n_fingers must be >= 2");
  if (!(mu_low > 0.0 && mu_low < mu_high)) throw std::invalid_argument("need 0 < mu_low < mu_high");
  if (mu_pivot_crit && !(*mu_pivot_crit > 0.0)) throw std::invalid_argument("mu_pivot_crit must be > 0");
  if (!(max_opening.si() > 0.0)) throw std::invalid_argument("max_opening must be > 0");
}

void GraspScene::validate() const {
  if (!(object_width.si() > 0.0)) throw std::invalid_argument("object width must be > 0");
  if (!(object_mass >= 0.0)) throw std::invalid_argument("object mass must be >= 0");
}

Force payload(Force tip, const HandConfig& hand, double mu) {
  if (!(tip.si() >= 0.0)) throw std::invalid_argument("payload: tip force must be >= 0");
  return tip * (static_cast<double>(hand.n_fingers) * mu);
}

bool can_grasp(const GraspScene& scene, const HandConfig& hand, Force tip, double g) {
  scene.validate();
  if (!(scene.object_width < hand.max_opening)) return false;
  return Force(scene.object_mass * g) <= payload(tip, hand, hand.mu(scene.friction));
}

SlipOutcome placement_slip(const GraspScene& scene, const HandConfig& hand, Force tip, double g) {
  scene.validate();
  return Force(scene.object_mass * g) > payload(tip, hand, hand.mu(scene.friction))
             ? SlipOutcome::SlidesInGrip
             : SlipOutcome::HeldFixed;
}

bool pivot_feasible(double mu, const HandConfig& hand) {
  if (!(mu > 0.0)) throw std::invalid_argument("pivot_feasible: mu must be > 0");
  return mu <= hand.pivot_threshold();
}

PlacementDisturbance placement_disturbance(const FingerPose& holding, const FingerPose& released) {
  const Length travel = mean_displacement(holding, released);
  return {travel, travel.si() > 0.0};
}

}  // namespace fcshand
