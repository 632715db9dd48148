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

#include "fcshand/finger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fcshand {

namespace {

double curvature_at(Pressure p_f, const FingerConfig& cfg) {
  if (!(p_f.si() >= 0.0)) throw std::invalid_argument("chamber pressure must be >= 0");
  if (p_f > cfg.p_max) throw std::invalid_argument("chamber pressure exceeds p_max");
  return cfg.effective_curvature_gain() * to_kpa(p_f);
}

}  // namespace

double FingerConfig::effective_curvature_gain() const {
  if (curvature_gain) return *curvature_gain;
  return std::numbers::pi / (finger_length.si() * kAnchorPressureKpa);
}

void FingerConfig::validate() const {
  if (!(finger_length.si() > 0.0)) throw std::invalid_argument("finger_length must be > 0");
  if (pressure_map.empty()) throw std::invalid_argument("pressure_map needs at least one knot");
  if (pressure_map(0.0) != 0.0) throw std::invalid_argument("pressure_map must give 0 kPa at 0 L/min");
  const auto knots = pressure_map.knots();
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].second < knots[i - 1].second) {
      throw std::invalid_argument("pressure_map must be non-decreasing");
    }
  }
  if (curvature_gain && !(*curvature_gain > 0.0)) throw std::invalid_argument("curvature_gain must be > 0");
  if (!(tipforce_gain >= 0.0)) throw std::invalid_argument("tipforce_gain must be >= 0");
  if (!(p_max.si() > 0.0)) throw std::invalid_argument("p_max must be > 0");
  if (n_marks < 2) throw std::invalid_argument("need at least two marks");
}

Length FingerPose::radius() const {
  if (curvature == 0.0) return Length(std::numeric_limits<double>::infinity());
  return Length(1.0 / curvature);
}

Pressure chamber_pressure(VolumetricFlow q_src, const FingerConfig& cfg) {
  if (!(q_src.si() >= 0.0)) throw std::invalid_argument("chamber_pressure: q_src must be >= 0");
  const double p = std::clamp(cfg.pressure_map(to_lpm(q_src)), 0.0, to_kpa(cfg.p_max));
  return kpa(p);
}

Length bending_radius(Pressure p_f, const FingerConfig& cfg) {
  const double kappa = curvature_at(p_f, cfg);
  if (kappa == 0.0) return Length(std::numeric_limits<double>::infinity());
  return Length(1.0 / kappa);
}

Force tip_force(Pressure p_f, const FingerConfig& cfg) {
  if (!(p_f.si() >= 0.0)) throw std::invalid_argument("tip_force: pressure must be >= 0");
  if (p_f > cfg.p_max) throw std::invalid_argument("tip_force: pressure exceeds p_max");
  return Force(cfg.tipforce_gain * to_kpa(p_f));
}

FingerPose posture(Pressure p_f, const FingerConfig& cfg) {
  FingerPose pose;
  pose.p_f = p_f;
  pose.curvature = curvature_at(p_f, cfg);
  const double length = cfg.finger_length.si();
  const double k = pose.curvature;
  pose.marks.reserve(cfg.n_marks);
  for (std::size_t i = 0; i < cfg.n_marks; ++i) {
    const double s = length * static_cast<double>(i) / static_cast<double>(cfg.n_marks - 1);
    if (k == 0.0) {
      pose.marks.push_back({s, 0.0});
    } else {
      pose.marks.push_back({std::sin(k * s) / k, (1.0 - std::cos(k * s)) / k});
    }
  }
  return pose;
}

Length mean_displacement(const FingerPose& before, const FingerPose& after) {
  if (before.marks.size() != after.marks.size()) {
    throw std::invalid_argument("mean_displacement: mark count mismatch");
  }
  if (before.marks.empty()) throw std::invalid_argument("mean_displacement: no marks");
  double sum = 0.0;
  for (std::size_t i = 0; i < before.marks.size(); ++i) {
    sum += std::hypot(after.marks[i].x - before.marks[i].x, after.marks[i].y - before.marks[i].y);
  }
  return Length(sum / static_cast<double>(before.marks.size()));
}

}  // namespace fcshand
