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
#include <stdexcept>
#include <string>

#include "fcshand/config.hpp"

namespace fcshand {

/// Switching points observed on the 0.01 L/min grid.
struct ThresholdScan {
  std::optional<double> ab_lpm;         // first flow in state B or C
  std::optional<double> bc_lpm;         // first flow in state C
  std::optional<double> injection_lpm;  // first flow with the injector active
  std::optional<double> q2_at_injection_lpm;
};

// Brute-force scan of 0..ceiling_lpm at 0.01 L/min.
ThresholdScan scan_thresholds(const SystemConfig& cfg, double ceiling_lpm = kThresholdCeilingLpm);

struct DesignTargets {
  double q_ab_lpm = 8.1;
  double q_bc_lpm = 118.0;
  double q2_activation_lpm = 44.0;
};

inline constexpr double kDesignToleranceLpm = 1.0;

/// Target set that no configuration of the free parameters can meet.
/// constraint() names the binding one.
class DesignInfeasible : public std::runtime_error {
 public:
  DesignInfeasible(std::string constraint, const std::string& message)
      : std::runtime_error(constraint + ": " + message), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

struct DesignResult {
  SystemConfig config;
  ThresholdScan verification;
  std::string report;
};

// Tunes s3, f_rot, gamma and s_out on top of base so that the lever starts
// rotating at q_ab, blocks the finger line at q_bc and the injector fires
// once q2 reaches q2_activation. alpha, epsilon, h_t, s_in and the f_block
// curve are held fixed. Verified by a grid scan; throws DesignInfeasible.
DesignResult design_search(const DesignTargets& targets, const SystemConfig& base);

// Prototype A as measured: s3 back-solved from its table row, rotation onset
// at 8.1 L/min, injector geometry untuned.
SystemConfig prototype_a_config();

// prototype_a_config() after design_search with the default targets.
const SystemConfig& tuned_default_config();

}  // namespace fcshand
