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

#include <string>
#include <vector>

#include "fcshand/config.hpp"
#include "fcshand/scenario.hpp"

namespace fcshand {

inline constexpr const char* kSweepCsvHeader =
    "value,ab_lpm,bc_lpm,injection_lpm,activation_threshold_lpm,final_state,max_p_f_kpa";

// Throws ConfigError unless path is "section.key" for a documented key.
void check_parameter_path(const std::string& path);

// Sets one config key, given as "section.key" in config-file units, on top of
// base. Unknown paths are a ConfigError.
SystemConfig with_parameter(const SystemConfig& base, const std::string& path, double value);

/// Runs the scenario once per value and emits one summary row each, in input
/// order: first q_src reaching state B, state C and active injection within
/// the trace (empty if never), the injector's own activation threshold over
/// 0-200 L/min, the final state and the peak chamber pressure.
std::string sweep(const SystemConfig& base, const std::string& path, const std::vector<double>& values,
                  const Scenario& scenario);

// "a:b:step" inclusive of b within half a step, or "v1,v2,...". Empty string
// gives an empty list.
std::vector<double> parse_values(const std::string& spec);

}  // namespace fcshand
