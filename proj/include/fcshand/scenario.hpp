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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcshand/config.hpp"

namespace fcshand {

enum class TaskEvent { None, Grasp, Lift, Place, Pivot };

std::string_view to_string(TaskEvent e);

inline constexpr double kMotionRangeMaxLpm = 50.0;
inline constexpr double kInjectionCommandLpm = 150.0;

/// Constant or linearly ramped source-flow command. The task event, if any,
/// fires on the first step of the segment.
struct Segment {
  double duration_s = 0.0;
  double q_src_lpm = 0.0;
  std::optional<double> q_src_end_lpm;  // ramp target
  TaskEvent event = TaskEvent::None;
};

struct SceneObject {
  double width_mm = 0.0;
  double mass_kg = 0.0;
};

struct Scenario {
  std::string name;
  double timestep_s = 0.01;
  std::optional<SceneObject> object;
  std::vector<Segment> segments;

  // Throws ConfigError.
  void validate() const;
  // Commands outside the controller contract: neither motion (0-50 L/min)
  // nor the full-open injection command (150 L/min).
  std::vector<std::string> contract_warnings() const;
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario_file(const std::string& path);

// Ramp 0 -> 150 L/min, used when a sweep is given no scenario.
Scenario default_ramp_scenario();

struct TraceRecord {
  double t = 0.0;
  double q_src_lpm = 0.0;
  FcsOutputs fcs;
  Pressure p_f;
  Length radius;
  Force f_tip;
  Length h_l;
  bool injection = false;
  FrictionState friction = FrictionState::High;
  std::string outcome;     // task event result, empty when no event fired
  Length release_travel;   // placement translation proxy, set on Place
};

struct SimTrace {
  std::vector<TraceRecord> records;
  std::vector<std::string> warnings;
};

// Deterministic quasi-static run. The finger chamber is sealed in state C, so
// its pressure holds the last value from before the lever blocked tube 1.
// Throws ConfigError on invalid input and std::runtime_error if a NaN appears.
SimTrace run_scenario(const Scenario& scenario, const SystemConfig& cfg);

inline constexpr const char* kTraceCsvHeader =
    "t,q_src_lpm,q1_lpm,q2_lpm,q_exhaust_lpm,state,p_f_kpa,r_mm,f_tip_n,injection,friction";

// Numbers with 6 significant digits; straight-finger radius prints as "inf".
std::string format_number(double v);
std::string trace_to_csv(const SimTrace& trace);

}  // namespace fcshand
