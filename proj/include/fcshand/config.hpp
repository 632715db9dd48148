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

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fcshand/fcs.hpp"
#include "fcshand/finger.hpp"
#include "fcshand/hand.hpp"
#include "fcshand/units.hpp"
#include "fcshand/venturi.hpp"

namespace fcshand {

/// Malformed configuration or scenario input. path() names the offending key
/// as a dotted path, e.g. "fcs.alpha".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct SystemConfig {
  PhysConstants consts;
  FcsConfig fcs;
  VenturiConfig venturi;
  FingerConfig finger;
  HandConfig hand;

  // Throws ConfigError naming the section that failed.
  void validate() const;
};

// Accepted keys per section.
const std::map<std::string, std::set<std::string>>& config_schema();

// Applies a JSON document of overrides on top of base. Every key must be one
// of the documented ones; anything else is a ConfigError. When the document
// sets neither fcs.f_rot_N nor fcs.q_ab_lpm, f_rot is re-derived so that the
// base configuration's A->B transition flow is preserved.
SystemConfig apply_config(const nlohmann::json& doc, const SystemConfig& base);

SystemConfig load_config_file(const std::string& path, const SystemConfig& base);

// Full document in config-file units. Applying it to any base reproduces cfg
// up to unit-conversion rounding.
nlohmann::json to_json(const SystemConfig& cfg);

// Flow at which the lever starts to rotate under cfg.
VolumetricFlow rotation_onset_flow(const FcsConfig& cfg, const PhysConstants& consts);

nlohmann::json read_json_file(const std::string& path);

}  // namespace fcshand
