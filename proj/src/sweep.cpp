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

#include "fcshand/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace fcshand {

namespace {

std::pair<std::string, std::string> split_path(const std::string& path) {
  const auto dot = path.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == path.size() ||
      path.find('.', dot + 1) != std::string::npos) {
    throw ConfigError(path, "parameter path must look like section.key");
  }
  return {path.substr(0, dot), path.substr(dot + 1)};
}

}  // namespace

void check_parameter_path(const std::string& path) {
  const auto [section, key] = split_path(path);
  const auto& schema = config_schema();
  if (!schema.contains(section) || !schema.at(section).contains(key)) {
    throw ConfigError(path, "unknown parameter");
  }
}

SystemConfig with_parameter(const SystemConfig& base, const std::string& path, double value) {
  check_parameter_path(path);
  const auto [section, key] = split_path(path);
  nlohmann::json doc;
  if (std::floor(value) == value && std::abs(value) < 1e15) {
    doc[section][key] = static_cast<long long>(value);
  } else {
    doc[section][key] = value;
  }
  return apply_config(doc, base);
}

std::string sweep(const SystemConfig& base, const std::string& path, const std::vector<double>& values,
                  const Scenario& scenario) {
  check_parameter_path(path);

  std::string out = kSweepCsvHeader;
  out += '\n';
  for (double value : values) {
    const SystemConfig cfg = with_parameter(base, path, value);
    const SimTrace trace = run_scenario(scenario, cfg);
    std::optional<double> ab, bc, inj;
    double max_p = 0.0;
    for (const auto& r : trace.records) {
      if (!ab && r.fcs.state != FcsState::A) ab = r.q_src_lpm;
      if (!bc && r.fcs.state == FcsState::C) bc = r.q_src_lpm;
      if (!inj && r.injection) inj = r.q_src_lpm;
      max_p = std::max(max_p, to_kpa(r.p_f));
    }
    const auto activation = activation_threshold(cfg.venturi, cfg.fcs, cfg.consts);
    auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    out += format_number(value) + ',' + cell(ab) + ',' + cell(bc) + ',' + cell(inj) + ',' +
           (activation ? format_number(to_lpm(*activation)) : std::string()) + ',' +
           (trace.records.empty() ? std::string() : std::string(to_string(trace.records.back().fcs.state))) + ',' +
           format_number(max_p) + '\n';
  }
  return out;
}

std::vector<double> parse_values(const std::string& spec) {
  std::vector<double> out;
  if (spec.empty()) return out;
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("values", "not a number: \"" + s + "\"");
    }
    if (used != s.size()) throw ConfigError("values", "not a number: \"" + s + "\"");
    return v;
  };
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ) {
      throw ConfigError("values", "range must be start:stop:step");
    }
    const double start = to_double(a), stop = to_double(b), step = to_double(c);
    if (!(step > 0.0)) throw ConfigError("values", "range step must be > 0");
    const long n = static_cast<long>(std::floor((stop - start) / step + 0.5));
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(item));
  return out;
}

}  // namespace fcshand
