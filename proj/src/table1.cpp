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

#include "fcshand/table1.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fcshand/config.hpp"

namespace fcshand {

namespace {

const PrototypeSpec* find_label(const std::vector<PrototypeSpec>& specs, const std::string& label) {
  auto it = std::find_if(specs.begin(), specs.end(), [&](const auto& s) { return s.label == label; });
  return it == specs.end() ? nullptr : &*it;
}

}  // namespace

std::string_view to_string(BlockingOutcome o) {
  return o == BlockingOutcome::Success ? "Success" : "Failure";
}

std::vector<PrototypeSpec> builtin_prototypes() {
  using enum BlockingOutcome;
  return {
      {"A", 7.1, 2.6, 2.0, 118.0, Success, 116.0, 1.01, 0.99},
      {"B", 0.0, 2.6, 10.5, 144.0, Failure, 134.0, 1.18, 1.34},
      {"C", 7.1, 1.5, 2.4, 148.0, Failure, 146.0, 0.90, 1.02},
      {"D", 50.3, 2.6, 1.7, 117.0, Success, 115.0, 0.99, 0.98},
  };
}

std::vector<PrototypeSpec> parse_prototypes(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("prototypes") || !doc["prototypes"].is_array()) {
    throw ConfigError("prototypes", "expected {\"prototypes\": [...]}");
  }
  std::vector<PrototypeSpec> out;
  const auto& rows = doc["prototypes"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = "prototypes[" + std::to_string(i) + "]";
    const auto& r = rows[i];
    auto num = [&](const char* key) {
      if (!r.contains(key) || !r[key].is_number()) throw ConfigError(at + "." + key, "expected a number");
      return r[key].get<double>();
    };
    for (const auto& [key, value] : r.items()) {
      static const char* kKeys[] = {"label", "exhaust_port_mm2", "epsilon", "q1_max_lpm", "q_src_max_lpm",
                                    "expected", "q3_lpm", "f1_N", "f_block_N"};
      if (std::none_of(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return key == k; })) {
        throw ConfigError(at + "." + key, "unknown key");
      }
    }
    PrototypeSpec s;
    if (!r.contains("label") || !r["label"].is_string()) throw ConfigError(at + ".label", "expected a string");
    s.label = r["label"].get<std::string>();
    s.exhaust_port_mm2 = num("exhaust_port_mm2");
    s.epsilon = num("epsilon");
    s.q1_max_lpm = num("q1_max_lpm");
    s.q_src_max_lpm = num("q_src_max_lpm");
    const std::string expected = r.value("expected", "");
    if (expected == "Success") {
      s.expected = BlockingOutcome::Success;
    } else if (expected == "Failure") {
      s.expected = BlockingOutcome::Failure;
    } else {
      throw ConfigError(at + ".expected", "expected \"Success\" or \"Failure\"");
    }
    s.q3_lpm = num("q3_lpm");
    s.f1_n = num("f1_N");
    s.f_block_n = num("f_block_N");
    out.push_back(std::move(s));
  }
  return out;
}

double prototype_alpha(const PrototypeSpec& spec) {
  return (spec.q_src_max_lpm - spec.q1_max_lpm) / spec.q_src_max_lpm;
}

Area prototype_s3(const PrototypeSpec& spec, const PhysConstants& consts) {
  return calibrate_s3(spec.epsilon, consts.rho_air, lpm(spec.q_src_max_lpm - spec.q1_max_lpm), newton(spec.f1_n));
}

FcsConfig prototype_fcs_config(const PrototypeSpec& spec, Area s3, VolumetricFlow q_ab,
                               const PhysConstants& consts) {
  FcsConfig cfg;
  cfg.alpha = prototype_alpha(spec);
  cfg.epsilon = spec.epsilon;
  cfg.s3 = s3;
  cfg.exhaust_port_area = mm2(spec.exhaust_port_mm2);
  cfg.f_block_curve = default_f_block_curve();
  cfg.f_rot = calibrate_f_rot(q_ab, cfg, consts);
  return cfg;
}

bool Table1Report::classification_ok() const {
  return missing.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.class_match; });
}

double Table1Report::max_f1_error() const {
  double e = 0.0;
  for (const auto& r : rows) e = std::max(e, r.f1_rel_error);
  return e;
}

Table1Report validate_table1(const std::vector<PrototypeSpec>& specs, const PhysConstants& consts,
                             const PiecewiseLinearCurve& f_block_curve) {
  Table1Report report;
  for (const char* label : {"A", "B", "C", "D"}) {
    if (!find_label(specs, label)) report.missing.emplace_back(label);
  }
  const PrototypeSpec* ref = find_label(specs, "A");
  if (!ref) return report;
  report.reference_s3 = prototype_s3(*ref, consts);

  for (const auto& spec : specs) {
    Table1Row row;
    row.spec = spec;
    const VolumetricFlow q3 = lpm(spec.q_src_max_lpm) - lpm(spec.q1_max_lpm);
    row.q3_lpm = to_lpm(q3);
    row.f1_n = tube_tip_force(lever_force(q3, report.reference_s3, consts.rho_air), spec.epsilon).si();
    row.f1_rel_error = std::abs(row.f1_n - spec.f1_n) / spec.f1_n;
    row.f_block_n = blocking_force(lpm(spec.q1_max_lpm), f_block_curve).si();
    row.table_class = check_blocking(newton(spec.f1_n), newton(spec.f_block_n)) ? BlockingOutcome::Success
                                                                                  : BlockingOutcome::Failure;
    row.recomputed_class = check_blocking(newton(row.f1_n), newton(row.f_block_n)) ? BlockingOutcome::Success
                                                                                   : BlockingOutcome::Failure;
    row.class_match = row.table_class == spec.expected;
    report.rows.push_back(row);
  }
  return report;
}

std::string format_table1(const Table1Report& report) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "reference s3 [mm2]: %.6g\n", to_mm2(report.reference_s3));
  out += buf;
  std::snprintf(buf, sizeof buf, "%-5s %8s %5s %8s %8s %8s %8s %8s %8s %7s %8s %8s %-8s %-8s %-8s %s\n",
                "proto", "port_mm2", "eps", "q1max", "qsrcmax", "q3", "q3_tab", "f1", "f1_tab", "f1_err%",
                "fblock", "fb_tab", "expected", "table", "recomp", "match");
  out += buf;
  for (const auto& r : report.rows) {
    const auto& s = r.spec;
    std::snprintf(buf, sizeof buf,
                  "%-5s %8.1f %5.2f %8.2f %8.1f %8.2f %8.2f %8.3f %8.3f %7.2f %8.3f %8.3f %-8s %-8s %-8s %s\n",
                  s.label.c_str(), s.exhaust_port_mm2, s.epsilon, s.q1_max_lpm, s.q_src_max_lpm, r.q3_lpm, s.q3_lpm,
                  r.f1_n, s.f1_n, 100.0 * r.f1_rel_error, r.f_block_n, s.f_block_n,
                  std::string(to_string(s.expected)).c_str(), std::string(to_string(r.table_class)).c_str(),
                  std::string(to_string(r.recomputed_class)).c_str(), r.class_match ? "yes" : "NO");
    out += buf;
  }
  for (const auto& m : report.missing) out += "missing row: " + m + "\n";
  return out;
}

}  // namespace fcshand
