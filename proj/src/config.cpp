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

#include "fcshand/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fcshand {

namespace {

using nlohmann::json;

// Reads one section object, rejecting any key not in the schema.
class Section {
 public:
  Section(const json& doc, std::string name) : name_(std::move(name)) {
    if (!doc.contains(name_)) return;
    node_ = &doc.at(name_);
    if (!node_->is_object()) throw ConfigError(name_, "expected an object");
    const auto& allowed = config_schema().at(name_);
    for (const auto& [key, value] : node_->items()) {
      if (!allowed.contains(key)) throw ConfigError(path(key), "unknown key");
    }
  }

  bool has(const std::string& key) const { return node_ && node_->contains(key); }

  std::string path(const std::string& key) const { return name_ + "." + key; }

  bool number(const std::string& key, double& out) const {
    if (!has(key)) return false;
    const json& v = node_->at(key);
    if (!v.is_number()) throw ConfigError(path(key), "expected a number");
    out = v.get<double>();
    if (!std::isfinite(out)) throw ConfigError(path(key), "must be finite");
    return true;
  }

  bool integer(const std::string& key, int& out) const {
    if (!has(key)) return false;
    const json& v = node_->at(key);
    if (!v.is_number_integer()) throw ConfigError(path(key), "expected an integer");
    out = v.get<int>();
    return true;
  }

  bool boolean(const std::string& key, bool& out) const {
    if (!has(key)) return false;
    const json& v = node_->at(key);
    if (!v.is_boolean()) throw ConfigError(path(key), "expected true or false");
    out = v.get<bool>();
    return true;
  }

  bool knots(const std::string& key, PiecewiseLinearCurve& out) const {
    if (!has(key)) return false;
    const json& v = node_->at(key);
    if (!v.is_array()) throw ConfigError(path(key), "expected a list of [x, y] pairs");
    std::vector<PiecewiseLinearCurve::Knot> ks;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const json& k = v[i];
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
        throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected [x, y]");
      }
      ks.emplace_back(k[0].get<double>(), k[1].get<double>());
    }
    try {
      out = PiecewiseLinearCurve(std::move(ks));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path(key), e.what());
    }
    return true;
  }

 private:
  std::string name_;
  const json* node_ = nullptr;
};

template <typename Fn>
void validate_section(const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(name, e.what());
  }
}

json knots_to_json(const PiecewiseLinearCurve& c) {
  json arr = json::array();
  for (const auto& [x, y] : c.knots()) arr.push_back({x, y});
  return arr;
}

}  // namespace

const std::map<std::string, std::set<std::string>>& config_schema() {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"constants", {"rho_air", "g", "p_atm_pa"}},
      {"fcs",
       {"alpha", "epsilon", "s3_mm2", "exhaust_port_mm2", "gamma", "f_rot_N", "q_ab_lpm", "f_block_knots"}},
      {"venturi",
       {"s_in_mm2", "s_out_mm2", "s_t_mm2", "h_t_mm", "rho_lub", "p_src_kpa_abs", "s_src_mm2", "s_e_mm2",
        "use_simplified_inlet", "discharge_coefficient"}},
      {"finger",
       {"finger_length_mm", "pressure_map_knots", "curvature_gain", "tipforce_gain_n_per_kpa", "p_max_kpa"}},
      {"hand", {"n_fingers", "mu_high", "mu_low", "mu_pivot_crit", "max_opening_mm"}},
  };
  return schema;
}

void SystemConfig::validate() const {
  validate_section("constants", [&] { consts.validate(); });
  validate_section("fcs", [&] { fcs.validate(); });
  validate_section("venturi", [&] { venturi.validate(); });
  validate_section("finger", [&] { finger.validate(); });
  validate_section("hand", [&] { hand.validate(); });
}

VolumetricFlow rotation_onset_flow(const FcsConfig& cfg, const PhysConstants& consts) {
  // f_rot = rho * (alpha * q)^2 / s3
  return VolumetricFlow(std::sqrt(cfg.f_rot.si() * cfg.s3.si() / consts.rho_air.si()) / cfg.alpha);
}

SystemConfig apply_config(const json& doc, const SystemConfig& base) {
  if (!doc.is_object()) throw ConfigError("", "config document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!config_schema().contains(key)) throw ConfigError(key, "unknown section");
  }

  SystemConfig cfg = base;
  const VolumetricFlow base_q_ab = rotation_onset_flow(base.fcs, base.consts);
  double v = 0.0;

  const Section constants(doc, "constants");
  if (constants.number("rho_air", v)) cfg.consts.rho_air = kg_per_m3(v);
  if (constants.number("g", v)) cfg.consts.g = v;
  if (constants.number("p_atm_pa", v)) cfg.consts.p_atm = pascal(v);

  const Section fcs(doc, "fcs");
  if (fcs.number("alpha", v)) cfg.fcs.alpha = v;
  if (fcs.number("epsilon", v)) cfg.fcs.epsilon = v;
  if (fcs.number("s3_mm2", v)) cfg.fcs.s3 = mm2(v);
  if (fcs.number("exhaust_port_mm2", v)) cfg.fcs.exhaust_port_area = mm2(v);
  if (fcs.number("gamma", v)) cfg.fcs.gamma = v;
  fcs.knots("f_block_knots", cfg.fcs.f_block_curve);

  const Section venturi(doc, "venturi");
  if (venturi.number("s_in_mm2", v)) cfg.venturi.s_in = mm2(v);
  if (venturi.number("s_out_mm2", v)) cfg.venturi.s_out = mm2(v);
  if (venturi.number("s_t_mm2", v)) cfg.venturi.s_t = mm2(v);
  if (venturi.number("h_t_mm", v)) cfg.venturi.h_t = mm(v);
  if (venturi.number("rho_lub", v)) cfg.consts.rho_lubricant = kg_per_m3(v);
  if (venturi.number("p_src_kpa_abs", v)) cfg.venturi.p_src = kpa(v);
  if (venturi.number("s_src_mm2", v)) cfg.venturi.s_src = mm2(v);
  if (venturi.number("s_e_mm2", v)) cfg.venturi.s_e = mm2(v);
  venturi.boolean("use_simplified_inlet", cfg.venturi.use_simplified_inlet);
  if (venturi.number("discharge_coefficient", v)) cfg.venturi.discharge_coefficient = v;

  const Section finger(doc, "finger");
  if (finger.number("finger_length_mm", v)) cfg.finger.finger_length = mm(v);
  finger.knots("pressure_map_knots", cfg.finger.pressure_map);
  if (finger.number("curvature_gain", v)) cfg.finger.curvature_gain = v;
  if (finger.number("tipforce_gain_n_per_kpa", v)) cfg.finger.tipforce_gain = v;
  if (finger.number("p_max_kpa", v)) cfg.finger.p_max = kpa(v);

  const Section hand(doc, "hand");
  hand.integer("n_fingers", cfg.hand.n_fingers);
  if (hand.number("mu_high", v)) cfg.hand.mu_high = v;
  if (hand.number("mu_low", v)) cfg.hand.mu_low = v;
  if (hand.number("mu_pivot_crit", v)) cfg.hand.mu_pivot_crit = v;
  if (hand.number("max_opening_mm", v)) cfg.hand.max_opening = mm(v);

  cfg.validate();

  // Rotation onset depends on alpha, s3 and rho, so resolve it last.
  const bool has_f_rot = fcs.number("f_rot_N", v);
  if (has_f_rot) cfg.fcs.f_rot = newton(v);
  double q_ab = 0.0;
  if (fcs.number("q_ab_lpm", q_ab)) {
    if (has_f_rot) throw ConfigError("fcs.q_ab_lpm", "give either f_rot_N or q_ab_lpm, not both");
    if (!(q_ab >= 0.0)) throw ConfigError("fcs.q_ab_lpm", "must be >= 0");
    cfg.fcs.f_rot = calibrate_f_rot(lpm(q_ab), cfg.fcs, cfg.consts);
  } else if (!has_f_rot) {
    cfg.fcs.f_rot = calibrate_f_rot(base_q_ab, cfg.fcs, cfg.consts);
  }
  validate_section("fcs", [&] { cfg.fcs.validate(); });
  return cfg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path, std::string("invalid JSON: ") + e.what());
  }
}

SystemConfig load_config_file(const std::string& path, const SystemConfig& base) {
  return apply_config(read_json_file(path), base);
}

json to_json(const SystemConfig& cfg) {
  json doc;
  doc["constants"] = {{"rho_air", cfg.consts.rho_air.si()}, {"g", cfg.consts.g}, {"p_atm_pa", cfg.consts.p_atm.si()}};
  doc["fcs"] = {{"alpha", cfg.fcs.alpha},
                {"epsilon", cfg.fcs.epsilon},
                {"s3_mm2", to_mm2(cfg.fcs.s3)},
                {"exhaust_port_mm2", to_mm2(cfg.fcs.exhaust_port_area)},
                {"gamma", cfg.fcs.gamma},
                {"f_rot_N", cfg.fcs.f_rot.si()},
                {"f_block_knots", knots_to_json(cfg.fcs.f_block_curve)}};
  json venturi = {{"s_in_mm2", to_mm2(cfg.venturi.s_in)},
                  {"s_out_mm2", to_mm2(cfg.venturi.s_out)},
                  {"s_t_mm2", to_mm2(cfg.venturi.s_t)},
                  {"h_t_mm", to_mm(cfg.venturi.h_t)},
                  {"rho_lub", cfg.consts.rho_lubricant.si()},
                  {"use_simplified_inlet", cfg.venturi.use_simplified_inlet},
                  {"discharge_coefficient", cfg.venturi.discharge_coefficient}};
  if (cfg.venturi.p_src) venturi["p_src_kpa_abs"] = to_kpa(*cfg.venturi.p_src);
  if (cfg.venturi.s_src) venturi["s_src_mm2"] = to_mm2(*cfg.venturi.s_src);
  if (cfg.venturi.s_e) venturi["s_e_mm2"] = to_mm2(*cfg.venturi.s_e);
  doc["venturi"] = venturi;
  json finger = {{"finger_length_mm", to_mm(cfg.finger.finger_length)},
                 {"pressure_map_knots", knots_to_json(cfg.finger.pressure_map)},
                 {"tipforce_gain_n_per_kpa", cfg.finger.tipforce_gain},
                 {"p_max_kpa", to_kpa(cfg.finger.p_max)}};
  if (cfg.finger.curvature_gain) finger["curvature_gain"] = *cfg.finger.curvature_gain;
  doc["finger"] = finger;
  json hand = {{"n_fingers", cfg.hand.n_fingers},
               {"mu_high", cfg.hand.mu_high},
               {"mu_low", cfg.hand.mu_low},
               {"max_opening_mm", to_mm(cfg.hand.max_opening)}};
  if (cfg.hand.mu_pivot_crit) hand["mu_pivot_crit"] = *cfg.hand.mu_pivot_crit;
  doc["hand"] = hand;
  return doc;
}

}  // namespace fcshand
