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

#include "fcshand/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace fcshand {

namespace {

using nlohmann::json;

TaskEvent parse_event(const std::string& s, const std::string& at) {
  if (s == "grasp") return TaskEvent::Grasp;
  if (s == "lift") return TaskEvent::Lift;
  if (s == "place") return TaskEvent::Place;
  if (s == "pivot") return TaskEvent::Pivot;
  throw ConfigError(at, "unknown event \"" + s + "\" (grasp, lift, place, pivot)");
}

void check_keys(const json& obj, const std::string& at, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(at, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(at.empty() ? key : at + "." + key, "unknown key");
  }
}

double number_at(const json& obj, const std::string& key, const std::string& at) {
  const std::string path = at.empty() ? key : at + "." + key;
  if (!obj.contains(key)) throw ConfigError(path, "missing");
  if (!obj[key].is_number()) throw ConfigError(path, "expected a number");
  return obj[key].get<double>();
}

bool has_nan(const TraceRecord& r) {
  for (double v : {r.t, r.q_src_lpm, r.fcs.q1.si(), r.fcs.q2.si(), r.fcs.q_exhaust.si(), r.p_f.si(),
                   r.radius.si(), r.f_tip.si(), r.h_l.si()}) {
    if (std::isnan(v)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(TaskEvent e) {
  switch (e) {
    case TaskEvent::None: return "";
    case TaskEvent::Grasp: return "grasp";
    case TaskEvent::Lift: return "lift";
    case TaskEvent::Place: return "place";
    case TaskEvent::Pivot: return "pivot";
  }
  return "";
}

void Scenario::validate() const {
  if (!(timestep_s > 0.0) || !std::isfinite(timestep_s)) throw ConfigError("timestep_s", "must be > 0");
  bool has_event = false;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const std::string at = "segments[" + std::to_string(i) + "]";
    const auto& s = segments[i];
    if (!(s.duration_s > 0.0) || !std::isfinite(s.duration_s)) throw ConfigError(at + ".duration_s", "must be > 0");
    if (!(s.q_src_lpm >= 0.0) || !std::isfinite(s.q_src_lpm)) throw ConfigError(at + ".q_src_lpm", "must be >= 0");
    if (s.q_src_end_lpm && (!(*s.q_src_end_lpm >= 0.0) || !std::isfinite(*s.q_src_end_lpm))) {
      throw ConfigError(at + ".q_src_end_lpm", "must be >= 0");
    }
    has_event = has_event || s.event != TaskEvent::None;
  }
  if (has_event && !object) throw ConfigError("object", "task events need an object");
  if (object && !(object->width_mm > 0.0)) throw ConfigError("object.width_mm", "must be > 0");
  if (object && !(object->mass_kg >= 0.0)) throw ConfigError("object.mass_kg", "must be >= 0");
}

std::vector<std::string> Scenario::contract_warnings() const {
  std::vector<std::string> out;
  auto outside = [](double q) { return q > kMotionRangeMaxLpm && q != kInjectionCommandLpm; };
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    const double lo = std::min(s.q_src_lpm, s.q_src_end_lpm.value_or(s.q_src_lpm));
    const double hi = std::max(s.q_src_lpm, s.q_src_end_lpm.value_or(s.q_src_lpm));
    // A ramp above 50 L/min always passes through uncontracted flows.
    if (outside(lo) || outside(hi) || (hi > kMotionRangeMaxLpm && lo < hi)) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "segment %zu commands %g-%g L/min, outside the 0-50 L/min motion range and the "
                    "150 L/min injection command",
                    i, lo, hi);
      out.emplace_back(buf);
    }
  }
  return out;
}

Scenario parse_scenario(const json& doc) {
  check_keys(doc, "", {"name", "timestep_s", "object", "segments"});
  Scenario sc;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ConfigError("name", "expected a string");
    sc.name = doc["name"].get<std::string>();
  }
  if (doc.contains("timestep_s")) sc.timestep_s = number_at(doc, "timestep_s", "");
  if (doc.contains("object")) {
    check_keys(doc["object"], "object", {"width_mm", "mass_kg"});
    sc.object = SceneObject{number_at(doc["object"], "width_mm", "object"),
                            number_at(doc["object"], "mass_kg", "object")};
  }
  if (!doc.contains("segments") || !doc["segments"].is_array()) {
    throw ConfigError("segments", "expected a list");
  }
  for (std::size_t i = 0; i < doc["segments"].size(); ++i) {
    const std::string at = "segments[" + std::to_string(i) + "]";
    const json& js = doc["segments"][i];
    check_keys(js, at, {"duration_s", "q_src_lpm", "q_src_end_lpm", "event"});
    Segment seg;
    seg.duration_s = number_at(js, "duration_s", at);
    seg.q_src_lpm = number_at(js, "q_src_lpm", at);
    if (js.contains("q_src_end_lpm")) seg.q_src_end_lpm = number_at(js, "q_src_end_lpm", at);
    if (js.contains("event")) {
      if (!js["event"].is_string()) throw ConfigError(at + ".event", "expected a string");
      seg.event = parse_event(js["event"].get<std::string>(), at + ".event");
    }
    sc.segments.push_back(seg);
  }
  sc.validate();
  return sc;
}

Scenario load_scenario_file(const std::string& path) { return parse_scenario(read_json_file(path)); }

Scenario default_ramp_scenario() {
  Scenario sc;
  sc.name = "ramp_0_150";
  sc.timestep_s = 0.01;
  sc.segments.push_back({15.0, 0.0, 150.0, TaskEvent::None});
  return sc;
}

SimTrace run_scenario(const Scenario& scenario, const SystemConfig& cfg) {
  scenario.validate();
  cfg.validate();

  SimTrace trace;
  trace.warnings = scenario.contract_warnings();

  FrictionTracker friction;
  Pressure sealed_pressure = kpa(0.0);
  FingerPose holding_pose = posture(kpa(0.0), cfg.finger);
  double t_start = 0.0;
  const double dt = scenario.timestep_s;

  for (const Segment& seg : scenario.segments) {
    // Small slack so that a duration that is a multiple of dt does not gain an
    // extra step from rounding.
    const long steps = std::max(1L, static_cast<long>(std::ceil(seg.duration_s / dt - 1e-9)));
    for (long k = 0; k < steps; ++k) {
      const double offset = static_cast<double>(k) * dt;
      TraceRecord rec;
      rec.t = t_start + offset;
      rec.q_src_lpm = seg.q_src_end_lpm
                          ? seg.q_src_lpm + (*seg.q_src_end_lpm - seg.q_src_lpm) * (offset / seg.duration_s)
                          : seg.q_src_lpm;
      const VolumetricFlow q_src = lpm(rec.q_src_lpm);
      rec.fcs = steady_outputs(q_src, cfg.fcs, cfg.consts);

      if (rec.fcs.state == FcsState::C) {
        rec.p_f = sealed_pressure;
      } else {
        rec.p_f = chamber_pressure(q_src, cfg.finger);
        sealed_pressure = rec.p_f;
      }
      rec.radius = bending_radius(rec.p_f, cfg.finger);
      rec.f_tip = tip_force(rec.p_f, cfg.finger);

      const OrificeFlow orifice = orifice_state(q_src, rec.fcs.q2, cfg.venturi, cfg.consts);
      rec.h_l = lubricant_rise(orifice.p_in, orifice.delta_p, cfg.consts.rho_lubricant, cfg.consts.g);
      rec.injection = injection_active(rec.h_l, cfg.venturi.h_t);
      friction.record_injection(rec.injection);

      if (k == 0 && seg.event != TaskEvent::None) {
        GraspScene scene{mm(scenario.object->width_mm), scenario.object->mass_kg, friction.state()};
        const double g = cfg.consts.g;
        switch (seg.event) {
          case TaskEvent::Grasp:
            friction.release();
            scene.friction = friction.state();
            rec.outcome = can_grasp(scene, cfg.hand, rec.f_tip, g) ? "grasped" : "grasp_failed";
            holding_pose = posture(rec.p_f, cfg.finger);
            break;
          case TaskEvent::Lift:
            rec.outcome = placement_slip(scene, cfg.hand, rec.f_tip, g) == SlipOutcome::HeldFixed ? "lift_held"
                                                                                                  : "lift_slipped";
            break;
          case TaskEvent::Place: {
            const bool slides = placement_slip(scene, cfg.hand, rec.f_tip, g) == SlipOutcome::SlidesInGrip;
            // Sliding out leaves the fingers where they are; otherwise they open.
            const FingerPose released = posture(slides ? rec.p_f : kpa(0.0), cfg.finger);
            rec.release_travel = placement_disturbance(holding_pose, released).translation;
            rec.outcome = slides ? "placed_by_slip" : "placed_by_opening";
            friction.release();
            break;
          }
          case TaskEvent::Pivot:
            rec.outcome = pivot_feasible(cfg.hand.mu(scene.friction), cfg.hand) ? "pivot_ok" : "pivot_failed";
            break;
          case TaskEvent::None:
            break;
        }
      }
      rec.friction = friction.state();

      if (has_nan(rec)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "run_scenario: NaN in trace at t=%g s", rec.t);
        throw std::runtime_error(buf);
      }
      trace.records.push_back(std::move(rec));
    }
    t_start += seg.duration_s;
  }
  return trace;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string trace_to_csv(const SimTrace& trace) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  for (const auto& r : trace.records) {
    out += format_number(r.t) + ',' + format_number(r.q_src_lpm) + ',' + format_number(to_lpm(r.fcs.q1)) + ',' +
           format_number(to_lpm(r.fcs.q2)) + ',' + format_number(to_lpm(r.fcs.q_exhaust)) + ',' +
           std::string(to_string(r.fcs.state)) + ',' + format_number(to_kpa(r.p_f)) + ',' +
           format_number(to_mm(r.radius)) + ',' + format_number(r.f_tip.si()) + ',' + (r.injection ? "1" : "0") +
           ',' + std::string(to_string(r.friction)) + '\n';
  }
  return out;
}

}  // namespace fcshand
