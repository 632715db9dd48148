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

#include "fcshand/design.hpp"

#include <cmath>
#include <cstdio>

#include "fcshand/table1.hpp"

namespace fcshand {

namespace {

std::string fmt_opt(const std::optional<double>& v) {
  if (!v) return "none";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

bool within(const std::optional<double>& got, double want) {
  return got && std::abs(*got - want) <= kDesignToleranceLpm;
}

}  // namespace

ThresholdScan scan_thresholds(const SystemConfig& cfg, double ceiling_lpm) {
  ThresholdScan scan;
  const long last = std::lround(ceiling_lpm * kGridStepsPerLpm);
  for (long k = 0; k <= last; ++k) {
    const double q = static_cast<double>(k) / kGridStepsPerLpm;
    const FcsOutputs out = steady_outputs(lpm(q), cfg.fcs, cfg.consts);
    if (!scan.ab_lpm && out.state != FcsState::A) scan.ab_lpm = q;
    if (!scan.bc_lpm && out.state == FcsState::C) scan.bc_lpm = q;
    if (!scan.injection_lpm) {
      const OrificeFlow f = orifice_state(lpm(q), out.q2, cfg.venturi, cfg.consts);
      const Length h_l = lubricant_rise(f.p_in, f.delta_p, cfg.consts.rho_lubricant, cfg.consts.g);
      if (injection_active(h_l, cfg.venturi.h_t)) {
        scan.injection_lpm = q;
        scan.q2_at_injection_lpm = to_lpm(out.q2);
      }
    }
    if (scan.ab_lpm && scan.bc_lpm && scan.injection_lpm) break;
  }
  return scan;
}

DesignResult design_search(const DesignTargets& t, const SystemConfig& base) {
  if (!(t.q_ab_lpm > 0.0)) throw DesignInfeasible("q_ab", "must be > 0");
  if (!(t.q_bc_lpm > t.q_ab_lpm)) throw DesignInfeasible("ordering", "q_bc must exceed q_ab");
  if (!(t.q_bc_lpm <= kThresholdCeilingLpm)) {
    throw DesignInfeasible("q_bc", "beyond the 200 L/min scan ceiling");
  }
  if (!(t.q2_activation_lpm > 0.0)) throw DesignInfeasible("q2_activation", "must be > 0");

  SystemConfig cfg = base;
  FcsConfig& fcs = cfg.fcs;
  const VolumetricFlow q_bc = lpm(t.q_bc_lpm);
  const FlowSplit at_bc = split_flow(q_bc, fcs.alpha);

  // Lever: f1 meets f_block exactly at q_bc.
  const Force f_block_at_bc = blocking_force(at_bc.q1, fcs.f_block_curve);
  if (!(f_block_at_bc.si() > 0.0)) {
    throw DesignInfeasible("f_block", "blocking force at q_bc must be > 0");
  }
  fcs.s3 = calibrate_s3(fcs.epsilon, cfg.consts.rho_air, at_bc.q3, f_block_at_bc);
  // Rounding can leave f1 a hair under f_block at q_bc itself.
  for (int i = 0; i < 64 && !check_blocking(steady_outputs(q_bc, fcs, cfg.consts).f1, f_block_at_bc); ++i) {
    fcs.s3 = Area(std::nextafter(fcs.s3.si(), 0.0));
  }
  fcs.f_rot = calibrate_f_rot(lpm(t.q_ab_lpm), fcs, cfg.consts);

  // Injection line carries exactly the target q2 at q_bc.
  fcs.gamma = t.q2_activation_lpm / to_lpm(at_bc.q3);
  if (fcs.gamma > 1.0) {
    throw DesignInfeasible("gamma", "q2 target exceeds the tube-3 flow available at q_bc");
  }

  try {
    cfg.venturi.s_out = size_orifice(lpm(t.q2_activation_lpm), cfg.venturi, cfg.consts, q_bc);
  } catch (const std::domain_error& e) {
    throw DesignInfeasible("orifice", e.what());
  }

  DesignResult result;
  result.verification = scan_thresholds(cfg);
  const auto& v = result.verification;
  char buf[256];
  std::string& r = result.report;
  std::snprintf(buf, sizeof buf, "s3_mm2      %.6g\nf_rot_N     %.6g\ngamma       %.6g\ns_out_mm2   %.6g\n",
                to_mm2(fcs.s3), fcs.f_rot.si(), fcs.gamma, to_mm2(cfg.venturi.s_out));
  r += buf;
  std::snprintf(buf, sizeof buf, "%-22s %10s %10s\n", "threshold", "target", "scan");
  r += buf;
  auto line = [&](const char* name, double want, const std::optional<double>& got) {
    std::snprintf(buf, sizeof buf, "%-22s %10.2f %10s\n", name, want, fmt_opt(got).c_str());
    r += buf;
  };
  line("A->B q_src [L/min]", t.q_ab_lpm, v.ab_lpm);
  line("B->C q_src [L/min]", t.q_bc_lpm, v.bc_lpm);
  line("injection q_src", t.q_bc_lpm, v.injection_lpm);
  line("injection q2 [L/min]", t.q2_activation_lpm, v.q2_at_injection_lpm);

  if (!within(v.ab_lpm, t.q_ab_lpm)) throw DesignInfeasible("verification", "A->B threshold off target\n" + r);
  if (!within(v.bc_lpm, t.q_bc_lpm)) {
    throw DesignInfeasible("verification", "f1 crosses f_block away from q_bc\n" + r);
  }
  if (!within(v.injection_lpm, t.q_bc_lpm) || !within(v.q2_at_injection_lpm, t.q2_activation_lpm)) {
    throw DesignInfeasible("verification", "injection threshold off target\n" + r);
  }
  result.config = cfg;
  return result;
}

SystemConfig prototype_a_config() {
  SystemConfig cfg;
  const PrototypeSpec a = builtin_prototypes().front();
  cfg.fcs = prototype_fcs_config(a, prototype_s3(a, cfg.consts), lpm(8.1), cfg.consts);
  return cfg;
}

const SystemConfig& tuned_default_config() {
  static const SystemConfig cfg = design_search(DesignTargets{}, prototype_a_config()).config;
  return cfg;
}

}  // namespace fcshand
