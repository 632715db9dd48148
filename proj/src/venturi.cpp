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

#include "fcshand/venturi.hpp"

#include "fcshand/search.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fcshand {

void VenturiConfig::validate() const {
  if (!(s_in.si() > 0.0)) throw std::invalid_argument("s_in must be > 0");
  if (!(s_out.si() > 0.0 && s_out < s_in)) throw std::invalid_argument("s_out must satisfy 0 < s_out < s_in");
  if (!(s_t.si() > 0.0)) throw std::invalid_argument("s_t must be > 0");
  if (!(h_t.si() > 0.0)) throw std::invalid_argument("h_t must be > 0");
  if (!(discharge_coefficient > 0.0 && discharge_coefficient <= 1.0)) {
    throw std::invalid_argument("discharge_coefficient must lie in (0, 1]");
  }
  if (!use_simplified_inlet) {
    if (!s_src || !s_e || !p_src) {
      throw std::invalid_argument("full inlet model needs s_src, s_e and p_src");
    }
    if (!(s_src->si() > 0.0) || !(s_e->si() > 0.0) || !(p_src->si() > 0.0)) {
      throw std::invalid_argument("s_src, s_e and p_src must be > 0");
    }
  }
}

Pressure orifice_pressure_drop(VolumetricFlow q2, Area s_in, Area s_out, Density rho_air) {
  if (!(q2.si() >= 0.0)) throw std::invalid_argument("orifice_pressure_drop: q2 must be >= 0");
  if (!(s_out.si() > 0.0)) throw std::invalid_argument("orifice_pressure_drop: s_out must be > 0");
  if (s_out > s_in) throw std::invalid_argument("orifice_pressure_drop: s_out > s_in gives no suction");
  const double inv_out = 1.0 / (s_out.si() * s_out.si());
  const double inv_in = 1.0 / (s_in.si() * s_in.si());
  return Pressure(rho_air.si() * q2.si() * q2.si() * (inv_out - inv_in) / 2.0);
}

Pressure inlet_pressure(VolumetricFlow q_src, VolumetricFlow q2, const VenturiConfig& cfg,
                        const PhysConstants& consts) {
  if (!(q2.si() >= 0.0) || q2 > q_src) {
    throw std::invalid_argument("inlet_pressure: need 0 <= q2 <= q_src");
  }
  if (cfg.use_simplified_inlet) return Pressure(0.0);
  if (!cfg.s_src || !cfg.s_e || !cfg.p_src) {
    throw std::invalid_argument("inlet_pressure: full inlet model needs s_src, s_e and p_src");
  }
  const double qs = q_src.si();
  const double qe = (q_src - q2).si();
  const double q = q2.si();
  const double s_src = cfg.s_src->si();
  const double s_e = cfg.s_e->si();
  const double s_in = cfg.s_in.si();
  const double dynamic =
      consts.rho_air.si() / 2.0 * (qs * qs / (s_src * s_src) - qe * qe / (s_e * s_e) - q * q / (s_in * s_in));
  return Pressure(cfg.p_src->si() - consts.p_atm.si() + dynamic);
}

Length lubricant_rise(Pressure p_in, Pressure delta_p, Density rho_lub, double g) {
  if (!(rho_lub.si() > 0.0) || !(g > 0.0)) {
    throw std::invalid_argument("lubricant_rise: density and g must be > 0");
  }
  const Pressure p_out = p_in - delta_p;
  if (p_out.si() >= 0.0) return Length(0.0);
  return Length(-p_out.si() / (rho_lub.si() * g));
}

OrificeFlow orifice_state(VolumetricFlow q_src, VolumetricFlow q2, const VenturiConfig& cfg,
                          const PhysConstants& consts) {
  const Area s_eff = cfg.s_out * cfg.discharge_coefficient;
  OrificeFlow f;
  f.q2 = q2;
  f.v_in = q2.si() / cfg.s_in.si();
  f.v_out = q2.si() / s_eff.si();
  f.p_in = inlet_pressure(q_src, q2, cfg, consts);
  f.delta_p = orifice_pressure_drop(q2, cfg.s_in, s_eff, consts.rho_air);
  f.p_out = f.p_in - f.delta_p;
  return f;
}

bool injection_active_at(VolumetricFlow q_src, const FcsConfig& fcs, const VenturiConfig& cfg,
                         const PhysConstants& consts) {
  const FcsOutputs out = steady_outputs(q_src, fcs, consts);
  const OrificeFlow f = orifice_state(q_src, out.q2, cfg, consts);
  return injection_active(lubricant_rise(f.p_in, f.delta_p, consts.rho_lubricant, consts.g), cfg.h_t);
}

std::optional<VolumetricFlow> activation_threshold(const VenturiConfig& cfg, const FcsConfig& fcs,
                                                   const PhysConstants& consts) {
  auto grid = [](long k) { return lpm(static_cast<double>(k) / kGridStepsPerLpm); };
  const long last = std::lround(kThresholdCeilingLpm * kGridStepsPerLpm);
  const auto k = first_true_bisect([&](long i) { return injection_active_at(grid(i), fcs, cfg, consts); }, last);
  if (!k) return std::nullopt;
  return grid(*k);
}

Area size_orifice(VolumetricFlow target_q2, const VenturiConfig& cfg, const PhysConstants& consts,
                  std::optional<VolumetricFlow> q_src_at_target) {
  if (!(target_q2.si() > 0.0)) throw std::invalid_argument("size_orifice: target q2 must be > 0");
  if (!cfg.use_simplified_inlet && !q_src_at_target) {
    throw std::invalid_argument("size_orifice: full inlet model needs the source flow at the target");
  }

  // Column just reaches h_t: p_out(gauge) = -rho_lub * g * h_t, so the drop
  // must equal p_in + rho_lub * g * h_t.
  const Pressure p_in = inlet_pressure(q_src_at_target.value_or(target_q2), target_q2, cfg, consts);
  const Pressure needed = p_in + Pressure(consts.rho_lubricant.si() * consts.g * cfg.h_t.si());
  if (needed.si() <= 0.0) {
    throw std::domain_error("size_orifice: inlet suction alone lifts the column past h_t");
  }

  auto excess = [&](double s_out) {
    return orifice_pressure_drop(target_q2, cfg.s_in, Area(s_out * cfg.discharge_coefficient),
                                 consts.rho_air)
               .si() -
           needed.si();
  };

  // Drop is strictly decreasing in s_out and vanishes at s_out = s_in.
  double hi = cfg.s_in.si();
  if (excess(hi) >= 0.0) {
    throw std::domain_error("size_orifice: required s_out is not smaller than s_in");
  }
  double lo = hi;
  while (excess(lo) < 0.0) {
    lo /= 2.0;
    if (lo < 1e-15) throw std::domain_error("size_orifice: required s_out underflows");
  }
  // excess(lo) >= 0 > excess(hi)
  constexpr double kTolerance = 1e-15;  // m^2
  while (hi - lo > kTolerance) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) >= 0.0 ? lo : hi) = mid;
  }
  return Area(lo);
}

}  // namespace fcshand
