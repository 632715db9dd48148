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

#include "fcshand/fcs.hpp"
#include "fcshand/units.hpp"

namespace fcshand {

/// Geometry of the Venturi lubricant injector and its air supply.
///
/// The lubricant column balance is hydrostatic, p_atm = rho_lub * g * h_l +
/// p_out(abs), so the supply-tube area s_t does not enter the rise height; it
/// is kept as geometry metadata. The source-side fields (s_src, s_e, p_src)
/// are only read when use_simplified_inlet is false.
struct VenturiConfig {
  Area s_in = mm2(20.0);
  Area s_out = m2(1.618e-5);
  Area s_t = mm2(1.0);
  Length h_t = mm(55.0);
  std::optional<Area> s_src;
  std::optional<Area> s_e;
  std::optional<Pressure> p_src;  // absolute
  bool use_simplified_inlet = true;
  double discharge_coefficient = 1.0;  // scales the effective orifice area

  void validate() const;
};

struct OrificeFlow {
  VolumetricFlow q2;
  double v_in = 0.0;   // m/s
  double v_out = 0.0;  // m/s
  Pressure p_in;       // gauge
  Pressure p_out;      // gauge
  Pressure delta_p;
};

// Bernoulli pressure drop across the constriction, rho*q2^2*(1/s_out^2 - 1/s_in^2)/2.
Pressure orifice_pressure_drop(VolumetricFlow q2, Area s_in, Area s_out, Density rho_air);

// Gauge pressure ahead of the orifice. Zero in simplified mode.
Pressure inlet_pressure(VolumetricFlow q_src, VolumetricFlow q2, const VenturiConfig& cfg,
                        const PhysConstants& consts);

// Height the lubricant column is drawn up by the orifice suction.
Length lubricant_rise(Pressure p_in, Pressure delta_p, Density rho_lub, double g);

inline bool injection_active(Length h_l, Length h_t) { return h_l > h_t; }

OrificeFlow orifice_state(VolumetricFlow q_src, VolumetricFlow q2, const VenturiConfig& cfg,
                          const PhysConstants& consts);

// Full chain q_src -> FCS split -> orifice -> column height -> gate.
bool injection_active_at(VolumetricFlow q_src, const FcsConfig& fcs, const VenturiConfig& cfg,
                         const PhysConstants& consts);

inline constexpr double kGridStepsPerLpm = 100.0;  // 0.01 L/min resolution
inline constexpr double kThresholdCeilingLpm = 200.0;

// Smallest q_src on the 0.01 L/min grid at which injection is active, found
// by bisection over grid indices. nullopt when inactive at the 200 L/min
// ceiling ("never activates").
std::optional<VolumetricFlow> activation_threshold(const VenturiConfig& cfg, const FcsConfig& fcs,
                                                   const PhysConstants& consts);

// Orifice area for which the column reaches exactly h_t at target_q2, found by
// bisection on s_out. Throws std::domain_error when the required area would
// not be smaller than s_in. The source flow at the target only matters for the
// full inlet model, where it is required.
Area size_orifice(VolumetricFlow target_q2, const VenturiConfig& cfg, const PhysConstants& consts,
                  std::optional<VolumetricFlow> q_src_at_target = std::nullopt);

}  // namespace fcshand
