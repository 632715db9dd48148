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

#include "fcshand/fcs.hpp"

#include <cmath>
#include <stdexcept>

namespace fcshand {

namespace {

void require_flow(VolumetricFlow q, const char* what) {
  if (!(q.si() >= 0.0) || !std::isfinite(q.si())) {
    throw std::invalid_argument(std::string(what) + ": flow must be finite and >= 0");
  }
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

}  // namespace

std::string_view to_string(FcsState s) {
  switch (s) {
    case FcsState::A: return "A";
    case FcsState::B: return "B";
    case FcsState::C: return "C";
  }
  return "?";
}

void FcsConfig::validate() const {
  require_alpha(alpha);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(s3.si() > 0.0)) throw std::invalid_argument("s3 must be > 0");
  if (!(exhaust_port_area.si() >= 0.0)) throw std::invalid_argument("exhaust port area must be >= 0");
  if (!(f_rot.si() >= 0.0)) throw std::invalid_argument("f_rot must be >= 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (f_block_curve.empty()) throw std::invalid_argument("f_block curve needs at least one knot");
}

PiecewiseLinearCurve default_f_block_curve() {
  return PiecewiseLinearCurve({{1.7, 0.98}, {2.0, 0.99}, {2.4, 1.02}, {10.5, 1.34}});
}

FlowSplit split_flow(VolumetricFlow q_src, double alpha) {
  require_flow(q_src, "split_flow");
  require_alpha(alpha);
  const VolumetricFlow q3 = q_src * alpha;
  // q1 taken as the remainder so that q1 + q3 == q_src holds exactly.
  return {q_src - q3, q3};
}

Force lever_force(VolumetricFlow q3, Area s3, Density rho_air) {
  require_flow(q3, "lever_force");
  if (!(s3.si() > 0.0)) throw std::invalid_argument("lever_force: s3 must be > 0");
  return Force(rho_air.si() * q3.si() * q3.si() / s3.si());
}

Force tube_tip_force(Force f3, double epsilon) {
  if (!(f3.si() >= 0.0)) throw std::invalid_argument("tube_tip_force: f3 must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("tube_tip_force: epsilon must be > 0");
  return f3 * epsilon;
}

Area calibrate_s3(double epsilon, Density rho_air, VolumetricFlow q3, Force f1) {
  if (!(epsilon > 0.0) || !(rho_air.si() > 0.0) || !(q3.si() > 0.0)) {
    throw std::invalid_argument("calibrate_s3: epsilon, rho and q3 must be > 0");
  }
  if (!(f1.si() > 0.0)) throw std::invalid_argument("calibrate_s3: f1 must be > 0");
  return Area(epsilon * rho_air.si() * q3.si() * q3.si() / f1.si());
}

Force blocking_force(VolumetricFlow q1, const PiecewiseLinearCurve& curve) {
  require_flow(q1, "blocking_force");
  return Force(curve(to_lpm(q1)));
}

FcsState classify_state(VolumetricFlow q_src, const FcsConfig& cfg, const PhysConstants& consts) {
  return steady_outputs(q_src, cfg, consts).state;
}

FcsOutputs steady_outputs(VolumetricFlow q_src, const FcsConfig& cfg, const PhysConstants& consts) {
  const auto [q1_open, q3] = split_flow(q_src, cfg.alpha);
  FcsOutputs out;
  out.q3 = q3;
  out.f3 = lever_force(q3, cfg.s3, consts.rho_air);
  out.f1 = tube_tip_force(out.f3, cfg.epsilon);

  if (out.f3 < cfg.f_rot) {
    out.state = FcsState::A;
  } else if (check_blocking(out.f1, blocking_force(q1_open, cfg.f_block_curve))) {
    out.state = FcsState::C;
  } else {
    out.state = FcsState::B;
  }

  switch (out.state) {
    case FcsState::A:
      out.q1 = q1_open;
      out.q2 = VolumetricFlow(0.0);
      out.q_exhaust = q3;
      break;
    case FcsState::B:
      out.q1 = q1_open;
      out.q2 = q3 * cfg.gamma;
      out.q_exhaust = q3 - out.q2;
      break;
    case FcsState::C:
      out.q1 = VolumetricFlow(0.0);
      out.q2 = q3 * cfg.gamma;
      out.q_exhaust = q_src - out.q2;
      break;
  }
  return out;
}

Force calibrate_f_rot(VolumetricFlow q_ab, const FcsConfig& cfg, const PhysConstants& consts) {
  require_flow(q_ab, "calibrate_f_rot");
  // Same arithmetic path as steady_outputs so the flip is exact at q_ab.
  return lever_force(split_flow(q_ab, cfg.alpha).q3, cfg.s3, consts.rho_air);
}

}  // namespace fcshand
