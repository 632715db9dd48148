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

#include "fcshand/units.hpp"

#include <cmath>

namespace fcshand {

VolumetricFlow convert_flow(double value_lpm) {
  if (!(value_lpm >= 0.0) || !std::isfinite(value_lpm)) {
    throw std::invalid_argument("convert_flow: flow must be a finite value >= 0 L/min");
  }
  return lpm(value_lpm);
}

void PhysConstants::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(rho_air.si())) throw std::invalid_argument("rho_air must be > 0");
  if (!positive(rho_lubricant.si())) throw std::invalid_argument("rho_lubricant must be > 0");
  if (!positive(g)) throw std::invalid_argument("g must be > 0");
  if (!positive(p_atm.si())) throw std::invalid_argument("p_atm must be > 0");
}

}  // namespace fcshand
