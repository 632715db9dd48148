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

#include "fcshand/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fcshand {

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<Knot> knots) : knots_(std::move(knots)) {
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const auto& [x, y] = knots_[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("curve knots must be finite");
    }
    if (i > 0 && !(x > knots_[i - 1].first)) {
      throw std::invalid_argument("curve knot x values must be strictly increasing");
    }
  }
}

double PiecewiseLinearCurve::operator()(double x) const {
  if (knots_.empty()) throw std::logic_error("eval_curve: empty curve");
  if (knots_.size() == 1 || x <= knots_.front().first) return knots_.front().second;
  // First knot with knot.x >= x; x > front.x so idx >= 1.
  auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                             [](const Knot& k, double v) { return k.first < v; });
  if (it != knots_.end() && it->first == x) return it->second;
  if (it == knots_.end()) it = std::prev(knots_.end());
  const auto& [x0, y0] = *std::prev(it);
  const auto& [x1, y1] = *it;
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace fcshand
