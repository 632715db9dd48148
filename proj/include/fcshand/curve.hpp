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

#include <span>
#include <utility>
#include <vector>

namespace fcshand {

/// Piecewise-linear calibration curve over strictly increasing knots.
///
/// Below the first knot the curve is clamped to the first y value. Above the
/// last knot it extends with the slope of the final segment (a single-knot
/// curve is constant).
class PiecewiseLinearCurve {
 public:
  using Knot = std::pair<double, double>;

  PiecewiseLinearCurve() = default;
  // Throws std::invalid_argument if x is not strictly increasing or a value
  // is not finite.
  explicit PiecewiseLinearCurve(std::vector<Knot> knots);

  std::span<const Knot> knots() const { return knots_; }
  bool empty() const { return knots_.empty(); }

  // Throws std::logic_error on an empty curve.
  double operator()(double x) const;

 private:
  std::vector<Knot> knots_;
};

inline double eval_curve(const PiecewiseLinearCurve& curve, double x) { return curve(x); }

}  // namespace fcshand
