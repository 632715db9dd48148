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

#include <compare>
#include <stdexcept>

namespace fcshand {

// Scalar tagged with its physical kind. The stored value is always SI.
template <typename Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double si) : value_(si) {}

  constexpr double si() const { return value_; }

  constexpr Quantity operator+(Quantity o) const { return Quantity(value_ + o.value_); }
  constexpr Quantity operator-(Quantity o) const { return Quantity(value_ - o.value_); }
  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity operator*(double k) const { return Quantity(value_ * k); }
  constexpr Quantity operator/(double k) const { return Quantity(value_ / k); }
  constexpr double operator/(Quantity o) const { return value_ / o.value_; }
  constexpr Quantity& operator+=(Quantity o) { value_ += o.value_; return *this; }
  constexpr Quantity& operator-=(Quantity o) { value_ -= o.value_; return *this; }

  constexpr auto operator<=>(const Quantity&) const = default;

 private:
  double value_ = 0.0;
};

template <typename Tag>
constexpr Quantity<Tag> operator*(double k, Quantity<Tag> q) { return q * k; }

struct FlowTag {};
struct PressureTag {};
struct ForceTag {};
struct AreaTag {};
struct LengthTag {};
struct DensityTag {};

using VolumetricFlow = Quantity<FlowTag>;  // m^3/s
using Pressure = Quantity<PressureTag>;    // Pa, gauge unless stated otherwise
using Force = Quantity<ForceTag>;          // N
using Area = Quantity<AreaTag>;            // m^2
using Length = Quantity<LengthTag>;        // m
using Density = Quantity<DensityTag>;      // kg/m^3

inline constexpr double kLpmPerCubicMetrePerSecond = 60000.0;

// Unit helpers for the I/O boundary. Everything internal is SI.
constexpr VolumetricFlow lpm(double v) { return VolumetricFlow(v / kLpmPerCubicMetrePerSecond); }
constexpr double to_lpm(VolumetricFlow q) { return q.si() * kLpmPerCubicMetrePerSecond; }
constexpr Pressure pascal(double v) { return Pressure(v); }
constexpr Pressure kpa(double v) { return Pressure(v * 1e3); }
constexpr double to_kpa(Pressure p) { return p.si() / 1e3; }
constexpr Force newton(double v) { return Force(v); }
constexpr Area m2(double v) { return Area(v); }
constexpr Area mm2(double v) { return Area(v * 1e-6); }
constexpr double to_mm2(Area a) { return a.si() / 1e-6; }
constexpr Length metre(double v) { return Length(v); }
constexpr Length mm(double v) { return Length(v * 1e-3); }
constexpr double to_mm(Length l) { return l.si() / 1e-3; }
constexpr Density kg_per_m3(double v) { return Density(v); }

// L/min -> m^3/s, rejecting negative flows.
VolumetricFlow convert_flow(double value_lpm);

struct PhysConstants {
  Density rho_air = kg_per_m3(1.2);
  Density rho_lubricant = kg_per_m3(789.0);  // anhydrous ethanol
  double g = 9.81;                           // m/s^2
  Pressure p_atm = pascal(101325.0);         // absolute

  // Throws std::invalid_argument unless every constant is strictly positive.
  void validate() const;
};

}  // namespace fcshand
