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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fcshand/design.hpp"
#include "fcshand/fcs.hpp"
#include "fcshand/table1.hpp"

namespace fcshand {
namespace {

const PhysConstants kConsts{};

// Prototype A straight from its table row: alpha = 116/118, s3 back-solved
// from f1 = 1.01 N, rotation onset at 8.1 L/min.
FcsConfig prototype_a() { return prototype_a_config().fcs; }

TEST(SplitFlow, Examples) {
  const auto a = split_flow(lpm(118.0), 0.9831);
  EXPECT_NEAR(to_lpm(a.q1), 2.0, 0.01);
  EXPECT_NEAR(to_lpm(a.q3), 116.0, 0.01);
  EXPECT_EQ((a.q1 + a.q3).si(), lpm(118.0).si());

  const auto zero = split_flow(lpm(0.0), 0.3);
  EXPECT_EQ(zero.q1.si(), 0.0);
  EXPECT_EQ(zero.q3.si(), 0.0);

  const auto half = split_flow(lpm(100.0), 0.5);
  EXPECT_DOUBLE_EQ(to_lpm(half.q1), 50.0);
  EXPECT_DOUBLE_EQ(to_lpm(half.q3), 50.0);
}

TEST(SplitFlow, RejectsAlphaOutsideOpenInterval) {
  EXPECT_THROW(split_flow(lpm(10.0), 0.0), std::invalid_argument);
  EXPECT_THROW(split_flow(lpm(10.0), 1.0), std::invalid_argument);
  EXPECT_THROW(split_flow(lpm(-1.0), 0.5), std::invalid_argument);
}

TEST(LeverForce, Examples) {
  EXPECT_EQ(lever_force(lpm(0.0), m2(1.155e-5), kg_per_m3(1.2)).si(), 0.0);
  // 1.2 * (116/60000)^2 / 1.155e-5
  EXPECT_NEAR(lever_force(lpm(116.0), m2(1.155e-5), kg_per_m3(1.2)).si(), 0.388341, 1e-6);
  const double base = lever_force(lpm(37.0), m2(2e-5), kg_per_m3(1.2)).si();
  EXPECT_NEAR(lever_force(lpm(74.0), m2(2e-5), kg_per_m3(1.2)).si(), 4.0 * base, 1e-15);
  EXPECT_THROW(lever_force(lpm(1.0), m2(0.0), kg_per_m3(1.2)), std::invalid_argument);
}

TEST(TubeTipForce, Examples) {
  EXPECT_NEAR(tube_tip_force(newton(0.388), 2.6).si(), 1.01, 0.005);
  EXPECT_NEAR(tube_tip_force(newton(0.60), 1.5).si(), 0.90, 1e-12);
  EXPECT_EQ(tube_tip_force(newton(0.123), 1.0).si(), 0.123);
  EXPECT_THROW(tube_tip_force(newton(0.1), 0.0), std::invalid_argument);
}

TEST(CalibrateS3, Examples) {
  const Area s3_a = calibrate_s3(2.6, kg_per_m3(1.2), lpm(116.0), newton(1.01));
  EXPECT_NEAR(s3_a.si(), 1.155e-5, 0.001e-5);
  EXPECT_NEAR(s3_a.si(), 1.15464026e-5, 1e-13);
  const Area s3_d = calibrate_s3(2.6, kg_per_m3(1.2), lpm(115.0), newton(0.99));
  EXPECT_NEAR(s3_d.si(), 1.158e-5, 0.001e-5);
  const Area doubled = calibrate_s3(2.6, kg_per_m3(1.2), lpm(116.0), newton(2.02));
  EXPECT_NEAR(doubled.si(), s3_a.si() / 2.0, 1e-18);
  EXPECT_THROW(calibrate_s3(2.6, kg_per_m3(1.2), lpm(116.0), newton(0.0)), std::invalid_argument);
}

TEST(CalibrateS3, RoundTripProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> eps(0.5, 5.0), q(1.0, 200.0), f(0.01, 5.0), rho(0.8, 1.5);
  for (int i = 0; i < 500; ++i) {
    const double e = eps(rng);
    const Density r = kg_per_m3(rho(rng));
    const VolumetricFlow q3 = lpm(q(rng));
    const Force f1 = newton(f(rng));
    const Area s3 = calibrate_s3(e, r, q3, f1);
    const Force back = tube_tip_force(lever_force(q3, s3, r), e);
    EXPECT_LE(std::abs(back.si() - f1.si()), 1e-9 * f1.si());
  }
}

TEST(BlockingForce, TableAnchors) {
  const auto curve = default_f_block_curve();
  EXPECT_EQ(blocking_force(lpm(2.0), curve).si(), 0.99);
  EXPECT_EQ(blocking_force(lpm(10.5), curve).si(), 1.34);
  EXPECT_EQ(blocking_force(lpm(1.7), curve).si(), 0.98);
}

TEST(CheckBlocking, TableRows) {
  EXPECT_TRUE(check_blocking(newton(1.01), newton(0.99)));
  EXPECT_FALSE(check_blocking(newton(1.18), newton(1.34)));
  EXPECT_FALSE(check_blocking(newton(0.90), newton(1.02)));
  EXPECT_TRUE(check_blocking(newton(0.99), newton(0.98)));
  EXPECT_TRUE(check_blocking(newton(1.0), newton(1.0)));
}

TEST(ClassifyState, PrototypeARegimes) {
  for (const FcsConfig& cfg : {prototype_a(), tuned_default_config().fcs}) {
    EXPECT_EQ(classify_state(lpm(0.0), cfg, kConsts), FcsState::A);
    EXPECT_EQ(classify_state(lpm(5.0), cfg, kConsts), FcsState::A);
    EXPECT_EQ(classify_state(lpm(50.0), cfg, kConsts), FcsState::B);
    EXPECT_EQ(classify_state(lpm(150.0), cfg, kConsts), FcsState::C);
  }
}

TEST(CalibrateFRot, Examples) {
  const FcsConfig cfg = prototype_a();
  const Force f_rot = calibrate_f_rot(lpm(8.1), cfg, kConsts);
  // 1.2 * (116/118 * 8.1/60000)^2 / 1.1546403e-5
  EXPECT_NEAR(f_rot.si(), 1.830434e-3, 1e-9);
  EXPECT_EQ(calibrate_f_rot(lpm(0.0), cfg, kConsts).si(), 0.0);
  EXPECT_NEAR(calibrate_f_rot(lpm(16.2), cfg, kConsts).si(), 4.0 * f_rot.si(), 1e-15);
}

TEST(CalibrateFRot, GridScanFlipsAtTarget) {
  FcsConfig cfg = prototype_a();
  cfg.f_rot = calibrate_f_rot(lpm(8.1), cfg, kConsts);
  long first_b = -1;
  for (long k = 0; k <= 2000; ++k) {
    if (classify_state(lpm(k / 100.0), cfg, kConsts) != FcsState::A) {
      first_b = k;
      break;
    }
  }
  EXPECT_EQ(first_b, 810);
}

TEST(SteadyOutputs, RoutingPerState) {
  const FcsConfig cfg = tuned_default_config().fcs;
  const auto zero = steady_outputs(lpm(0.0), cfg, kConsts);
  EXPECT_EQ(zero.state, FcsState::A);
  EXPECT_EQ(zero.q1.si(), 0.0);
  EXPECT_EQ(zero.q2.si(), 0.0);
  EXPECT_EQ(zero.q_exhaust.si(), 0.0);

  const auto a = steady_outputs(lpm(5.0), cfg, kConsts);
  EXPECT_EQ(a.q2.si(), 0.0);
  EXPECT_DOUBLE_EQ(to_lpm(a.q_exhaust), 5.0 * cfg.alpha);

  const auto b = steady_outputs(lpm(50.0), cfg, kConsts);
  EXPECT_DOUBLE_EQ(to_lpm(b.q2), cfg.gamma * cfg.alpha * 50.0);
  EXPECT_NEAR(to_lpm(b.q1), (1.0 - cfg.alpha) * 50.0, 1e-12);

  const auto at_bc = steady_outputs(lpm(118.0), cfg, kConsts);
  EXPECT_NEAR(to_lpm(at_bc.q2), 44.0, 1e-9);

  const auto c = steady_outputs(lpm(150.0), cfg, kConsts);
  EXPECT_EQ(c.state, FcsState::C);
  EXPECT_EQ(c.q1.si(), 0.0);
}

TEST(SteadyOutputs, GammaFromPaperAnchors) {
  // q2 = gamma * alpha * q_src hits 44 L/min at 118 L/min.
  const double alpha = 0.9831;
  const double gamma = 44.0 / (alpha * 118.0);
  EXPECT_NEAR(gamma, 0.3793, 1e-4);
}

std::vector<FcsConfig> prototype_configs() {
  std::vector<FcsConfig> out;
  const auto rows = builtin_prototypes();
  const Area s3 = prototype_s3(rows.front(), kConsts);
  for (const auto& row : rows) out.push_back(prototype_fcs_config(row, s3, lpm(8.1), kConsts));
  return out;
}

TEST(FcsProperties, ConservationOverRandomConfigs) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> alpha(0.01, 0.99), eps(0.5, 4.0), s3_mm2(2.0, 40.0), gamma(0.01, 1.0),
      q(0.0, 200.0), f_rot(0.0, 0.02);
  for (int i = 0; i < 1000; ++i) {
    FcsConfig cfg;
    cfg.alpha = alpha(rng);
    cfg.epsilon = eps(rng);
    cfg.s3 = mm2(s3_mm2(rng));
    cfg.gamma = gamma(rng);
    cfg.f_rot = newton(f_rot(rng));
    cfg.f_block_curve = default_f_block_curve();
    const VolumetricFlow q_src = lpm(q(rng));
    const FcsOutputs out = steady_outputs(q_src, cfg, kConsts);
    const double sum = (out.q1 + out.q2 + out.q_exhaust).si();
    EXPECT_LE(std::abs(sum - q_src.si()), 1e-9 * q_src.si());
    EXPECT_GE(out.q1.si(), 0.0);
    EXPECT_GE(out.q2.si(), 0.0);
    EXPECT_GE(out.q_exhaust.si(), 0.0);
    if (out.state == FcsState::C) EXPECT_EQ(out.q1.si(), 0.0);
    if (out.state == FcsState::A) EXPECT_EQ(out.q2.si(), 0.0);
  }
}

TEST(FcsProperties, StateNonDecreasingOnPrototypes) {
  auto configs = prototype_configs();
  configs.push_back(tuned_default_config().fcs);
  for (const auto& cfg : configs) {
    FcsState prev = FcsState::A;
    for (long k = 0; k <= 20000; ++k) {
      const FcsState s = classify_state(lpm(k / 100.0), cfg, kConsts);
      ASSERT_GE(static_cast<int>(s), static_cast<int>(prev)) << "at " << k / 100.0 << " L/min";
      prev = s;
    }
  }
}

TEST(FcsProperties, SingleBlockingIntervalAtCalibration) {
  const FcsConfig cfg = tuned_default_config().fcs;
  bool seen = false;
  double first = -1.0;
  for (long k = 0; k <= 20000; ++k) {
    const double q = k / 100.0;
    const auto split = split_flow(lpm(q), cfg.alpha);
    const bool blocks = check_blocking(tube_tip_force(lever_force(split.q3, cfg.s3, kConsts.rho_air), cfg.epsilon),
                                       blocking_force(split.q1, cfg.f_block_curve));
    if (blocks && !seen) first = q;
    if (seen) ASSERT_TRUE(blocks) << "blocking interval broken at " << q;
    seen = seen || blocks;
  }
  EXPECT_NEAR(first, 118.0, 0.01);
}

TEST(FcsConfig, Validation) {
  FcsConfig cfg = prototype_a();
  EXPECT_NO_THROW(cfg.validate());
  cfg.gamma = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = prototype_a();
  cfg.alpha = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = prototype_a();
  cfg.f_block_curve = PiecewiseLinearCurve{};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace fcshand
