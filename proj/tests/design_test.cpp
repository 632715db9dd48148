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

#include "fcshand/design.hpp"

namespace fcshand {
namespace {

TEST(DesignSearch, ReproducesDefaultTargets) {
  const DesignResult r = design_search(DesignTargets{}, prototype_a_config());
  const auto& v = r.verification;
  ASSERT_TRUE(v.ab_lpm && v.bc_lpm && v.injection_lpm && v.q2_at_injection_lpm);
  EXPECT_NEAR(*v.ab_lpm, 8.1, 0.1);
  EXPECT_NEAR(*v.bc_lpm, 118.0, 1.0);
  EXPECT_NEAR(*v.injection_lpm, 118.0, 1.0);
  EXPECT_NEAR(*v.q2_at_injection_lpm, 44.0, 1.0);
  EXPECT_NE(r.report.find("B->C"), std::string::npos);
  // alpha, epsilon and h_t are not free parameters.
  EXPECT_EQ(r.config.fcs.alpha, prototype_a_config().fcs.alpha);
  EXPECT_EQ(r.config.fcs.epsilon, 2.6);
  EXPECT_EQ(r.config.venturi.h_t.si(), mm(55.0).si());
}

TEST(DesignSearch, ResimulationStaysWithinTolerance) {
  for (const DesignTargets t : {DesignTargets{8.1, 118.0, 44.0}, DesignTargets{5.0, 100.0, 30.0},
                                DesignTargets{12.0, 140.0, 60.0}}) {
    const DesignResult r = design_search(t, prototype_a_config());
    // Independent re-scan of the returned configuration.
    const ThresholdScan again = scan_thresholds(r.config);
    EXPECT_NEAR(*again.ab_lpm, t.q_ab_lpm, 1.0);
    EXPECT_NEAR(*again.bc_lpm, t.q_bc_lpm, 1.0);
    EXPECT_NEAR(*again.q2_at_injection_lpm, t.q2_activation_lpm, 1.0);
    // No injection while the finger is still under motion control.
    EXPECT_GT(*again.injection_lpm, std::min(50.0, t.q_bc_lpm - 1.0));
  }
}

std::string binding(const DesignTargets& t) {
  try {
    design_search(t, prototype_a_config());
  } catch (const DesignInfeasible& e) {
    return e.constraint();
  }
  return "<feasible>";
}

TEST(DesignSearch, InfeasibleTargetsNameTheConstraint) {
  EXPECT_EQ(binding({20.0, 10.0, 44.0}), "ordering");
  EXPECT_EQ(binding({8.1, 118.0, 130.0}), "gamma");
  EXPECT_EQ(binding({0.0, 118.0, 44.0}), "q_ab");
  EXPECT_EQ(binding({8.1, 250.0, 44.0}), "q_bc");
  EXPECT_EQ(binding({8.1, 118.0, 0.0}), "q2_activation");
}

TEST(DesignSearch, TunedDefaultIsCached) {
  EXPECT_EQ(&tuned_default_config(), &tuned_default_config());
  EXPECT_NEAR(to_mm2(tuned_default_config().fcs.s3), 11.7797, 1e-3);
}

TEST(ScanThresholds, PrototypeAAsMeasuredBlocksEarly) {
  // Using s3 back-solved from f1 = 1.01 N puts the crossing below 118 L/min,
  // because the tabulated f1 exceeds f_block at q_src_max.
  const ThresholdScan scan = scan_thresholds(prototype_a_config());
  ASSERT_TRUE(scan.bc_lpm);
  EXPECT_LT(*scan.bc_lpm, 117.0);
  EXPECT_GT(*scan.bc_lpm, 116.0);
}

}  // namespace
}  // namespace fcshand
