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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcshand/fcs.hpp"
#include "fcshand/units.hpp"

namespace fcshand {

enum class BlockingOutcome { Success, Failure };

std::string_view to_string(BlockingOutcome o);

/// One row of the prototype comparison table: design values, measured
/// flows and the forces estimated from them.
struct PrototypeSpec {
  std::string label;
  double exhaust_port_mm2 = 0.0;
  double epsilon = 0.0;
  double q1_max_lpm = 0.0;
  double q_src_max_lpm = 0.0;
  BlockingOutcome expected = BlockingOutcome::Success;
  double q3_lpm = 0.0;
  double f1_n = 0.0;
  double f_block_n = 0.0;
};

// The four measured prototypes A-D.
std::vector<PrototypeSpec> builtin_prototypes();

// Reads {"prototypes": [{label, exhaust_port_mm2, ...}, ...]}. Throws ConfigError.
std::vector<PrototypeSpec> parse_prototypes(const nlohmann::json& doc);

// Split ratio implied by a row, q3 / q_src_max with q3 = q_src_max - q1_max.
double prototype_alpha(const PrototypeSpec& spec);

// Lever tube area back-solved from a row's q3 and f1.
Area prototype_s3(const PrototypeSpec& spec, const PhysConstants& consts);

// FCS configuration for one prototype, with s3 taken from the reference row
// (Prototype A) and the rotation onset placed at q_ab.
FcsConfig prototype_fcs_config(const PrototypeSpec& spec, Area s3, VolumetricFlow q_ab,
                               const PhysConstants& consts);

struct Table1Row {
  PrototypeSpec spec;
  double q3_lpm = 0.0;        // recomputed
  double f1_n = 0.0;          // recomputed with the reference s3
  double f1_rel_error = 0.0;  // |f1 - f1_table| / f1_table
  double f_block_n = 0.0;     // from the calibration curve at q1_max
  BlockingOutcome table_class = BlockingOutcome::Success;      // table f1 vs table f_block
  BlockingOutcome recomputed_class = BlockingOutcome::Success; // recomputed f1 vs curve f_block
  bool class_match = false;   // table_class == expected
};

struct Table1Report {
  Area reference_s3;
  std::vector<Table1Row> rows;
  std::vector<std::string> missing;  // labels A-D absent from the input

  bool classification_ok() const;
  double max_f1_error() const;
};

Table1Report validate_table1(const std::vector<PrototypeSpec>& specs, const PhysConstants& consts,
                             const PiecewiseLinearCurve& f_block_curve = default_f_block_curve());

// Fixed-column text rendering, stable for golden-file comparison.
std::string format_table1(const Table1Report& report);

}  // namespace fcshand
