// Copyright 2026 The GIC Region Authors.
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

#ifndef GIC_SCENARIO_H_
#define GIC_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gic/layers.h"
#include "gic/model.h"
#include "gic/optimizer.h"

namespace gic {

// One run configuration. Loaded from a single JSON document; see
// docs/config.md for the schema.
struct Scenario {
  ChannelParams params{0.25, 0.25, 2.0, 2.0, 1.0};
  std::vector<double> mu_grid = DefaultMuGrid();
  OptimizerOptions optimizer;
  std::vector<double> deltas = {1e-1, 5e-2, 2.5e-2, 1.25e-2};
  // Split used by the layer construction; defaults to half of each budget
  // private.
  std::optional<PowerSplit> layer_split;
  PublicBand band = PublicBand::kInterleaved;
  int validate_instances = 50;
  std::string out_dir = "results";
  bool plot = false;
  std::uint64_t seed = 1;
  // Test hook: perturbs one rank value in the validation suite.
  bool inject_fault = false;

  PowerSplit LayerSplit() const;
};

// Parses and validates a JSON document. Throws kConfig (or the channel
// validation errors) on bad input.
Scenario ParseScenario(std::string_view json_text);

// Throws kConfig with "config not found" when the file does not exist.
Scenario LoadScenario(const std::string& path);

// Parses "a,b,c" into a strictly increasing list of nonnegative values.
std::vector<double> ParseMuList(std::string_view text);

// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double v);

}  // namespace gic

#endif  // GIC_SCENARIO_H_
