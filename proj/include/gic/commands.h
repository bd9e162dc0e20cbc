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

#ifndef GIC_COMMANDS_H_
#define GIC_COMMANDS_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gic/scenario.h"

namespace gic {

// Process exit codes of the gic tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;

inline constexpr const char* kBoundaryCsvHeader =
    "mu,r1,r2,r_u1,r_v1,r_u2,r_v2,pv1,pv2,dominant";
inline constexpr const char* kComparisonCsvHeader =
    "mu,all_private_q1,all_private_q2,all_private_r1,all_private_r2,"
    "all_private_objective,full_objective,gap";
inline constexpr const char* kSaturationCsvHeader =
    "mu,p_hat_1,p_hat_2,r_sat_1,r_sat_2,residual";
inline constexpr const char* kLayersCsvHeader = "delta,max_abs_error,ratio";

// Boundary CSV, per-mu solution JSON, all-private comparison CSV and, with
// plot enabled, boundary.svg.
int RunRegion(const Scenario& sc, std::ostream& log);
// saturation.csv; exit 1 if any mu fails nested-optimality verification.
int RunSaturation(const Scenario& sc, std::ostream& log);
// layers.csv and, with plot enabled, layers.svg; exit 1 if the error does
// not shrink at first order.
int RunLayers(const Scenario& sc, std::ostream& log);
// Property suite over seeded random instances; prints a pass/fail table to
// `report`. Exit 0 iff every check passes.
int RunValidate(const Scenario& sc, std::ostream& report);

struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
  bool markers = true;
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<SvgSeries> series;
};

// Static SVG with axes, ticks, polylines and a legend.
std::string RenderSvg(const SvgPlot& plot);

}  // namespace gic

#endif  // GIC_COMMANDS_H_
