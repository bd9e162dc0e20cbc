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

#ifndef GIC_OPTIMIZER_H_
#define GIC_OPTIMIZER_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gic/hk_region.h"
#include "gic/model.h"

namespace gic {

struct OptimizerOptions {
  int all_private_grid = 256;
  int outer_grid = 64;
  int refine_rounds = 8;
};

struct AllPrivateSolution {
  double mu = 1.0;
  double q1 = 0.0;  // transmit power actually used by user 1
  double q2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double objective = 0.0;
  // max(q1/p1, q2/p2) >= 1 - 1e-6.
  bool full_power = false;
};

// R1 = 0.5 log2(1 + q1 / (sigma2 + a q2)), R2 likewise with b.
double AllPrivateRate1(const ChannelParams& cp, double q1, double q2);
double AllPrivateRate2(const ChannelParams& cp, double q1, double q2);

// Grid search over [0,p1]x[0,p2] followed by coordinate-wise golden-section
// refinement to 1e-10 in power.
AllPrivateSolution AllPrivateOptimum(const ChannelParams& cp, double mu,
                                     const OptimizerOptions& opts = {});

struct HkOptimum {
  WsrSolution solution;
  PowerSplit split;
};

// Best split (pv1, pv2) for weight mu: coarse grid, then 8 rounds of local
// grid halving around the incumbent. Ties keep the split with more private
// power.
HkOptimum MaxWsr(const ChannelParams& cp, double mu,
                 const OptimizerOptions& opts = {});

// Outer search resolution in power units: max(p1, p2) / (outer_grid - 1).
double OuterResolution(const ChannelParams& cp, const OptimizerOptions& opts);

struct SaturationResult {
  double mu = 1.0;
  double p_hat_1 = 0.0;
  double p_hat_2 = 0.0;
  // Dummy-message rates at the saturation split: a p_hat_2 seen at Y1 and
  // b p_hat_1 seen at Y2.
  double r_sat_1 = 0.0;
  double r_sat_2 = 0.0;
  double residual_public_power = 0.0;
  double tolerance = 0.0;
  // residual <= tolerance.
  bool nested = false;
  // residual <= 10 * tolerance; false is the VerificationFailed outcome.
  bool verified = false;
};

// Re-solves with budgets equal to the optimal private powers and records how
// much public power that optimum still uses.
SaturationResult SaturationLevels(const ChannelParams& cp, double mu,
                                  const OptimizerOptions& opts = {});

struct BoundaryPoint {
  double mu = 1.0;
  double r1 = 0.0;
  double r2 = 0.0;
  PowerSplit split;
  Dominant dominant = Dominant::kNone;
  std::vector<std::string> tight;
  WsrSolution solution;
};

// mu_list must be strictly increasing and >= 0.
std::vector<BoundaryPoint> TraceBoundary(const ChannelParams& cp,
                                         const std::vector<double>& mu_list,
                                         const OptimizerOptions& opts = {});

struct ComparisonRow {
  double mu = 1.0;
  double all_private = 0.0;
  double full = 0.0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  // Indices (into rows) of the first and last mu where the two objectives
  // agree within 1e-6; empty when they never agree.
  std::optional<std::pair<std::size_t, std::size_t>> agreement;
  bool agreement_contiguous = true;
};

ComparisonTable AllPrivateVsFull(const ChannelParams& cp,
                                 const std::vector<double>& mu_list,
                                 const OptimizerOptions& opts = {});
ComparisonTable CompareBoundaries(const std::vector<AllPrivateSolution>& ap,
                                  const std::vector<BoundaryPoint>& full);

// Upper bound on R1 + mu R2 from each receiver's four-input sum-rate front:
// max(1, mu) * front(Y1) + mu * C2 and max(1, mu) * front(Y2) + C1, where
// C_i is the interference-free single-user capacity. Returns the smaller.
double SingleMacBound(const ChannelParams& cp, double mu);

// Log-spaced 2^-4 .. 2^4, 33 points.
std::vector<double> DefaultMuGrid();

// Runs fn(i) for i in [0, n) on worker threads.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gic

#endif  // GIC_OPTIMIZER_H_
