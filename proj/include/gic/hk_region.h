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

#ifndef GIC_HK_REGION_H_
#define GIC_HK_REGION_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gic/gaussian_mac.h"
#include "gic/model.h"
#include "gic/polymatroid.h"

namespace gic {

// Rates of (U1, V1, U2, V2).
using Rate4 = std::array<double, kNumMessages>;

enum class RowRole { kOther, kSumY1, kSumY2 };

struct Halfspace {
  Rate4 coeffs{};
  double rhs = 0.0;
  std::string name;
  RowRole role = RowRole::kOther;
};

// Polytope {x in R^4 : coeffs . x <= rhs for every row}.
struct RatePolytope {
  std::vector<Halfspace> halfspaces;

  bool Contains(const Rate4& x, double tol = kMembershipTol) const;
  // Copy without the rows whose role is listed.
  RatePolytope Without(std::span<const RowRole> roles) const;
};

// The 7 Y1 rows, the 7 Y2 rows and four nonnegativity rows. Each receiver
// contributes its singletons, pairs and sum row in that order, named like
// "Y1:U1+V1+U2". The rhs values come from HkMac.
RatePolytope BuildPolytope(const ChannelParams& cp, const PowerSplit& ps);

inline constexpr std::size_t kMaxHalfspaces = 32;

// Basic feasible points: every 4-row basis with an invertible system whose
// solution satisfies all rows to 1e-9, deduplicated at 1e-8.
// Singular bases are skipped. Throws kTooLarge above kMaxHalfspaces rows.
std::vector<RateVector> EnumerateVertices(const RatePolytope& rp);

enum class Dominant { kY1, kY2, kBoth, kNone };
std::string_view DominantName(Dominant d);

struct WsrSolution {
  double mu = 1.0;
  RateVector rates;
  double objective = 0.0;
  std::vector<std::string> tight;
  Dominant dominant = Dominant::kNone;

  Rate4 x() const { return {rates[0], rates[1], rates[2], rates[3]}; }
  double r1() const { return rates[kU1] + rates[kV1]; }
  double r2() const { return rates[kU2] + rates[kV2]; }
};

// Weight vector (1, 1, mu, mu) over (U1, V1, U2, V2).
Rate4 WsrWeights(double mu);

// Maximizes R_U1 + R_V1 + mu (R_U2 + R_V2) over the vertices of `rp`.
// Among equal-objective vertices (1e-12) one with an active sum row wins,
// then the lowest basis index.
WsrSolution MaxWsrOverPolytope(const RatePolytope& rp, double mu);

// Objective value only; skips the bookkeeping of MaxWsrOverPolytope.
double MaxWsrObjective(const RatePolytope& rp, double mu);

struct ConstraintResidual {
  std::string name;
  double slice_rhs = 0.0;
  double hk_rhs = 0.0;
  double residual = 0.0;
};

struct P0SliceReport {
  DummyRates dummies;
  // 14 rows: the dummy-containing constraints of each four-input MAC, sliced
  // at the dummy rate, against the matching polytope rows.
  std::vector<ConstraintResidual> residuals;
  // Slack of the 14 sliced constraints that do not contain the dummy. They
  // are implied by the residual rows, so every slack is >= 0.
  std::vector<double> redundant_slack;
  double max_residual = 0.0;
};

// Slices both four-input MACs at their bottom-of-stack dummy rates and
// compares with the HK rows. Throws kSliceMismatch above 1e-9.
P0SliceReport P0SliceCheck(const ChannelParams& cp, const PowerSplit& ps);

// All 30 sliced constraints (both receivers, with and without the dummy)
// plus nonnegativity, as a polytope over (U1, V1, U2, V2).
RatePolytope BuildP0SlicePolytope(const ChannelParams& cp,
                                  const PowerSplit& ps);

struct TimeSharing {
  Receiver receiver = Receiver::kY1;
  // Corner points of HkMac(receiver), over DecodedMessages(receiver).
  RateVector corner_a;
  RateVector corner_b;
  // Four-message orders, dummy at the bottom.
  DecodingOrder order_a;
  DecodingOrder order_b;
  double lambda = 1.0;
};

// Writes the optimum's restriction to the dominant receiver as
// lambda * A + (1 - lambda) * B for two corner points A, B of that
// receiver's MAC. When both sum rows are active, Y1 is tried first.
// Throws kNotOnFacet if the point is off the sum-rate facet.
TimeSharing TimeSharingDecomposition(const ChannelParams& cp,
                                     const PowerSplit& ps,
                                     const WsrSolution& sol);

}  // namespace gic

#endif  // GIC_HK_REGION_H_
