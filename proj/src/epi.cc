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

#include "gic/epi.h"

#include <cmath>
#include <limits>
#include <numbers>

namespace gic {
namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

}  // namespace

double GaussianEntropy(double power) {
  if (power == 0.0) return -std::numeric_limits<double>::infinity();
  return 0.5 * std::log2(kTwoPiE * power);
}

double GaussianEquivPower(double h_a) { return std::exp2(2.0 * h_a) / kTwoPiE; }

EpiBounds ComputeEpiBounds(const EpiQuery& q) {
  if (!(q.noise > 0.0)) {
    throw GicError(ErrorCode::kNonPositive, "noise variance must be > 0");
  }
  EpiBounds b;
  b.lower = 0.5 * std::log2(std::exp2(2.0 * q.h_a) + kTwoPiE * q.noise);
  if (q.p_a) {
    if (!(*q.p_a >= 0.0)) {
      throw GicError(ErrorCode::kNonPositive, "power must be >= 0");
    }
    // A Gaussian needs the least power for a given entropy.
    if (GaussianEquivPower(q.h_a) > *q.p_a + 1e-12) {
      throw GicError(ErrorCode::kInvalidArgument,
                     "power is below the Gaussian minimum for this entropy");
    }
    b.upper = 0.5 * std::log2(kTwoPiE * (*q.p_a + q.noise));
  }
  return b;
}

double EpiUpperBound(const EpiQuery& q) {
  if (!q.p_a) {
    throw GicError(ErrorCode::kMissingPower, "upper bound needs p_a");
  }
  return *ComputeEpiBounds(q).upper;
}

double InterferenceEntropyFloor(const ChannelParams& cp, const PowerSplit& ps,
                                Receiver rx) {
  const double interference =
      rx == Receiver::kY1 ? cp.a * ps.pv2 : cp.b * ps.pv1;
  return ComputeEpiBounds({GaussianEntropy(interference), std::nullopt,
                           cp.sigma2})
      .lower;
}

}  // namespace gic
