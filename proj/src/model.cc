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

#include "gic/model.h"

#include <cmath>
#include <set>

namespace gic {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonWeakRegime: return "NonWeakRegime";
    case ErrorCode::kNonPositive: return "NonPositive";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kSliceMismatch: return "SliceMismatch";
    case ErrorCode::kNotOnFacet: return "NotOnFacet";
    case ErrorCode::kNoTwoCornerDecomposition: return "NoTwoCornerDecomposition";
    case ErrorCode::kBadDelta: return "BadDelta";
    case ErrorCode::kMissingPower: return "MissingPower";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

GicError::GicError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

std::string_view ReceiverName(Receiver rx) {
  return rx == Receiver::kY1 ? "Y1" : "Y2";
}

ChannelParams ValidateParams(const ChannelParams& raw) {
  // Written as negated comparisons so NaN is rejected too.
  if (!(raw.a >= 0.0) || !(raw.b >= 0.0)) {
    throw GicError(ErrorCode::kNonPositive, "cross gains must be >= 0");
  }
  if (!(raw.a < 1.0) || !(raw.b < 1.0)) {
    throw GicError(ErrorCode::kNonWeakRegime,
                   "cross gains must satisfy a < 1 and b < 1");
  }
  if (!(raw.p1 > 0.0) || !(raw.p2 > 0.0) || !(raw.sigma2 > 0.0)) {
    throw GicError(ErrorCode::kNonPositive,
                   "power budgets and noise variance must be > 0");
  }
  return raw;
}

PowerSplit PowerSplit::FromPrivate(const ChannelParams& cp, double pv1,
                                   double pv2) {
  if (pv1 < 0.0 || pv1 > cp.p1 || pv2 < 0.0 || pv2 > cp.p2) {
    throw GicError(ErrorCode::kInvalidArgument,
                   "private power outside [0, budget]");
  }
  return PowerSplit{cp.p1 - pv1, pv1, cp.p2 - pv2, pv2};
}

double PowerSplit::power(int m) const {
  switch (m) {
    case kU1: return pu1;
    case kV1: return pv1;
    case kU2: return pu2;
    case kV2: return pv2;
  }
  throw GicError(ErrorCode::kInvalidArgument, "message index out of range");
}

bool SplitMatchesBudgets(const ChannelParams& cp, const PowerSplit& ps) {
  if (ps.pu1 < 0 || ps.pv1 < 0 || ps.pu2 < 0 || ps.pv2 < 0) return false;
  return std::abs(ps.pu1 + ps.pv1 - cp.p1) <= 1e-12 * cp.p1 &&
         std::abs(ps.pu2 + ps.pv2 - cp.p2) <= 1e-12 * cp.p2;
}

RateVector::RateVector(std::vector<std::string> labels,
                       std::vector<double> rates)
    : labels_(std::move(labels)), rates_(std::move(rates)) {
  if (labels_.size() != rates_.size()) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "label and rate lists differ in length");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() !=
      labels_.size()) {
    throw GicError(ErrorCode::kInvalidArgument, "duplicate rate labels");
  }
  for (double& r : rates_) {
    // Differences of rank values can land a few ulps below zero.
    if (r < 0.0 && r >= -1e-12) r = 0.0;
    if (!(r >= 0.0)) {
      throw GicError(ErrorCode::kInvalidArgument, "rates must be >= 0");
    }
  }
}

RateVector::RateVector(std::vector<double> rates) {
  std::vector<std::string> labels;
  labels.reserve(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    labels.push_back("r" + std::to_string(i));
  }
  *this = RateVector(std::move(labels), std::move(rates));
}

double HalfLog2OnePlus(double x) { return 0.5 * std::log2(1.0 + x); }

}  // namespace gic
