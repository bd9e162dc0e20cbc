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

#ifndef GIC_MODEL_H_
#define GIC_MODEL_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gic {

// Error categories raised across the library. The CLI maps them to exit codes.
enum class ErrorCode {
  kNonWeakRegime,
  kNonPositive,
  kDimensionMismatch,
  kTooLarge,
  kOverlappingSets,
  kSliceMismatch,
  kNotOnFacet,
  kNoTwoCornerDecomposition,
  kBadDelta,
  kMissingPower,
  kInvalidArgument,
  kConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

class GicError : public std::runtime_error {
 public:
  GicError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Subsets of a ground set of at most 32 messages, one bit per message.
using Mask = std::uint32_t;

// Message index convention shared by every module.
enum Message : int { kU1 = 0, kV1 = 1, kU2 = 2, kV2 = 3 };
inline constexpr int kNumMessages = 4;
inline constexpr std::array<std::string_view, kNumMessages> kMessageLabels = {
    "U1", "V1", "U2", "V2"};

constexpr Mask Bit(int i) { return Mask{1} << i; }

enum class Receiver { kY1, kY2 };
std::string_view ReceiverName(Receiver rx);

// Physical instance of the two-user weak Gaussian interference channel.
// a scales user 2 at Y1, b scales user 1 at Y2.
struct ChannelParams {
  double a = 0.0;
  double b = 0.0;
  double p1 = 1.0;
  double p2 = 1.0;
  double sigma2 = 1.0;
};

// Returns `raw` unchanged if it lies in the weak-interference regime with
// positive budgets and noise; throws kNonWeakRegime / kNonPositive otherwise.
ChannelParams ValidateParams(const ChannelParams& raw);

// Public (U) and private (V) power of each transmitter.
struct PowerSplit {
  double pu1 = 0.0;
  double pv1 = 0.0;
  double pu2 = 0.0;
  double pv2 = 0.0;

  // Builds the split that spends the full budget: pu = budget - pv.
  static PowerSplit FromPrivate(const ChannelParams& cp, double pv1,
                                double pv2);
  static PowerSplit AllPrivate(const ChannelParams& cp) {
    return FromPrivate(cp, cp.p1, cp.p2);
  }

  // Transmit power of message `m` (kU1..kV2).
  double power(int m) const;
};

// Checks pu + pv = budget (1e-12 relative) and nonnegativity.
bool SplitMatchesBudgets(const ChannelParams& cp, const PowerSplit& ps);

// Nonnegative rates indexed by a duplicate-free label list.
class RateVector {
 public:
  RateVector() = default;
  RateVector(std::vector<std::string> labels, std::vector<double> rates);
  explicit RateVector(std::vector<double> rates);

  std::size_t size() const { return rates_.size(); }
  double operator[](std::size_t i) const { return rates_[i]; }
  const std::vector<double>& rates() const { return rates_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> rates_;
};

// Rates of the four real messages (U1, V1, U2, V2) plus the two dummy
// private-message rates that only exist as bookkeeping.
struct ExtendedRateVector {
  RateVector base;
  double dummy_v2_at_y1 = 0.0;
  double dummy_v1_at_y2 = 0.0;
};

// 0.5 * log2(1 + x).
double HalfLog2OnePlus(double x);

}  // namespace gic

#endif  // GIC_MODEL_H_
