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

#ifndef GIC_EPI_H_
#define GIC_EPI_H_

#include <optional>

#include "gic/model.h"

namespace gic {

// Entropies are differential entropies in bits; powers are variances.
struct EpiQuery {
  double h_a = 0.0;
  std::optional<double> p_a;
  // Variance of the independent Gaussian noise added to A.
  double noise = 1.0;
};

struct EpiBounds {
  double lower = 0.0;
  std::optional<double> upper;
};

// h of a zero-mean Gaussian with variance `power`: 0.5 log2(2 pi e power).
// Returns -inf for power 0.
double GaussianEntropy(double power);

// Power of the Gaussian with entropy h_a: 2^(2 h_a) / (2 pi e).
double GaussianEquivPower(double h_a);

// Bounds on h(A + Z) for Z ~ N(0, noise):
//   lower = 0.5 log2(2^(2 h_a) + 2 pi e noise)   (entropy power inequality)
//   upper = 0.5 log2(2 pi e (p_a + noise))       (Gaussian maximizes entropy)
EpiBounds ComputeEpiBounds(const EpiQuery& q);

// Like ComputeEpiBounds but throws kMissingPower when p_a is absent.
double EpiUpperBound(const EpiQuery& q);

// Entropy floor of interference plus noise at `rx`, with Gaussian
// interference of power a pv2 (Y1) or b pv1 (Y2). The bound is tight here.
double InterferenceEntropyFloor(const ChannelParams& cp, const PowerSplit& ps,
                                Receiver rx);

}  // namespace gic

#endif  // GIC_EPI_H_
