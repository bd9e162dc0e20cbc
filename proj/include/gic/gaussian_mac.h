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

#ifndef GIC_GAUSSIAN_MAC_H_
#define GIC_GAUSSIAN_MAC_H_

#include <array>

#include "gic/model.h"
#include "gic/polymatroid.h"

namespace gic {

// Received power of each message (U1, V1, U2, V2) at one receiver.
struct ReceiverPowers {
  Receiver receiver = Receiver::kY1;
  std::array<double, kNumMessages> powers{};
  double noise = 1.0;
};

ReceiverPowers ReceivedPowers(const ChannelParams& cp, const PowerSplit& ps,
                              Receiver rx);

// 0.5 log2(1 + P(decoded) / (noise + P(as_noise))).
double GaussianRank(const ReceiverPowers& rp, Mask decoded, Mask as_noise);

// The interfering private message at `rx`: V2 at Y1, V1 at Y2.
constexpr int DummyMessage(Receiver rx) {
  return rx == Receiver::kY1 ? kV2 : kV1;
}
constexpr int OwnPrivateMessage(Receiver rx) {
  return rx == Receiver::kY1 ? kV1 : kV2;
}
// Messages that are really decoded at `rx` (everything but the dummy).
constexpr Mask DecodedMessages(Receiver rx) {
  return 0xFu & ~Bit(DummyMessage(rx));
}

// Four-input MAC at `rx` over (U1, V1, U2, V2), nothing treated as noise.
Polymatroid BuildOverlineMac(const ChannelParams& cp, const PowerSplit& ps,
                             Receiver rx);

// Sum-rate front of the four-input MAC at full budgets:
// 0.5 log2(1 + (p1 + a p2) / sigma2) at Y1, (b p1 + p2) at Y2.
double SumRateFront(const ChannelParams& cp, Receiver rx);

struct DummyRates {
  double v2_at_y1 = 0.0;
  double v1_at_y2 = 0.0;
};

// Rates of the dummy private messages when they sit at the bottom of the
// stack: I(sqrt(a) V2; Y1 | U1, U2, V1) and I(sqrt(b) V1; Y2 | U1, U2, V2).
DummyRates ComputeDummyRates(const ChannelParams& cp, const PowerSplit& ps);

// Three-message MAC at `rx` over DecodedMessages(rx) in index order, with the
// other user's private message treated as noise.
Polymatroid HkMac(const ChannelParams& cp, const PowerSplit& ps, Receiver rx);

}  // namespace gic

#endif  // GIC_GAUSSIAN_MAC_H_
