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

#include "gic/gaussian_mac.h"

#include <string>
#include <vector>

namespace gic {
namespace {

std::vector<std::string> MessageLabels(Mask members) {
  std::vector<std::string> out;
  for (int i = 0; i < kNumMessages; ++i) {
    if (members & Bit(i)) out.emplace_back(kMessageLabels[i]);
  }
  return out;
}

double PowerOf(const ReceiverPowers& rp, Mask s) {
  double total = 0.0;
  for (int i = 0; i < kNumMessages; ++i) {
    if (s & Bit(i)) total += rp.powers[i];
  }
  return total;
}

}  // namespace

ReceiverPowers ReceivedPowers(const ChannelParams& cp, const PowerSplit& ps,
                              Receiver rx) {
  ReceiverPowers rp;
  rp.receiver = rx;
  rp.noise = cp.sigma2;
  if (rx == Receiver::kY1) {
    rp.powers = {ps.pu1, ps.pv1, cp.a * ps.pu2, cp.a * ps.pv2};
  } else {
    rp.powers = {cp.b * ps.pu1, cp.b * ps.pv1, ps.pu2, ps.pv2};
  }
  return rp;
}

double GaussianRank(const ReceiverPowers& rp, Mask decoded, Mask as_noise) {
  if (decoded & as_noise) {
    throw GicError(ErrorCode::kOverlappingSets,
                   "a message cannot be decoded and treated as noise");
  }
  return HalfLog2OnePlus(PowerOf(rp, decoded) /
                         (rp.noise + PowerOf(rp, as_noise)));
}

Polymatroid BuildOverlineMac(const ChannelParams& cp, const PowerSplit& ps,
                             Receiver rx) {
  const ReceiverPowers rp = ReceivedPowers(cp, ps, rx);
  return Polymatroid(MessageLabels(0xF),
                     [&](Mask s) { return GaussianRank(rp, s, 0); });
}

double SumRateFront(const ChannelParams& cp, Receiver rx) {
  const double total =
      rx == Receiver::kY1 ? cp.p1 + cp.a * cp.p2 : cp.b * cp.p1 + cp.p2;
  return HalfLog2OnePlus(total / cp.sigma2);
}

DummyRates ComputeDummyRates(const ChannelParams& cp, const PowerSplit& ps) {
  return {HalfLog2OnePlus(cp.a * ps.pv2 / cp.sigma2),
          HalfLog2OnePlus(cp.b * ps.pv1 / cp.sigma2)};
}

Polymatroid HkMac(const ChannelParams& cp, const PowerSplit& ps, Receiver rx) {
  const ReceiverPowers rp = ReceivedPowers(cp, ps, rx);
  const Mask members = DecodedMessages(rx);
  const Mask noise = Bit(DummyMessage(rx));
  return Polymatroid(MessageLabels(members), [&](Mask s) {
    return GaussianRank(rp, ExpandMask(s, members), noise);
  });
}

}  // namespace gic
