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

#include <cmath>
#include <random>

#include "gic/random_instance.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gic {
namespace {

using ::gic::testing::AllOrders;
using ::gic::testing::HalfLog2;

constexpr Receiver kBoth[] = {Receiver::kY1, Receiver::kY2};

TEST(ReceivedPowersTest, ScalesCrossUserByGain) {
  const ChannelParams cp{0.25, 0.25, 2.0, 2.0, 1.0};
  const PowerSplit ps{1.0, 1.0, 1.0, 1.0};
  const ReceiverPowers y1 = ReceivedPowers(cp, ps, Receiver::kY1);
  EXPECT_EQ(y1.powers, (std::array<double, 4>{1.0, 1.0, 0.25, 0.25}));
  EXPECT_EQ(y1.noise, 1.0);
  const ReceiverPowers y2 = ReceivedPowers(cp, ps, Receiver::kY2);
  EXPECT_EQ(y2.powers, (std::array<double, 4>{0.25, 0.25, 1.0, 1.0}));
}

TEST(ReceivedPowersTest, ZeroGainSilencesTheOtherUser) {
  const ChannelParams cp{0.0, 0.3, 2.0, 2.0, 1.0};
  const ReceiverPowers y1 =
      ReceivedPowers(cp, {1.0, 1.0, 0.7, 1.3}, Receiver::kY1);
  EXPECT_EQ(y1.powers[kU2], 0.0);
  EXPECT_EQ(y1.powers[kV2], 0.0);
}

TEST(ReceivedPowersTest, SymmetricInstanceMirrorsReceivers) {
  const ChannelParams cp{0.4, 0.4, 3.0, 3.0, 1.5};
  const PowerSplit ps{1.2, 1.8, 1.2, 1.8};
  const ReceiverPowers y1 = ReceivedPowers(cp, ps, Receiver::kY1);
  const ReceiverPowers y2 = ReceivedPowers(cp, ps, Receiver::kY2);
  EXPECT_EQ(y1.powers[kU1], y2.powers[kU2]);
  EXPECT_EQ(y1.powers[kV1], y2.powers[kV2]);
  EXPECT_EQ(y1.powers[kU2], y2.powers[kU1]);
  EXPECT_EQ(y1.powers[kV2], y2.powers[kV1]);
  EXPECT_EQ(y1.noise, 1.5);
}

TEST(GaussianRankTest, ClosedForms) {
  ReceiverPowers rp;
  rp.powers = {1.0, 3.0, 0.25, 0.0};
  EXPECT_NEAR(GaussianRank(rp, Bit(kU1), 0), 0.5, 1e-15);
  EXPECT_NEAR(GaussianRank(rp, Bit(kV1), 0), 1.0, 1e-15);
  EXPECT_NEAR(GaussianRank(rp, Bit(kU1), Bit(kU2)), HalfLog2(1.8), 1e-15);
  EXPECT_NEAR(GaussianRank(rp, Bit(kU1), Bit(kU2)), 0.42397, 5e-5);
  EXPECT_EQ(GaussianRank(rp, 0, Bit(kU2)), 0.0);
}

TEST(GaussianRankTest, RejectsOverlap) {
  ReceiverPowers rp;
  rp.powers = {1.0, 1.0, 1.0, 1.0};
  try {
    GaussianRank(rp, Bit(kU1) | Bit(kV1), Bit(kV1));
    FAIL() << "expected OverlappingSets";
  } catch (const GicError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverlappingSets);
  }
}

TEST(OverlineMacTest, SumRateFrontClosedForm) {
  const ChannelParams cp{0.5, 0.5, 1.0, 1.0, 1.0};
  EXPECT_NEAR(SumRateFront(cp, Receiver::kY1), HalfLog2(2.5), 1e-15);
  EXPECT_NEAR(SumRateFront(cp, Receiver::kY1), 0.66096, 5e-6);
  const Polymatroid p =
      BuildOverlineMac(cp, {0.4, 0.6, 0.3, 0.7}, Receiver::kY1);
  EXPECT_NEAR(p(p.ground()), SumRateFront(cp, Receiver::kY1), 1e-15);
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"U1", "V1", "U2", "V2"}));
}

TEST(OverlineMacTest, SymmetricFronts) {
  const ChannelParams cp{0.3, 0.3, 2.0, 2.0, 1.0};
  EXPECT_DOUBLE_EQ(SumRateFront(cp, Receiver::kY1),
                   SumRateFront(cp, Receiver::kY2));
}

TEST(OverlineMacTest, RandomInstancesArePolymatroids) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Instance in = RandomInstance(rng);
    for (Receiver rx : kBoth) {
      const Polymatroid over = BuildOverlineMac(in.params, in.split, rx);
      EXPECT_TRUE(ValidatePolymatroid(over));
      EXPECT_TRUE(ValidatePolymatroid(HkMac(in.params, in.split, rx)));
      EXPECT_NEAR(over(over.ground()), SumRateFront(in.params, rx), 1e-12);
    }
  }
}

TEST(DummyRatesTest, ClosedForms) {
  const ChannelParams cp{0.25, 0.5, 2.0, 2.0, 1.0};
  const DummyRates d = ComputeDummyRates(cp, {1.0, 1.0, 1.0, 1.0});
  EXPECT_NEAR(d.v2_at_y1, HalfLog2(1.25), 1e-15);
  EXPECT_NEAR(d.v2_at_y1, 0.16096, 5e-6);
  EXPECT_NEAR(d.v1_at_y2, HalfLog2(1.5), 1e-15);
  EXPECT_EQ(ComputeDummyRates(cp, {2.0, 0.0, 2.0, 0.0}).v2_at_y1, 0.0);
  const ChannelParams decoupled{0.0, 0.0, 2.0, 2.0, 1.0};
  EXPECT_EQ(ComputeDummyRates(decoupled, {0.5, 1.5, 0.5, 1.5}).v2_at_y1, 0.0);
}

TEST(DummyRatesTest, MatchCornerPointWithDummyAtTheBottom) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const Instance in = RandomInstance(rng);
    const DummyRates d = ComputeDummyRates(in.params, in.split);
    const Polymatroid y1 = BuildOverlineMac(in.params, in.split, Receiver::kY1);
    const Polymatroid y2 = BuildOverlineMac(in.params, in.split, Receiver::kY2);
    EXPECT_NEAR(CornerPoint(y1, {{kV2, kV1, kU1, kU2}})[kV2], d.v2_at_y1,
                1e-12);
    EXPECT_NEAR(CornerPoint(y2, {{kV1, kV2, kU2, kU1}})[kV1], d.v1_at_y2,
                1e-12);
  }
}

TEST(HkMacTest, PrivateRankAtY1) {
  const ChannelParams cp{0.25, 0.25, 2.0, 2.0, 1.0};
  const Polymatroid hk = HkMac(cp, {1.0, 1.0, 1.0, 1.0}, Receiver::kY1);
  EXPECT_EQ(hk.labels(), (std::vector<std::string>{"U1", "V1", "U2"}));
  EXPECT_NEAR(hk(Bit(1)), HalfLog2(1.0 + 1.0 / 1.25), 1e-15);
  EXPECT_NEAR(hk(Bit(1)), 0.42397, 5e-5);
}

TEST(HkMacTest, EqualsProjectionAboveTheDummy) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Instance in = RandomInstance(rng);
    for (Receiver rx : kBoth) {
      const Polymatroid hk = HkMac(in.params, in.split, rx);
      const Polymatroid proj = ProjectAbove(
          BuildOverlineMac(in.params, in.split, rx), Bit(DummyMessage(rx)));
      ASSERT_EQ(hk.labels(), proj.labels());
      for (Mask s = 0; s <= hk.ground(); ++s) {
        EXPECT_NEAR(hk(s), proj(s), 1e-12);
      }
    }
  }
}

TEST(HkMacTest, NoPrivateInterferenceGivesTheCleanMac) {
  const ChannelParams cp{0.3, 0.4, 2.0, 1.5, 1.0};
  const PowerSplit ps{0.5, 1.5, 1.5, 0.0};
  const Polymatroid hk = HkMac(cp, ps, Receiver::kY1);
  const Polymatroid clean = ::gic::testing::GaussianPolymatroid(
      {ps.pu1, ps.pv1, cp.a * ps.pu2});
  for (Mask s = 0; s <= hk.ground(); ++s) {
    EXPECT_NEAR(hk(s), clean(s), 1e-15);
  }
}

TEST(OverlineMacTest, EveryOrderLandsOnTheFront) {
  std::mt19937_64 rng(24);
  const auto orders = AllOrders(4);
  for (int t = 0; t < 30; ++t) {
    const Instance in = RandomInstance(rng);
    for (Receiver rx : kBoth) {
      const Polymatroid p = BuildOverlineMac(in.params, in.split, rx);
      for (const auto& o : orders) {
        const RateVector r = CornerPoint(p, {o});
        EXPECT_TRUE(Membership(p, r).feasible);
        EXPECT_NEAR(r[0] + r[1] + r[2] + r[3], SumRateFront(in.params, rx),
                    1e-12);
      }
    }
  }
}

TEST(MessageTest, DummyAndDecodedSets) {
  EXPECT_EQ(DummyMessage(Receiver::kY1), kV2);
  EXPECT_EQ(DummyMessage(Receiver::kY2), kV1);
  EXPECT_EQ(OwnPrivateMessage(Receiver::kY1), kV1);
  EXPECT_EQ(DecodedMessages(Receiver::kY1), Bit(kU1) | Bit(kV1) | Bit(kU2));
  EXPECT_EQ(DecodedMessages(Receiver::kY2), Bit(kU1) | Bit(kU2) | Bit(kV2));
}

}  // namespace
}  // namespace gic
