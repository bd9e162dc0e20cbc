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

#include "gic/hk_region.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gic/random_instance.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gic {
namespace {

using ::gic::testing::HalfLog2;

RatePolytope BoxPolytope(const Rate4& upper) {
  RatePolytope rp;
  for (int i = 0; i < 4; ++i) {
    Halfspace h;
    h.coeffs[i] = 1.0;
    h.rhs = upper[i];
    h.name = "box" + std::to_string(i);
    rp.halfspaces.push_back(h);
    Halfspace nn;
    nn.coeffs[i] = -1.0;
    nn.name = "nn" + std::to_string(i);
    rp.halfspaces.push_back(nn);
  }
  return rp;
}

bool HasVertex(const std::vector<RateVector>& vs, const Rate4& x) {
  return std::any_of(vs.begin(), vs.end(), [&](const RateVector& v) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d += std::abs(v[i] - x[i]);
    return d < 1e-9;
  });
}

Rate4 AsRate4(const RateVector& r) { return {r[0], r[1], r[2], r[3]}; }

bool InBothHkMacs(const ChannelParams& cp, const PowerSplit& ps,
                  const Rate4& x) {
  for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
    std::vector<double> sub;
    for (int i = 0; i < 4; ++i) {
      if (DecodedMessages(rx) & Bit(i)) sub.push_back(x[i]);
    }
    if (!Membership(HkMac(cp, ps, rx), sub).feasible) return false;
  }
  return true;
}

TEST(BuildPolytopeTest, RowLayout) {
  const ChannelParams cp{0.25, 0.25, 2.0, 2.0, 1.0};
  const RatePolytope rp = BuildPolytope(cp, {1.0, 1.0, 1.0, 1.0});
  ASSERT_EQ(rp.halfspaces.size(), 18u);
  EXPECT_EQ(rp.halfspaces[0].name, "Y1:U1");
  EXPECT_EQ(rp.halfspaces[6].name, "Y1:U1+V1+U2");
  EXPECT_EQ(rp.halfspaces[13].name, "Y2:U1+U2+V2");
  EXPECT_EQ(rp.halfspaces[6].role, RowRole::kSumY1);
  EXPECT_EQ(rp.halfspaces[13].role, RowRole::kSumY2);
  // Third Y1 row bounds the own private message under private interference.
  EXPECT_EQ(rp.halfspaces[2].coeffs, (Rate4{0, 1, 0, 0}));
  EXPECT_NEAR(rp.halfspaces[2].rhs, HalfLog2(1.8), 1e-15);
  EXPECT_NEAR(rp.halfspaces[2].rhs, 0.42397, 5e-5);
  for (const Halfspace& h : rp.halfspaces) EXPECT_GE(h.rhs, 0.0);
  EXPECT_TRUE(rp.Contains({0, 0, 0, 0}));
}

TEST(BuildPolytopeTest, DecoupledAllPrivateIsTwoPointToPointLinks) {
  const ChannelParams cp{0.0, 0.0, 3.0, 1.0, 1.0};
  const RatePolytope rp = BuildPolytope(cp, PowerSplit::AllPrivate(cp));
  const std::vector<RateVector> vs = EnumerateVertices(rp);
  const double c1 = HalfLog2(4.0), c2 = HalfLog2(2.0);
  EXPECT_TRUE(HasVertex(vs, {0, c1, 0, c2}));
  EXPECT_EQ(vs.size(), 4u);
  const WsrSolution s = MaxWsrOverPolytope(rp, 1.0);
  EXPECT_NEAR(s.objective, c1 + c2, 1e-12);
}

TEST(EnumerateVerticesTest, HypercubeHasSixteenVertices) {
  const std::vector<RateVector> vs = EnumerateVertices(BoxPolytope({1, 1, 1, 1}));
  EXPECT_EQ(vs.size(), 16u);
  EXPECT_TRUE(HasVertex(vs, {1, 0, 1, 0}));
}

TEST(EnumerateVerticesTest, TwoDimensionalSliceCorners) {
  RatePolytope rp = BoxPolytope({1, 1, 0, 0});
  Halfspace sum;
  sum.coeffs = {1, 1, 0, 0};
  sum.rhs = 1.5;
  sum.name = "sum";
  rp.halfspaces.push_back(sum);
  const std::vector<RateVector> vs = EnumerateVertices(rp);
  EXPECT_TRUE(HasVertex(vs, {1, 0.5, 0, 0}));
  EXPECT_TRUE(HasVertex(vs, {0.5, 1, 0, 0}));
  EXPECT_FALSE(HasVertex(vs, {1, 1, 0, 0}));
  EXPECT_EQ(vs.size(), 5u);
}

TEST(EnumerateVerticesTest, RejectsTooManyRows) {
  RatePolytope rp = BoxPolytope({1, 1, 1, 1});
  while (rp.halfspaces.size() <= kMaxHalfspaces) {
    rp.halfspaces.push_back(rp.halfspaces.front());
  }
  EXPECT_THROW(EnumerateVertices(rp), GicError);
}

TEST(EnumerateVerticesTest, VerticesLieInBothReceiverRegions) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Instance in = RandomInstance(rng);
    for (const RateVector& v :
         EnumerateVertices(BuildPolytope(in.params, in.split))) {
      EXPECT_TRUE(InBothHkMacs(in.params, in.split, AsRate4(v)));
    }
  }
}

TEST(MaxWsrTest, DecoupledObjective) {
  const ChannelParams cp{0.0, 0.0, 2.0, 5.0, 1.0};
  const WsrSolution s =
      MaxWsrOverPolytope(BuildPolytope(cp, PowerSplit::AllPrivate(cp)), 1.0);
  EXPECT_NEAR(s.objective, HalfLog2(3.0) + HalfLog2(6.0), 1e-12);
  EXPECT_NEAR(s.objective, s.r1() + s.r2(), 1e-15);
}

TEST(MaxWsrTest, ZeroWeightMaximizesUserOne) {
  const ChannelParams cp{0.3, 0.5, 2.0, 2.0, 1.0};
  const PowerSplit ps{1.0, 1.0, 0.5, 1.5};
  const WsrSolution s = MaxWsrOverPolytope(BuildPolytope(cp, ps), 0.0);
  // User 1 sees user 2's private part as noise and may decode U2 first.
  const Polymatroid y1 = HkMac(cp, ps, Receiver::kY1);
  const Polymatroid y2 = HkMac(cp, ps, Receiver::kY2);
  // With user 2 silent: U1 <= min(Y1, Y2 decodability), V1 <= f1(V1) and
  // U1 + V1 <= f1(U1, V1).
  const double u1_cap = std::min(y1(0b001), y2(0b001));
  const double expect = std::min(y1(0b011), u1_cap + y1(0b010));
  EXPECT_NEAR(s.objective, s.r1(), 1e-15);
  EXPECT_NEAR(s.objective, expect, 1e-12);
}

TEST(MaxWsrTest, BeatsRejectionSampledFeasiblePoints) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    const Instance in = RandomInstance(rng);
    const RatePolytope rp = BuildPolytope(in.params, in.split);
    const double mu = 0.25 + 3.0 * u(rng);
    const WsrSolution s = MaxWsrOverPolytope(rp, mu);
    Rate4 hi;
    for (int i = 0; i < 4; ++i) {
      hi[i] = 0.0;
      for (const Halfspace& h : rp.halfspaces) {
        if (h.coeffs == Rate4{} || h.coeffs[i] != 1.0) continue;
        double n = 0;
        for (double c : h.coeffs) n += c;
        if (n == 1.0) hi[i] = h.rhs;
      }
    }
    int accepted = 0;
    for (int k = 0; k < 10000; ++k) {
      Rate4 x;
      for (int i = 0; i < 4; ++i) x[i] = hi[i] * u(rng);
      if (!rp.Contains(x)) continue;
      ++accepted;
      const double v = x[0] + x[1] + mu * (x[2] + x[3]);
      EXPECT_LE(v, s.objective + 1e-12);
    }
    EXPECT_GT(accepted, 100);
  }
}

TEST(MaxWsrTest, SolutionFieldsAreConsistent) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    const Instance in = RandomInstance(rng);
    const WsrSolution s =
        MaxWsrOverPolytope(BuildPolytope(in.params, in.split), 0.7);
    EXPECT_DOUBLE_EQ(s.objective, s.rates[kU1] + s.rates[kV1] +
                                      0.7 * (s.rates[kU2] + s.rates[kV2]));
    EXPECT_TRUE(InBothHkMacs(in.params, in.split, s.x()));
    const bool y1 = std::count(s.tight.begin(), s.tight.end(), "Y1:U1+V1+U2") > 0;
    const bool y2 = std::count(s.tight.begin(), s.tight.end(), "Y2:U1+U2+V2") > 0;
    const Dominant expect = y1 && y2 ? Dominant::kBoth
                            : y1     ? Dominant::kY1
                            : y2     ? Dominant::kY2
                                     : Dominant::kNone;
    EXPECT_EQ(s.dominant, expect);
  }
}

TEST(MaxWsrTest, InvariantUnderRowPermutation) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const Instance in = RandomInstance(rng);
    RatePolytope rp = BuildPolytope(in.params, in.split);
    const double base = MaxWsrObjective(rp, 1.3);
    std::shuffle(rp.halfspaces.begin(), rp.halfspaces.end(), rng);
    EXPECT_NEAR(MaxWsrObjective(rp, 1.3), base, 1e-10);
  }
}

// At a fixed split the two receivers' constraints can cap the optimum
// without either sum row binding. Whenever a sum row does bind, relaxing that
// facet buys a strictly better objective.
TEST(MaxWsrTest, TightSumFacetIsBinding) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tight = 0;
  for (int t = 0; t < 400; ++t) {
    const Instance in = RandomInstance(rng);
    const double mu = std::exp2(-3.0 + 6.0 * u(rng));
    const RatePolytope rp = BuildPolytope(in.params, in.split);
    const WsrSolution s = MaxWsrOverPolytope(rp, mu);
    if (s.dominant == Dominant::kNone) continue;
    ++tight;
    const RatePolytope relaxed = ::gic::testing::DropSumFacet(
        rp, in.split, ::gic::testing::TightSumRoles(s.dominant));
    EXPECT_GT(MaxWsrObjective(relaxed, mu), s.objective + 1e-10);
  }
  EXPECT_GT(tight, 100);
}

TEST(P0SliceTest, ResidualsVanish) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 50; ++t) {
    const Instance in = RandomInstance(rng);
    const P0SliceReport r = P0SliceCheck(in.params, in.split);
    ASSERT_EQ(r.residuals.size(), 14u);
    EXPECT_LT(r.max_residual, 1e-12);
    for (double s : r.redundant_slack) EXPECT_GE(s, -1e-12);
  }
}

TEST(P0SliceTest, AsymmetricInstance) {
  const ChannelParams cp{0.3, 0.6, 2.0, 2.0, 1.0};
  const P0SliceReport r = P0SliceCheck(cp, {0.5, 1.5, 1.0, 1.0});
  EXPECT_LT(r.max_residual, 1e-12);
  EXPECT_EQ(r.residuals.front().name, "Y1:U1");
}

TEST(P0SliceTest, NoPrivatePowerMeansNoDummies) {
  const ChannelParams cp{0.3, 0.6, 2.0, 2.0, 1.0};
  const PowerSplit ps{2.0, 0.0, 2.0, 0.0};
  const P0SliceReport r = P0SliceCheck(cp, ps);
  EXPECT_EQ(r.dummies.v2_at_y1, 0.0);
  EXPECT_EQ(r.dummies.v1_at_y2, 0.0);
  EXPECT_EQ(r.max_residual, 0.0);
}

TEST(P0SliceTest, SliceOptimumEqualsHkOptimum) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const Instance in = RandomInstance(rng);
    const double mu = std::exp2(-3.0 + 6.0 * u(rng));
    EXPECT_NEAR(
        MaxWsrObjective(BuildP0SlicePolytope(in.params, in.split), mu),
        MaxWsrObjective(BuildPolytope(in.params, in.split), mu), 1e-10);
  }
}

void ExpectReconstructs(const ChannelParams& cp, const PowerSplit& ps,
                        const WsrSolution& s, const TimeSharing& ts) {
  const Mask members = DecodedMessages(ts.receiver);
  int j = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(members & Bit(i))) continue;
    EXPECT_NEAR(ts.lambda * ts.corner_a[j] + (1 - ts.lambda) * ts.corner_b[j],
                s.rates[i], 1e-8);
    ++j;
  }
  const int dummy = DummyMessage(ts.receiver);
  EXPECT_EQ(ts.order_a.order.front(), dummy);
  EXPECT_EQ(ts.order_b.order.front(), dummy);
  EXPECT_TRUE(ts.order_a.IsPermutationOf(4));
  EXPECT_TRUE(InBothHkMacs(cp, ps, s.x()));
}

TEST(TimeSharingTest, ReconstructsRandomOptima) {
  std::mt19937_64 rng(38);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int split_count = 0;
  for (int t = 0; t < 200; ++t) {
    const Instance in = RandomInstance(rng);
    const double mu = std::exp2(-3.0 + 6.0 * u(rng));
    const RatePolytope rp = BuildPolytope(in.params, in.split);
    const WsrSolution s = MaxWsrOverPolytope(rp, mu);
    if (s.dominant == Dominant::kNone) {
      EXPECT_THROW(TimeSharingDecomposition(in.params, in.split, s), GicError);
      continue;
    }
    const TimeSharing ts = TimeSharingDecomposition(in.params, in.split, s);
    ExpectReconstructs(in.params, in.split, s, ts);
    if (ts.lambda > 0.0 && ts.lambda < 1.0) ++split_count;
    // An optimum that is itself a corner point needs no sharing.
    const Polymatroid mac = HkMac(in.params, in.split, ts.receiver);
    const Mask members = DecodedMessages(ts.receiver);
    for (const auto& o : ::gic::testing::AllOrders(3)) {
      const RateVector c = CornerPoint(mac, {o});
      double dist = 0.0;
      for (int i = 0, j = 0; i < 4; ++i) {
        if (members & Bit(i)) dist += std::abs(c[j++] - s.rates[i]);
      }
      if (dist < 1e-9) {
        EXPECT_TRUE(ts.lambda == 0.0 || ts.lambda == 1.0);
      }
    }
  }
  EXPECT_GT(split_count, 0);
}

TEST(TimeSharingTest, SymmetricMidpointIsShared) {
  // The average of a symmetric optimum and its user-swapped mirror is also
  // optimal at unit weight; it lies inside a facet, not at a corner.
  const ChannelParams cp{0.8, 0.8, 2.0, 2.0, 1.0};
  for (double pv : {0.25, 0.5, 1.0}) {
    const PowerSplit ps = PowerSplit::FromPrivate(cp, pv, pv);
    const RatePolytope rp = BuildPolytope(cp, ps);
    const WsrSolution s = MaxWsrOverPolytope(rp, 1.0);
    ASSERT_NE(s.dominant, Dominant::kNone);
    WsrSolution mid = s;
    const double u = 0.5 * (s.rates[kU1] + s.rates[kU2]);
    mid.rates = RateVector(s.rates.labels(),
                           {u, s.rates[kV1], u, s.rates[kV2]});
    ASSERT_TRUE(rp.Contains(mid.x()));
    const TimeSharing ts = TimeSharingDecomposition(cp, ps, mid);
    ExpectReconstructs(cp, ps, mid, ts);
    EXPECT_GT(ts.lambda, 1e-3);
    EXPECT_LT(ts.lambda, 1.0 - 1e-3);
  }
}

TEST(TimeSharingTest, CornerOptimumUsesOneCorner) {
  const ChannelParams cp{0.0, 0.0, 2.0, 2.0, 1.0};
  const PowerSplit ps = PowerSplit::AllPrivate(cp);
  const WsrSolution s = MaxWsrOverPolytope(BuildPolytope(cp, ps), 1.0);
  const TimeSharing ts = TimeSharingDecomposition(cp, ps, s);
  EXPECT_EQ(ts.lambda, 1.0);
  ExpectReconstructs(cp, ps, s, ts);
}

TEST(TimeSharingTest, RejectsPointsOffTheFacet) {
  const ChannelParams cp{0.25, 0.25, 2.0, 2.0, 1.0};
  const PowerSplit ps{1.0, 1.0, 1.0, 1.0};
  WsrSolution s = MaxWsrOverPolytope(BuildPolytope(cp, ps), 1.0);
  s.rates = RateVector({"U1", "V1", "U2", "V2"}, {0, 0, 0, 0});
  try {
    TimeSharingDecomposition(cp, ps, s);
    FAIL() << "expected NotOnFacet";
  } catch (const GicError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOnFacet);
  }
}

}  // namespace
}  // namespace gic
