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

#include "gic/layers.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "gic/gaussian_mac.h"

namespace gic {
namespace {

int OwnerOf(int message) { return message == kU1 || message == kV1 ? 1 : 2; }

std::vector<double> Chunks(double power, double delta) {
  if (power <= 0.0) return {};
  const long n = std::max(1L, std::lround(power / delta));
  std::vector<double> out(n, delta);
  out.back() = power - (n - 1) * delta;
  return out;
}

struct TxLayer {
  int message;
  double power;
};

// Public layers in band order, bottom first.
std::vector<TxLayer> PublicBandOrder(const PowerSplit& ps, double delta,
                                     const LayerOptions& opts) {
  int lower = kU1;
  int upper = kU2;
  if (opts.mu && *opts.mu > 1.0) std::swap(lower, upper);
  const std::vector<double> lo = Chunks(ps.power(lower), delta);
  const std::vector<double> hi = Chunks(ps.power(upper), delta);
  std::vector<TxLayer> out;
  if (opts.band == PublicBand::kStacked) {
    for (double p : lo) out.push_back({lower, p});
    for (double p : hi) out.push_back({upper, p});
    return out;
  }
  // Merge by relative position (k + 0.5) / n; the lower message wins ties.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lo.size() || j < hi.size()) {
    const bool take_lo =
        j == hi.size() ||
        (i < lo.size() &&
         (i + 0.5) * hi.size() <= (j + 0.5) * lo.size());
    if (take_lo) {
      out.push_back({lower, lo[i++]});
    } else {
      out.push_back({upper, hi[j++]});
    }
  }
  return out;
}

// Rates of `order` stacked bottom to top at receiver `rx`.
std::vector<double> StackRates(const ChannelParams& cp,
                               const std::vector<TxLayer>& order,
                               Receiver rx) {
  std::vector<double> rates;
  rates.reserve(order.size());
  double below = 0.0;
  for (const TxLayer& l : order) {
    const double gain = OwnerOf(l.message) == 1
                            ? (rx == Receiver::kY1 ? 1.0 : cp.b)
                            : (rx == Receiver::kY1 ? cp.a : 1.0);
    const double rx_power = gain * l.power;
    rates.push_back(HalfLog2OnePlus(rx_power / (cp.sigma2 + below)));
    below += rx_power;
  }
  return rates;
}

void CheckDelta(const PowerSplit& ps, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw GicError(ErrorCode::kBadDelta, "delta must be positive and finite");
  }
  for (int m = 0; m < kNumMessages; ++m) {
    const double p = ps.power(m);
    if (p > 0.0 && delta > p * (1.0 + 1e-12)) {
      throw GicError(ErrorCode::kBadDelta,
                     "delta exceeds the power of message " +
                         std::string(kMessageLabels[m]));
    }
  }
}

}  // namespace

std::pair<LayerStack, LayerStack> BuildStacks(const ChannelParams& cp,
                                              const PowerSplit& ps,
                                              double delta,
                                              const LayerOptions& opts) {
  CheckDelta(ps, delta);
  std::vector<TxLayer> v1;
  std::vector<TxLayer> v2;
  for (double p : Chunks(ps.pv1, delta)) v1.push_back({kV1, p});
  for (double p : Chunks(ps.pv2, delta)) v2.push_back({kV2, p});
  const std::vector<TxLayer> band = PublicBandOrder(ps, delta, opts);

  auto concat = [](std::vector<TxLayer> a, const std::vector<TxLayer>& b,
                   const std::vector<TxLayer>& c) {
    a.insert(a.end(), b.begin(), b.end());
    a.insert(a.end(), c.begin(), c.end());
    return a;
  };
  const std::vector<TxLayer> order_y1 = concat(v2, v1, band);
  const std::vector<TxLayer> order_y2 = concat(v1, v2, band);
  const std::vector<double> rates_y1 = StackRates(cp, order_y1, Receiver::kY1);
  const std::vector<double> rates_y2 = StackRates(cp, order_y2, Receiver::kY2);
  // Public layers occupy the same band positions at both receivers.
  const std::size_t band_y1 = v2.size() + v1.size();
  const std::size_t band_y2 = v1.size() + v2.size();

  std::pair<LayerStack, LayerStack> out;
  out.first = {Receiver::kY1, delta, {}};
  out.second = {Receiver::kY2, delta, {}};
  for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
    const bool y1 = rx == Receiver::kY1;
    const auto& order = y1 ? order_y1 : order_y2;
    const auto& rates = y1 ? rates_y1 : rates_y2;
    LayerStack& stack = y1 ? out.first : out.second;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const TxLayer& t = order[k];
      Layer l;
      l.message = t.message;
      l.owner = OwnerOf(t.message);
      l.power = t.power;
      if (t.message == kU1 || t.message == kU2) {
        const std::size_t pos = k - (y1 ? band_y1 : band_y2);
        l.kind = LayerKind::kPublic;
        l.rate_y1 = rates_y1[band_y1 + pos];
        l.rate_y2 = rates_y2[band_y2 + pos];
        l.assigned_rate = std::min(*l.rate_y1, *l.rate_y2);
      } else {
        const bool own = t.message == OwnPrivateMessage(rx);
        l.kind = own ? LayerKind::kPrivate : LayerKind::kDummyPrivate;
        (y1 ? l.rate_y1 : l.rate_y2) = rates[k];
        l.assigned_rate = rates[k];
      }
      stack.layers.push_back(l);
    }
  }
  return out;
}

ExtendedRateVector AggregateRates(
    const std::pair<LayerStack, LayerStack>& stacks) {
  std::array<double, kNumMessages> r{};
  double dummy_y1 = 0.0;
  double dummy_y2 = 0.0;
  for (const Layer& l : stacks.first.layers) {
    switch (l.kind) {
      case LayerKind::kDummyPrivate: dummy_y1 += l.assigned_rate; break;
      case LayerKind::kPrivate: r[l.message] += l.assigned_rate; break;
      case LayerKind::kPublic: r[l.message] += l.assigned_rate; break;
    }
  }
  for (const Layer& l : stacks.second.layers) {
    switch (l.kind) {
      case LayerKind::kDummyPrivate: dummy_y2 += l.assigned_rate; break;
      case LayerKind::kPrivate: r[l.message] += l.assigned_rate; break;
      case LayerKind::kPublic: break;  // already counted from Y1
    }
  }
  ExtendedRateVector out;
  out.base = RateVector({"U1", "V1", "U2", "V2"}, {r.begin(), r.end()});
  out.dummy_v2_at_y1 = dummy_y1;
  out.dummy_v1_at_y2 = dummy_y2;
  return out;
}

namespace {

// Integral over [t0, t1] of k / (c + s t).
double LogIntegral(double k, double c, double s, double t0, double t1) {
  if (k == 0.0 || t1 <= t0) return 0.0;
  if (s == 0.0) return k * (t1 - t0) / c;
  return (k / s) * std::log((c + s * t1) / (c + s * t0));
}

// Integral over [0, 1] of min(k1 / (c1 + s1 t), k2 / (c2 + s2 t)), in nats.
double IntegralOfMin(double k1, double c1, double s1, double k2, double c2,
                     double s2) {
  if (k1 == 0.0 || k2 == 0.0) return 0.0;
  // k1/(c1+s1 t) < k2/(c2+s2 t)  <=>  A + B t < 0.
  const double A = k1 * c2 - k2 * c1;
  const double B = k1 * s2 - k2 * s1;
  std::vector<double> cuts = {0.0};
  if (B != 0.0) {
    const double t = -A / B;
    if (t > 0.0 && t < 1.0) cuts.push_back(t);
  }
  cuts.push_back(1.0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (A + B * mid < 0.0) {
      total += LogIntegral(k1, c1, s1, cuts[i], cuts[i + 1]);
    } else {
      total += LogIntegral(k2, c2, s2, cuts[i], cuts[i + 1]);
    }
  }
  return total;
}

}  // namespace

ExtendedRateVector ContinuumRates(const ChannelParams& cp, const PowerSplit& ps,
                                  const LayerOptions& opts) {
  const double to_bits = 1.0 / (2.0 * std::numbers::ln2);
  // Received power below the public band.
  const double c1 = cp.sigma2 + cp.a * ps.pv2 + ps.pv1;
  const double c2 = cp.sigma2 + cp.b * ps.pv1 + ps.pv2;
  auto gain = [&](int m, Receiver rx) {
    if (OwnerOf(m) == 1) return rx == Receiver::kY1 ? 1.0 : cp.b;
    return rx == Receiver::kY1 ? cp.a : 1.0;
  };

  std::array<double, kNumMessages> r{};
  const DummyRates d = ComputeDummyRates(cp, ps);
  r[kV1] = HalfLog2OnePlus(ps.pv1 / (cp.sigma2 + cp.a * ps.pv2));
  r[kV2] = HalfLog2OnePlus(ps.pv2 / (cp.sigma2 + cp.b * ps.pv1));

  int lower = kU1;
  int upper = kU2;
  if (opts.mu && *opts.mu > 1.0) std::swap(lower, upper);
  const double pl = ps.power(lower);
  const double pu = ps.power(upper);
  const Receiver y1 = Receiver::kY1;
  const Receiver y2 = Receiver::kY2;
  if (opts.band == PublicBand::kInterleaved) {
    // Both messages spread uniformly over the band coordinate t in [0, 1].
    const double s1 = gain(lower, y1) * pl + gain(upper, y1) * pu;
    const double s2 = gain(lower, y2) * pl + gain(upper, y2) * pu;
    for (int m : {lower, upper}) {
      const double p = ps.power(m);
      r[m] = to_bits * IntegralOfMin(gain(m, y1) * p, c1, s1, gain(m, y2) * p,
                                     c2, s2);
    }
  } else {
    r[lower] = to_bits * IntegralOfMin(gain(lower, y1) * pl, c1,
                                       gain(lower, y1) * pl,
                                       gain(lower, y2) * pl, c2,
                                       gain(lower, y2) * pl);
    const double c1u = c1 + gain(lower, y1) * pl;
    const double c2u = c2 + gain(lower, y2) * pl;
    r[upper] = to_bits * IntegralOfMin(gain(upper, y1) * pu, c1u,
                                       gain(upper, y1) * pu,
                                       gain(upper, y2) * pu, c2u,
                                       gain(upper, y2) * pu);
  }
  ExtendedRateVector out;
  out.base = RateVector({"U1", "V1", "U2", "V2"}, {r.begin(), r.end()});
  out.dummy_v2_at_y1 = d.v2_at_y1;
  out.dummy_v1_at_y2 = d.v1_at_y2;
  return out;
}

ConvergenceTable ConvergenceTest(const ChannelParams& cp, const PowerSplit& ps,
                                 const std::vector<double>& deltas,
                                 const LayerOptions& opts) {
  if (deltas.empty()) {
    throw GicError(ErrorCode::kBadDelta, "empty delta list");
  }
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    if (!(deltas[i] < deltas[i - 1])) {
      throw GicError(ErrorCode::kBadDelta,
                     "deltas must be strictly decreasing");
    }
  }
  const ExtendedRateVector limit = ContinuumRates(cp, ps, opts);
  ConvergenceTable t;
  for (double delta : deltas) {
    const ExtendedRateVector agg =
        AggregateRates(BuildStacks(cp, ps, delta, opts));
    double err = std::max(std::abs(agg.dummy_v2_at_y1 - limit.dummy_v2_at_y1),
                          std::abs(agg.dummy_v1_at_y2 - limit.dummy_v1_at_y2));
    for (int m = 0; m < kNumMessages; ++m) {
      err = std::max(err, std::abs(agg.base[m] - limit.base[m]));
    }
    t.rows.push_back({delta, err});
  }
  constexpr double kExact = 1e-10;
  t.exact = std::all_of(t.rows.begin(), t.rows.end(), [](const auto& row) {
    return row.max_abs_error < kExact;
  });
  bool ratios_ok = true;
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    const double e0 = t.rows[i].max_abs_error;
    const double e1 = t.rows[i + 1].max_abs_error;
    if (e0 < kExact && e1 < kExact) continue;
    const double ratio = e1 > 0.0 ? e0 / e1 : INFINITY;
    t.ratios.push_back(ratio);
    if (!(ratio >= 1.8)) ratios_ok = false;
  }
  t.first_order = t.exact || ratios_ok;
  return t;
}

}  // namespace gic
