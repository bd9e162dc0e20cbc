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
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace gic {
namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kDedupTol = 1e-8;
constexpr double kTieTol = 1e-12;

using Matrix4 = std::array<Rate4, 4>;

// Inverts `m` with partial pivoting; false when singular.
bool Invert4(Matrix4 m, Matrix4& inv) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) inv[i][j] = i == j ? 1.0 : 0.0;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-12) return false;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const double d = m[col][col];
    for (int j = 0; j < 4; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0.0) continue;
      const double f = m[r][col];
      for (int j = 0; j < 4; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return true;
}

double Dot(const Rate4& u, const Rate4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// Precomputed inverses of every invertible 4-row basis of a fixed
// coefficient matrix. Only right-hand sides vary between instances.
class VertexEnumerator {
 public:
  struct Basis {
    std::array<int, 4> rows;
    Matrix4 inverse;
  };

  explicit VertexEnumerator(std::vector<Rate4> rows) : rows_(std::move(rows)) {
    const int n = static_cast<int>(rows_.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          for (int l = k + 1; l < n; ++l) {
            Basis b{{i, j, k, l}, {}};
            if (Invert4({rows_[i], rows_[j], rows_[k], rows_[l]}, b.inverse)) {
              bases_.push_back(b);
            }
          }
        }
      }
    }
  }

  Rate4 Solve(const Basis& b, std::span<const double> rhs) const {
    const Rate4 r = {rhs[b.rows[0]], rhs[b.rows[1]], rhs[b.rows[2]],
                     rhs[b.rows[3]]};
    Rate4 x;
    for (int i = 0; i < 4; ++i) {
      x[i] = Dot(b.inverse[i], r);
      if (std::abs(x[i]) < 1e-15) x[i] = 0.0;
    }
    return x;
  }

  bool Feasible(const Rate4& x, std::span<const double> rhs) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (Dot(rows_[r], x) > rhs[r] + kFeasTol) return false;
    }
    return true;
  }

  const std::vector<Basis>& bases() const { return bases_; }
  const std::vector<Rate4>& rows() const { return rows_; }

 private:
  std::vector<Rate4> rows_;
  std::vector<Basis> bases_;
};

const VertexEnumerator& EnumeratorFor(const RatePolytope& rp) {
  static std::mutex mu;
  static std::map<std::vector<double>, std::unique_ptr<VertexEnumerator>>
      cache;
  if (rp.halfspaces.size() > kMaxHalfspaces) {
    throw GicError(ErrorCode::kTooLarge, "too many halfspaces to enumerate");
  }
  std::vector<double> key;
  std::vector<Rate4> rows;
  for (const Halfspace& h : rp.halfspaces) {
    key.insert(key.end(), h.coeffs.begin(), h.coeffs.end());
    rows.push_back(h.coeffs);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<VertexEnumerator>(std::move(rows));
  return *slot;
}

std::vector<double> RhsOf(const RatePolytope& rp) {
  std::vector<double> rhs;
  rhs.reserve(rp.halfspaces.size());
  for (const Halfspace& h : rp.halfspaces) rhs.push_back(h.rhs);
  return rhs;
}

Rate4 SnapNonnegative(Rate4 x) {
  for (double& v : x) {
    if (v < 0.0 && v >= -kFeasTol) v = 0.0;
  }
  return x;
}

RateVector ToRateVector(const Rate4& x) {
  return RateVector({"U1", "V1", "U2", "V2"}, {x.begin(), x.end()});
}

Rate4 RowFromMask(Mask s) {
  Rate4 c{};
  for (int i = 0; i < kNumMessages; ++i) {
    if (s & Bit(i)) c[i] = 1.0;
  }
  return c;
}

// "Y1:U1+V1+U2": the receiver followed by the rates summed in the row.
std::string RowName(Receiver rx, Mask mask) {
  std::string name = std::string(ReceiverName(rx)) + ":";
  for (int i = 0; i < kNumMessages; ++i) {
    if (!(mask & Bit(i))) continue;
    if (name.back() != ':') name += "+";
    name += kMessageLabels[i];
  }
  return name;
}

void AppendNonnegativity(RatePolytope& rp) {
  for (int i = 0; i < kNumMessages; ++i) {
    Rate4 c{};
    c[i] = -1.0;
    rp.halfspaces.push_back(
        {c, 0.0, "R_" + std::string(kMessageLabels[i]) + ">=0",
         RowRole::kOther});
  }
}

}  // namespace

bool RatePolytope::Contains(const Rate4& x, double tol) const {
  for (const Halfspace& h : halfspaces) {
    if (Dot(h.coeffs, x) > h.rhs + tol) return false;
  }
  return true;
}

RatePolytope RatePolytope::Without(std::span<const RowRole> roles) const {
  RatePolytope out;
  for (const Halfspace& h : halfspaces) {
    if (std::find(roles.begin(), roles.end(), h.role) == roles.end()) {
      out.halfspaces.push_back(h);
    }
  }
  return out;
}

RatePolytope BuildPolytope(const ChannelParams& cp, const PowerSplit& ps) {
  // Per receiver: the three singletons, the three pairs, then the sum row.
  static constexpr std::array<Mask, 7> kY1Rows = {
      Bit(kU1),
      Bit(kU2),
      Bit(kV1),
      Bit(kU1) | Bit(kU2),
      Bit(kU1) | Bit(kV1),
      Bit(kU2) | Bit(kV1),
      Bit(kU1) | Bit(kU2) | Bit(kV1)};
  static constexpr std::array<Mask, 7> kY2Rows = {
      Bit(kU1),
      Bit(kU2),
      Bit(kV2),
      Bit(kU1) | Bit(kU2),
      Bit(kU2) | Bit(kV2),
      Bit(kU1) | Bit(kV2),
      Bit(kU1) | Bit(kU2) | Bit(kV2)};
  RatePolytope rp;
  for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
    const Polymatroid mac = HkMac(cp, ps, rx);
    const Mask members = DecodedMessages(rx);
    const auto& masks = rx == Receiver::kY1 ? kY1Rows : kY2Rows;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      RowRole role = RowRole::kOther;
      if (k + 1 == masks.size()) {
        role = rx == Receiver::kY1 ? RowRole::kSumY1 : RowRole::kSumY2;
      }
      rp.halfspaces.push_back({RowFromMask(masks[k]),
                               mac(CompressMask(masks[k], members)),
                               RowName(rx, masks[k]), role});
    }
  }
  AppendNonnegativity(rp);
  return rp;
}

std::vector<RateVector> EnumerateVertices(const RatePolytope& rp) {
  const VertexEnumerator& en = EnumeratorFor(rp);
  const std::vector<double> rhs = RhsOf(rp);
  std::vector<Rate4> found;
  for (const auto& b : en.bases()) {
    const Rate4 x = en.Solve(b, rhs);
    if (!en.Feasible(x, rhs)) continue;
    const bool dup = std::any_of(found.begin(), found.end(), [&](const Rate4& y) {
      double d2 = 0.0;
      for (int i = 0; i < 4; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
      return d2 <= kDedupTol * kDedupTol;
    });
    if (!dup) found.push_back(SnapNonnegative(x));
  }
  std::vector<RateVector> out;
  out.reserve(found.size());
  for (const Rate4& x : found) out.push_back(ToRateVector(x));
  return out;
}

std::string_view DominantName(Dominant d) {
  switch (d) {
    case Dominant::kY1: return "Y1";
    case Dominant::kY2: return "Y2";
    case Dominant::kBoth: return "both";
    case Dominant::kNone: return "none";
  }
  return "none";
}

Rate4 WsrWeights(double mu) { return {1.0, 1.0, mu, mu}; }

namespace {

struct Incumbent {
  Rate4 x{};
  double objective = -std::numeric_limits<double>::infinity();
  bool on_sum = false;
  bool found = false;
};

bool SumRowActive(const RatePolytope& rp, const Rate4& x) {
  for (const Halfspace& h : rp.halfspaces) {
    if (h.role != RowRole::kOther &&
        std::abs(Dot(h.coeffs, x) - h.rhs) <= kFeasTol) {
      return true;
    }
  }
  return false;
}

Incumbent SearchVertices(const RatePolytope& rp, double mu) {
  if (!(mu >= 0.0)) {
    throw GicError(ErrorCode::kInvalidArgument, "mu must be >= 0");
  }
  const VertexEnumerator& en = EnumeratorFor(rp);
  const std::vector<double> rhs = RhsOf(rp);
  const Rate4 w = WsrWeights(mu);
  Incumbent best;
  for (const auto& b : en.bases()) {
    const Rate4 x = en.Solve(b, rhs);
    const double obj = Dot(w, x);
    if (best.found && obj < best.objective - kTieTol) continue;
    if (!en.Feasible(x, rhs)) continue;
    const bool on_sum = SumRowActive(rp, x);
    if (best.found && obj <= best.objective + kTieTol) {
      // Tie: only an active sum row can displace the incumbent.
      if (best.on_sum || !on_sum) continue;
    }
    best = {x, obj, on_sum, true};
  }
  if (!best.found) {
    throw GicError(ErrorCode::kInvalidArgument, "polytope has no vertex");
  }
  return best;
}

}  // namespace

double MaxWsrObjective(const RatePolytope& rp, double mu) {
  return SearchVertices(rp, mu).objective;
}

WsrSolution MaxWsrOverPolytope(const RatePolytope& rp, double mu) {
  const Incumbent best = SearchVertices(rp, mu);
  WsrSolution sol;
  sol.mu = mu;
  const Rate4 x = SnapNonnegative(best.x);
  sol.rates = ToRateVector(x);
  sol.objective = x[kU1] + x[kV1] + mu * (x[kU2] + x[kV2]);
  bool y1 = false;
  bool y2 = false;
  for (const Halfspace& h : rp.halfspaces) {
    if (std::abs(Dot(h.coeffs, x) - h.rhs) > kFeasTol) continue;
    sol.tight.push_back(h.name);
    y1 = y1 || h.role == RowRole::kSumY1;
    y2 = y2 || h.role == RowRole::kSumY2;
  }
  sol.dominant = y1 && y2 ? Dominant::kBoth
                 : y1     ? Dominant::kY1
                 : y2     ? Dominant::kY2
                          : Dominant::kNone;
  return sol;
}

RatePolytope BuildP0SlicePolytope(const ChannelParams& cp,
                                  const PowerSplit& ps) {
  const DummyRates d = ComputeDummyRates(cp, ps);
  RatePolytope rp;
  for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
    const Polymatroid mac = BuildOverlineMac(cp, ps, rx);
    const int dummy = DummyMessage(rx);
    const double dummy_rate = rx == Receiver::kY1 ? d.v2_at_y1 : d.v1_at_y2;
    const Mask decoded = DecodedMessages(rx);
    for (Mask s = 1; s <= mac.ground(); ++s) {
      const Mask real = s & decoded;
      if (real == 0) continue;
      const bool has_dummy = (s & Bit(dummy)) != 0;
      RowRole role = RowRole::kOther;
      if (has_dummy && real == decoded) {
        role = rx == Receiver::kY1 ? RowRole::kSumY1 : RowRole::kSumY2;
      }
      std::string name = std::string(ReceiverName(rx)) + ":{";
      for (int i = 0; i < kNumMessages; ++i) {
        if (s & Bit(i)) name += std::string(kMessageLabels[i]) + ",";
      }
      name.back() = '}';
      rp.halfspaces.push_back({RowFromMask(real),
                               mac(s) - (has_dummy ? dummy_rate : 0.0),
                               std::move(name), role});
    }
  }
  AppendNonnegativity(rp);
  return rp;
}

P0SliceReport P0SliceCheck(const ChannelParams& cp, const PowerSplit& ps) {
  P0SliceReport rep;
  rep.dummies = ComputeDummyRates(cp, ps);
  const RatePolytope hk = BuildPolytope(cp, ps);
  int hk_row = 0;
  for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
    const Polymatroid mac = BuildOverlineMac(cp, ps, rx);
    const int dummy = DummyMessage(rx);
    const double dummy_rate =
        rx == Receiver::kY1 ? rep.dummies.v2_at_y1 : rep.dummies.v1_at_y2;
    // Seven HK rows of this receiver, matched by coefficient pattern.
    for (int k = 0; k < 7; ++k, ++hk_row) {
      const Halfspace& h = hk.halfspaces[hk_row];
      Mask s = 0;
      for (int i = 0; i < kNumMessages; ++i) {
        if (h.coeffs[i] > 0.0) s |= Bit(i);
      }
      const double with_dummy = mac(s | Bit(dummy)) - dummy_rate;
      const double residual = std::abs(with_dummy - h.rhs);
      rep.residuals.push_back({h.name, with_dummy, h.rhs, residual});
      rep.max_residual = std::max(rep.max_residual, residual);
      rep.redundant_slack.push_back(mac(s) - with_dummy);
    }
  }
  if (rep.max_residual > kFeasTol) {
    throw GicError(ErrorCode::kSliceMismatch,
                   "sliced constraint differs from HK row by " +
                       std::to_string(rep.max_residual));
  }
  return rep;
}

namespace {

constexpr double kFacetTol = 1e-9;
constexpr double kReconstructTol = 1e-8;

std::vector<std::vector<int>> AllOrders(int m) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DecodingOrder LiftOrder(const std::vector<int>& local, Receiver rx) {
  DecodingOrder ord;
  ord.order.push_back(DummyMessage(rx));
  const Mask members = DecodedMessages(rx);
  for (int j : local) {
    ord.order.push_back(std::countr_zero(ExpandMask(Bit(j), members)));
  }
  return ord;
}

bool TryDecompose(const ChannelParams& cp, const PowerSplit& ps,
                  const WsrSolution& sol, Receiver rx, TimeSharing& out) {
  const Polymatroid mac = HkMac(cp, ps, rx);
  const Mask members = DecodedMessages(rx);
  std::vector<double> x;
  for (int i = 0; i < kNumMessages; ++i) {
    if (members & Bit(i)) x.push_back(sol.rates[i]);
  }
  const double sum = x[0] + x[1] + x[2];
  if (std::abs(sum - mac(mac.ground())) > kFacetTol) return false;

  const auto orders = AllOrders(3);
  std::vector<RateVector> corners;
  for (const auto& o : orders) corners.push_back(CornerPoint(mac, {o}));

  auto dist = [&](const std::vector<double>& y) {
    double d2 = 0.0;
    for (int i = 0; i < 3; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(d2);
  };

  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (dist(corners[i].rates()) <= kReconstructTol) {
      out = {rx, corners[i], corners[i], LiftOrder(orders[i], rx),
             LiftOrder(orders[i], rx), 1.0};
      return true;
    }
  }
  for (std::size_t i = 0; i < corners.size(); ++i) {
    for (std::size_t j = i + 1; j < corners.size(); ++j) {
      const auto& a = corners[i].rates();
      const auto& b = corners[j].rates();
      double num = 0.0;
      double den = 0.0;
      for (int k = 0; k < 3; ++k) {
        num += (x[k] - b[k]) * (a[k] - b[k]);
        den += (a[k] - b[k]) * (a[k] - b[k]);
      }
      if (den <= 0.0) continue;
      const double lambda = num / den;
      if (lambda < -1e-9 || lambda > 1.0 + 1e-9) continue;
      std::vector<double> y(3);
      for (int k = 0; k < 3; ++k) y[k] = lambda * a[k] + (1.0 - lambda) * b[k];
      if (dist(y) > kReconstructTol) continue;
      out = {rx, corners[i], corners[j], LiftOrder(orders[i], rx),
             LiftOrder(orders[j], rx), std::clamp(lambda, 0.0, 1.0)};
      return true;
    }
  }
  return false;
}

}  // namespace

TimeSharing TimeSharingDecomposition(const ChannelParams& cp,
                                     const PowerSplit& ps,
                                     const WsrSolution& sol) {
  std::vector<Receiver> candidates;
  switch (sol.dominant) {
    case Dominant::kY1: candidates = {Receiver::kY1}; break;
    case Dominant::kY2: candidates = {Receiver::kY2}; break;
    case Dominant::kBoth: candidates = {Receiver::kY1, Receiver::kY2}; break;
    case Dominant::kNone: break;
  }
  bool on_facet = false;
  for (Receiver rx : candidates) {
    const Polymatroid mac = HkMac(cp, ps, rx);
    const Mask members = DecodedMessages(rx);
    double sum = 0.0;
    for (int i = 0; i < kNumMessages; ++i) {
      if (members & Bit(i)) sum += sol.rates[i];
    }
    if (std::abs(sum - mac(mac.ground())) > kFacetTol) continue;
    on_facet = true;
    TimeSharing ts;
    if (TryDecompose(cp, ps, sol, rx, ts)) return ts;
  }
  if (!on_facet) {
    throw GicError(ErrorCode::kNotOnFacet,
                   "optimum is not on a dominant sum-rate facet");
  }
  throw GicError(ErrorCode::kNoTwoCornerDecomposition,
                 "facet point is not on a segment between two corner points");
}

}  // namespace gic
