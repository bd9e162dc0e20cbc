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

#include "gic/polymatroid.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace gic {

Polymatroid::Polymatroid(std::vector<std::string> labels,
                         const RankOracle& rank)
    : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSet) {
    throw GicError(ErrorCode::kTooLarge, "ground set larger than 12");
  }
  const std::size_t n = std::size_t{1} << labels_.size();
  table_.resize(n);
  for (std::size_t s = 0; s < n; ++s) table_[s] = rank(static_cast<Mask>(s));
}

Polymatroid Polymatroid::FromTable(std::vector<std::string> labels,
                                   std::vector<double> table) {
  if (labels.size() > kMaxGroundSet) {
    throw GicError(ErrorCode::kTooLarge, "ground set larger than 12");
  }
  if (table.size() != (std::size_t{1} << labels.size())) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "rank table must have 2^m entries");
  }
  Polymatroid p;
  p.labels_ = std::move(labels);
  p.table_ = std::move(table);
  return p;
}

bool DecodingOrder::IsPermutationOf(int m) const {
  if (static_cast<int>(order.size()) != m) return false;
  std::vector<bool> seen(m, false);
  for (int i : order) {
    if (i < 0 || i >= m || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

PowerVectorSimplex::PowerVectorSimplex(std::vector<std::vector<double>> coeffs,
                                       std::vector<double> rhs)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {
  if (coeffs_.size() != rhs_.size() || coeffs_.empty()) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "need one right-hand side per constraint row");
  }
  dim_ = static_cast<int>(coeffs_.front().size());
  std::vector<bool> covered(dim_, false);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (static_cast<int>(coeffs_[i].size()) != dim_) {
      throw GicError(ErrorCode::kDimensionMismatch, "ragged constraint rows");
    }
    if (!(rhs_[i] >= 0.0)) {
      throw GicError(ErrorCode::kInvalidArgument,
                     "right-hand sides must be >= 0");
    }
    for (int j = 0; j < dim_; ++j) {
      if (!(coeffs_[i][j] >= 0.0)) {
        throw GicError(ErrorCode::kInvalidArgument,
                       "coefficients must be >= 0");
      }
      if (coeffs_[i][j] > 0.0) covered[j] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw GicError(ErrorCode::kInvalidArgument,
                   "every power must appear in some constraint");
  }
}

PowerVectorSimplex PowerVectorSimplex::TwoUserBudget(const ChannelParams& cp) {
  return PowerVectorSimplex({{1, 1, 0, 0}, {0, 0, 1, 1}}, {cp.p1, cp.p2});
}

bool PowerVectorSimplex::Contains(std::span<const double> power,
                                  double tol) const {
  if (static_cast<int>(power.size()) != dim_) {
    throw GicError(ErrorCode::kDimensionMismatch, "power vector size");
  }
  for (double x : power) {
    if (x < -tol) return false;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double lhs = 0.0;
    for (int j = 0; j < dim_; ++j) lhs += coeffs_[i][j] * power[j];
    if (lhs > rhs_[i] + tol) return false;
  }
  return true;
}

PowerVectorSimplex PowerVectorSimplex::Residual(
    std::span<const double> fixed_prefix) const {
  const int k = static_cast<int>(fixed_prefix.size());
  if (k >= dim_) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "prefix must leave at least one free power");
  }
  std::vector<std::vector<double>> coeffs;
  std::vector<double> rhs;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double used = 0.0;
    for (int j = 0; j < k; ++j) used += coeffs_[i][j] * fixed_prefix[j];
    std::vector<double> row(coeffs_[i].begin() + k, coeffs_[i].end());
    const bool touches_rest =
        std::any_of(row.begin(), row.end(), [](double c) { return c > 0.0; });
    const double left = rhs_[i] - used;
    if (left < -1e-12) {
      throw GicError(ErrorCode::kInvalidArgument,
                     "fixed powers violate the simplex");
    }
    if (!touches_rest) continue;
    coeffs.push_back(std::move(row));
    rhs.push_back(std::max(left, 0.0));
  }
  return PowerVectorSimplex(std::move(coeffs), std::move(rhs));
}

MembershipResult Membership(const Polymatroid& p, std::span<const double> r) {
  if (static_cast<int>(r.size()) != p.size()) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "rate vector size differs from ground set");
  }
  MembershipResult out;
  for (double x : r) {
    if (x < -kMembershipTol) out.feasible = false;
  }
  for (Mask s = 1; s <= p.ground(); ++s) {
    double sum = 0.0;
    for (int i = 0; i < p.size(); ++i) {
      if (s & Bit(i)) sum += r[i];
    }
    if (sum > p(s) + kMembershipTol) {
      out.feasible = false;
      out.violated.push_back(s);
    }
  }
  return out;
}

AxiomReport CheckAxioms(const Polymatroid& p, double tol) {
  if (p.size() > kMaxGroundSet) {
    throw GicError(ErrorCode::kTooLarge, "exhaustive check needs m <= 12");
  }
  AxiomReport rep;
  rep.normalized = std::abs(p(0)) <= tol;
  const int m = p.size();
  for (Mask s = 0; s <= p.ground(); ++s) {
    for (int i = 0; i < m; ++i) {
      if (s & Bit(i)) continue;
      const double gain_i = p(s | Bit(i)) - p(s);
      if (gain_i < -tol) rep.monotone = false;
      // Local exchange form: f(S+i) + f(S+j) >= f(S+i+j) + f(S).
      for (int j = i + 1; j < m; ++j) {
        if (s & Bit(j)) continue;
        const double gain_after_j = p(s | Bit(i) | Bit(j)) - p(s | Bit(j));
        if (gain_after_j > gain_i + tol) rep.submodular = false;
      }
    }
  }
  return rep;
}

RateVector CornerPoint(const Polymatroid& p, const DecodingOrder& ord) {
  if (!ord.IsPermutationOf(p.size())) {
    throw GicError(ErrorCode::kInvalidArgument,
                   "decoding order is not a permutation of the ground set");
  }
  std::vector<double> r(p.size(), 0.0);
  Mask below = 0;
  for (int msg : ord.order) {
    r[msg] = p(below | Bit(msg)) - p(below);
    below |= Bit(msg);
  }
  return RateVector(p.labels(), std::move(r));
}

WeightedSumResult MaxWeightedSum(const Polymatroid& p,
                                 std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != p.size()) {
    throw GicError(ErrorCode::kDimensionMismatch,
                   "weight vector size differs from ground set");
  }
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw GicError(ErrorCode::kInvalidArgument, "weights must be >= 0");
    }
  }
  DecodingOrder ord;
  ord.order.resize(p.size());
  std::iota(ord.order.begin(), ord.order.end(), 0);
  std::stable_sort(ord.order.begin(), ord.order.end(),
                   [&](int x, int y) { return weights[x] > weights[y]; });
  RateVector r = CornerPoint(p, ord);
  double obj = 0.0;
  for (int i = 0; i < p.size(); ++i) obj += weights[i] * r[i];
  return {std::move(r), std::move(ord), obj};
}

Mask ExpandMask(Mask child_mask, Mask members) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; members >> i; ++i) {
    if (!(members & Bit(i))) continue;
    if (child_mask & Bit(k)) out |= Bit(i);
    ++k;
  }
  return out;
}

Mask CompressMask(Mask parent_mask, Mask members) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; members >> i; ++i) {
    if (!(members & Bit(i))) continue;
    if (parent_mask & Bit(i)) out |= Bit(k);
    ++k;
  }
  return out;
}

namespace {

std::vector<std::string> LabelsOf(const Polymatroid& p, Mask members) {
  std::vector<std::string> out;
  for (int i = 0; i < p.size(); ++i) {
    if (members & Bit(i)) out.push_back(p.labels()[i]);
  }
  return out;
}

void CheckSubset(const Polymatroid& p, Mask s) {
  if (s & ~p.ground()) {
    throw GicError(ErrorCode::kInvalidArgument,
                   "subset not contained in the ground set");
  }
}

}  // namespace

Polymatroid ProjectAbove(const Polymatroid& p, Mask bottom) {
  CheckSubset(p, bottom);
  const Mask rest = p.ground() & ~bottom;
  const double base = p(bottom);
  return Polymatroid(LabelsOf(p, rest), [&](Mask s) {
    return p(ExpandMask(s, rest) | bottom) - base;
  });
}

Polymatroid RestrictBelow(const Polymatroid& p, Mask bottom) {
  CheckSubset(p, bottom);
  return Polymatroid(LabelsOf(p, bottom),
                     [&](Mask s) { return p(ExpandMask(s, bottom)); });
}

Polymatroid SliceAt(const Polymatroid& p, int axis, double axis_rate) {
  if (axis < 0 || axis >= p.size()) {
    throw GicError(ErrorCode::kInvalidArgument, "axis out of range");
  }
  const Mask rest = p.ground() & ~Bit(axis);
  return Polymatroid(LabelsOf(p, rest), [&](Mask s) {
    if (s == 0) return 0.0;
    const Mask full = ExpandMask(s, rest);
    return std::min(p(full), p(full | Bit(axis)) - axis_rate);
  });
}

std::vector<Cut> NestedCuts(const Polymatroid& p, int axis) {
  if (p.size() < 2) {
    throw GicError(ErrorCode::kInvalidArgument, "nested cuts need m >= 2");
  }
  if (axis < 0 || axis >= p.size()) {
    throw GicError(ErrorCode::kInvalidArgument, "axis out of range");
  }
  std::vector<int> others;
  for (int i = 0; i < p.size(); ++i) {
    if (i != axis) others.push_back(i);
  }
  std::vector<Cut> cuts;
  Mask below = 0;
  for (int k = 0; k < p.size(); ++k) {
    if (k > 0) below |= Bit(others[k - 1]);
    const double rate = p(below | Bit(axis)) - p(below);
    cuts.push_back(Cut{k, SliceAt(p, axis, rate), rate});
  }
  return cuts;
}

}  // namespace gic
