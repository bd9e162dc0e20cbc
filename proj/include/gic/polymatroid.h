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

#ifndef GIC_POLYMATROID_H_
#define GIC_POLYMATROID_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gic/model.h"

namespace gic {

inline constexpr int kMaxGroundSet = 12;
inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kAxiomTol = 1e-12;

// A set function f over subsets of {0..m-1}, tabulated once at construction.
// The region it describes is {r >= 0 : sum_{i in S} r_i <= f(S) for all S}.
class Polymatroid {
 public:
  using RankOracle = std::function<double(Mask)>;

  // Evaluates `rank` on all 2^m subsets. Throws kTooLarge when m > 12.
  Polymatroid(std::vector<std::string> labels, const RankOracle& rank);
  static Polymatroid FromTable(std::vector<std::string> labels,
                               std::vector<double> table);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask ground() const { return (Mask{1} << size()) - 1; }
  double rank(Mask s) const { return table_[s]; }
  double operator()(Mask s) const { return table_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const double> table() const { return table_; }

 private:
  Polymatroid() = default;

  std::vector<std::string> labels_;
  std::vector<double> table_;
};

// Successive-decoding order, listed bottom (decoded last) to top (decoded
// first).
struct DecodingOrder {
  std::vector<int> order;

  bool IsPermutationOf(int m) const;
};

// Linear power constraints sum_j coeffs[i][j] * p_j <= rhs[i] with
// nonnegative coefficients, over the nonnegative orthant.
class PowerVectorSimplex {
 public:
  PowerVectorSimplex(std::vector<std::vector<double>> coeffs,
                     std::vector<double> rhs);

  // Per-user budget form pu1 + pv1 <= p1, pu2 + pv2 <= p2 over (U1,V1,U2,V2).
  static PowerVectorSimplex TwoUserBudget(const ChannelParams& cp);

  int dimension() const { return dim_; }
  bool Contains(std::span<const double> power, double tol = 1e-12) const;

  // Simplex left for coordinates k..m-1 once the first k powers are fixed.
  // Throws kInvalidArgument if the fixed prefix is already infeasible.
  PowerVectorSimplex Residual(std::span<const double> fixed_prefix) const;

  const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }
  const std::vector<double>& rhs() const { return rhs_; }

 private:
  int dim_ = 0;
  std::vector<std::vector<double>> coeffs_;
  std::vector<double> rhs_;
};

struct MembershipResult {
  bool feasible = true;
  std::vector<Mask> violated;
};

// Checks every nonempty subset constraint at kMembershipTol.
MembershipResult Membership(const Polymatroid& p, std::span<const double> r);
inline MembershipResult Membership(const Polymatroid& p, const RateVector& r) {
  return Membership(p, r.rates());
}

struct AxiomReport {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  bool ok() const { return normalized && monotone && submodular; }
};

// Exhaustive axiom check. Throws kTooLarge when m > 12.
AxiomReport CheckAxioms(const Polymatroid& p, double tol = kAxiomTol);
inline bool ValidatePolymatroid(const Polymatroid& p,
                                double tol = kAxiomTol) {
  return CheckAxioms(p, tol).ok();
}

// Rate increments of the successive-decoding stack `ord`:
// r_{ord[k]} = f(ord[0..k]) - f(ord[0..k-1]).
RateVector CornerPoint(const Polymatroid& p, const DecodingOrder& ord);

struct WeightedSumResult {
  RateVector rates;
  DecodingOrder order;
  double objective = 0.0;
};

// Greedy maximizer of w.r: the largest weight is decoded last (bottom).
// Ties go to the lower message index.
WeightedSumResult MaxWeightedSum(const Polymatroid& p,
                                 std::span<const double> weights);

// Messages outside `bottom`, with `bottom` treated as noise:
// f_T(S) = f(S u B) - f(B).
Polymatroid ProjectAbove(const Polymatroid& p, Mask bottom);

// Messages inside `bottom` once everything above is decoded: f_B(S) = f(S).
Polymatroid RestrictBelow(const Polymatroid& p, Mask bottom);

// Slice of the region at a fixed rate `axis_rate` of message `axis`,
// expressed over the remaining messages:
// g(S) = min(f(S), f(S + axis) - axis_rate).
Polymatroid SliceAt(const Polymatroid& p, int axis, double axis_rate);

struct Cut {
  int position = 0;  // 0 = axis message at the bottom of the stack.
  Polymatroid child;
  double axis_rate = 0.0;
};

// One cut per stack position of `axis`, other messages in index order.
// Position 0 gives the interior (largest axis rate) region, position m-1 the
// exterior one.
std::vector<Cut> NestedCuts(const Polymatroid& p, int axis);

// Maps between a parent ground set and the ascending list of its members
// that forms a child ground set.
Mask ExpandMask(Mask child_mask, Mask members);
Mask CompressMask(Mask parent_mask, Mask members);

}  // namespace gic

#endif  // GIC_POLYMATROID_H_
