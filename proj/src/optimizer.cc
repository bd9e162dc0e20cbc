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

#include "gic/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace gic {

double AllPrivateRate1(const ChannelParams& cp, double q1, double q2) {
  return HalfLog2OnePlus(q1 / (cp.sigma2 + cp.a * q2));
}

double AllPrivateRate2(const ChannelParams& cp, double q1, double q2) {
  return HalfLog2OnePlus(q2 / (cp.sigma2 + cp.b * q1));
}

namespace {

double AllPrivateObjective(const ChannelParams& cp, double mu, double q1,
                           double q2) {
  return AllPrivateRate1(cp, q1, q2) + mu * AllPrivateRate2(cp, q1, q2);
}

// Golden-section maximization of f on [lo, hi] down to `tol`. The endpoints
// are compared against the interior result.
template <typename F>
double GoldenMax(F f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double best = 0.5 * (a + b);
  double fbest = f(best);
  for (double e : {lo, hi}) {
    const double fe = f(e);
    if (fe >= fbest) {
      best = e;
      fbest = fe;
    }
  }
  return best;
}

void CheckMu(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw GicError(ErrorCode::kInvalidArgument, "mu must be finite and >= 0");
  }
}

}  // namespace

AllPrivateSolution AllPrivateOptimum(const ChannelParams& raw, double mu,
                                     const OptimizerOptions& opts) {
  const ChannelParams cp = ValidateParams(raw);
  CheckMu(mu);
  const int n = std::max(opts.all_private_grid, 2);
  const double h1 = cp.p1 / (n - 1);
  const double h2 = cp.p2 / (n - 1);
  double q1 = cp.p1;
  double q2 = cp.p2;
  double best = AllPrivateObjective(cp, mu, q1, q2);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j >= 0; --j) {
      const double x = i * h1;
      const double y = j * h2;
      const double v = AllPrivateObjective(cp, mu, x, y);
      if (v > best + 1e-15) {
        best = v;
        q1 = x;
        q2 = y;
      }
    }
  }
  constexpr double kPowerTol = 1e-10;
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double old1 = q1;
    const double old2 = q2;
    q1 = GoldenMax(
        [&](double x) { return AllPrivateObjective(cp, mu, x, q2); },
        std::max(0.0, q1 - h1), std::min(cp.p1, q1 + h1), kPowerTol);
    q2 = GoldenMax(
        [&](double y) { return AllPrivateObjective(cp, mu, q1, y); },
        std::max(0.0, q2 - h2), std::min(cp.p2, q2 + h2), kPowerTol);
    if (std::abs(q1 - old1) <= kPowerTol && std::abs(q2 - old2) <= kPowerTol) {
      break;
    }
  }
  AllPrivateSolution s;
  s.mu = mu;
  s.q1 = q1;
  s.q2 = q2;
  s.r1 = AllPrivateRate1(cp, q1, q2);
  s.r2 = AllPrivateRate2(cp, q1, q2);
  s.objective = s.r1 + mu * s.r2;
  s.full_power = std::max(q1 / cp.p1, q2 / cp.p2) >= 1.0 - 1e-6;
  return s;
}

double OuterResolution(const ChannelParams& cp, const OptimizerOptions& opts) {
  return std::max(cp.p1, cp.p2) / (std::max(opts.outer_grid, 2) - 1);
}

namespace {

// Split search without parameter validation, so budgets of zero are allowed
// (used by the nested re-solve).
HkOptimum SearchSplit(const ChannelParams& cp, double mu,
                      const OptimizerOptions& opts) {
  auto evaluate = [&](double f1, double f2) {
    const PowerSplit ps =
        PowerSplit::FromPrivate(cp, f1 * cp.p1, f2 * cp.p2);
    return MaxWsrObjective(BuildPolytope(cp, ps), mu);
  };
  const int n = std::max(opts.outer_grid, 2);
  const double h = 1.0 / (n - 1);
  // Fractions of the budget given to private messages. Scanning from the
  // all-private corner downward keeps the most private split on ties.
  double f1 = 1.0;
  double f2 = 1.0;
  double best = evaluate(f1, f2);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j >= 0; --j) {
      const double v = evaluate(i * h, j * h);
      if (v > best + 1e-12) {
        best = v;
        f1 = i * h;
        f2 = j * h;
      }
    }
  }
  double step = h;
  for (int round = 0; round < opts.refine_rounds; ++round) {
    step *= 0.5;
    const double c1 = f1;
    const double c2 = f2;
    for (int di = 2; di >= -2; --di) {
      for (int dj = 2; dj >= -2; --dj) {
        if (di == 0 && dj == 0) continue;
        const double x = std::clamp(c1 + di * step, 0.0, 1.0);
        const double y = std::clamp(c2 + dj * step, 0.0, 1.0);
        const double v = evaluate(x, y);
        if (v > best + 1e-12) {
          best = v;
          f1 = x;
          f2 = y;
        }
      }
    }
  }
  HkOptimum out;
  out.split = PowerSplit::FromPrivate(cp, f1 * cp.p1, f2 * cp.p2);
  out.solution = MaxWsrOverPolytope(BuildPolytope(cp, out.split), mu);
  return out;
}

}  // namespace

HkOptimum MaxWsr(const ChannelParams& raw, double mu,
                 const OptimizerOptions& opts) {
  const ChannelParams cp = ValidateParams(raw);
  CheckMu(mu);
  return SearchSplit(cp, mu, opts);
}

SaturationResult SaturationLevels(const ChannelParams& raw, double mu,
                                  const OptimizerOptions& opts) {
  const ChannelParams cp = ValidateParams(raw);
  CheckMu(mu);
  const HkOptimum full = SearchSplit(cp, mu, opts);
  SaturationResult s;
  s.mu = mu;
  s.p_hat_1 = full.split.pv1;
  s.p_hat_2 = full.split.pv2;
  const DummyRates d = ComputeDummyRates(cp, full.split);
  s.r_sat_1 = d.v2_at_y1;
  s.r_sat_2 = d.v1_at_y2;
  s.tolerance = OuterResolution(cp, opts);
  if (s.p_hat_1 > 0.0 || s.p_hat_2 > 0.0) {
    ChannelParams shrunk = cp;
    shrunk.p1 = s.p_hat_1;
    shrunk.p2 = s.p_hat_2;
    const HkOptimum nested = SearchSplit(shrunk, mu, opts);
    s.residual_public_power = nested.split.pu1 + nested.split.pu2;
  }
  s.nested = s.residual_public_power <= s.tolerance;
  s.verified = s.residual_public_power <= 10.0 * s.tolerance;
  return s;
}

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(
      n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

void CheckMuList(const std::vector<double>& mu_list) {
  if (mu_list.empty()) {
    throw GicError(ErrorCode::kInvalidArgument, "mu list is empty");
  }
  for (std::size_t i = 0; i < mu_list.size(); ++i) {
    CheckMu(mu_list[i]);
    if (i > 0 && !(mu_list[i] > mu_list[i - 1])) {
      throw GicError(ErrorCode::kInvalidArgument,
                     "mu list must be strictly increasing");
    }
  }
}

}  // namespace

std::vector<BoundaryPoint> TraceBoundary(const ChannelParams& raw,
                                         const std::vector<double>& mu_list,
                                         const OptimizerOptions& opts) {
  const ChannelParams cp = ValidateParams(raw);
  CheckMuList(mu_list);
  std::vector<BoundaryPoint> out(mu_list.size());
  ParallelFor(mu_list.size(), [&](std::size_t i) {
    const HkOptimum opt = SearchSplit(cp, mu_list[i], opts);
    BoundaryPoint& bp = out[i];
    bp.mu = mu_list[i];
    bp.r1 = opt.solution.r1();
    bp.r2 = opt.solution.r2();
    bp.split = opt.split;
    bp.dominant = opt.solution.dominant;
    bp.tight = opt.solution.tight;
    bp.solution = opt.solution;
  });
  return out;
}

ComparisonTable CompareBoundaries(const std::vector<AllPrivateSolution>& ap,
                                  const std::vector<BoundaryPoint>& full) {
  if (ap.size() != full.size()) {
    throw GicError(ErrorCode::kDimensionMismatch, "sweep lengths differ");
  }
  ComparisonTable t;
  std::vector<std::size_t> agree;
  for (std::size_t i = 0; i < ap.size(); ++i) {
    t.rows.push_back({ap[i].mu, ap[i].objective, full[i].solution.objective});
    if (std::abs(ap[i].objective - full[i].solution.objective) <= 1e-6) {
      agree.push_back(i);
    }
  }
  if (!agree.empty()) {
    t.agreement = std::make_pair(agree.front(), agree.back());
    t.agreement_contiguous = agree.back() - agree.front() + 1 == agree.size();
  }
  return t;
}

ComparisonTable AllPrivateVsFull(const ChannelParams& raw,
                                 const std::vector<double>& mu_list,
                                 const OptimizerOptions& opts) {
  const ChannelParams cp = ValidateParams(raw);
  const std::vector<BoundaryPoint> full = TraceBoundary(cp, mu_list, opts);
  std::vector<AllPrivateSolution> ap(mu_list.size());
  ParallelFor(mu_list.size(), [&](std::size_t i) {
    ap[i] = AllPrivateOptimum(cp, mu_list[i], opts);
  });
  return CompareBoundaries(ap, full);
}

double SingleMacBound(const ChannelParams& cp, double mu) {
  const double c1 = HalfLog2OnePlus(cp.p1 / cp.sigma2);
  const double c2 = HalfLog2OnePlus(cp.p2 / cp.sigma2);
  const double scale = std::max(1.0, mu);
  const double via_y1 = scale * SumRateFront(cp, Receiver::kY1) + mu * c2;
  const double via_y2 = scale * SumRateFront(cp, Receiver::kY2) + c1;
  return std::min(via_y1, via_y2);
}

std::vector<double> DefaultMuGrid() {
  std::vector<double> mu;
  for (int k = 0; k <= 32; ++k) mu.push_back(std::exp2(-4.0 + k / 4.0));
  return mu;
}

}  // namespace gic
