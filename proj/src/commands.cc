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

#include "gic/commands.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "gic/epi.h"
#include "gic/gaussian_mac.h"
#include "gic/hk_region.h"
#include "gic/layers.h"
#include "gic/optimizer.h"
#include "gic/polymatroid.h"
#include "gic/random_instance.h"
#include "json.hpp"

namespace gic {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path PrepareOutDir(const Scenario& sc) {
  fs::path dir(sc.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw GicError(ErrorCode::kConfig,
                   "output directory not writable: " + sc.out_dir);
  }
  return dir;
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    throw GicError(ErrorCode::kConfig, "cannot write " + path.string());
  }
}

std::string Join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

json RatesJson(const RateVector& r) {
  json j = json::object();
  for (std::size_t i = 0; i < r.size(); ++i) j[r.labels()[i]] = r[i];
  return j;
}

json OrderJson(const DecodingOrder& ord) {
  json j = json::array();
  for (int m : ord.order) j.push_back(std::string(kMessageLabels[m]));
  return j;
}

json SplitJson(const PowerSplit& ps) {
  return {{"pu1", ps.pu1}, {"pv1", ps.pv1}, {"pu2", ps.pu2}, {"pv2", ps.pv2}};
}

}  // namespace

int RunRegion(const Scenario& sc, std::ostream& log) {
  const fs::path dir = PrepareOutDir(sc);
  const std::vector<BoundaryPoint> boundary =
      TraceBoundary(sc.params, sc.mu_grid, sc.optimizer);
  std::vector<AllPrivateSolution> ap(sc.mu_grid.size());
  ParallelFor(sc.mu_grid.size(), [&](std::size_t i) {
    ap[i] = AllPrivateOptimum(sc.params, sc.mu_grid[i], sc.optimizer);
  });

  std::string csv = std::string(kBoundaryCsvHeader) + '\n';
  json records = json::array();
  for (const BoundaryPoint& bp : boundary) {
    const RateVector& r = bp.solution.rates;
    csv += Join({FormatDouble(bp.mu), FormatDouble(bp.r1), FormatDouble(bp.r2),
                 FormatDouble(r[kU1]), FormatDouble(r[kV1]),
                 FormatDouble(r[kU2]), FormatDouble(r[kV2]),
                 FormatDouble(bp.split.pv1), FormatDouble(bp.split.pv2),
                 std::string(DominantName(bp.dominant))});
    json rec = {{"mu", bp.mu},
                {"split", SplitJson(bp.split)},
                {"rates", RatesJson(r)},
                {"r1", bp.r1},
                {"r2", bp.r2},
                {"objective", bp.solution.objective},
                {"tight", bp.tight},
                {"dominant", std::string(DominantName(bp.dominant))}};
    try {
      const TimeSharing ts =
          TimeSharingDecomposition(sc.params, bp.split, bp.solution);
      rec["time_sharing"] = {{"receiver", std::string(ReceiverName(ts.receiver))},
                             {"corner_a", RatesJson(ts.corner_a)},
                             {"corner_b", RatesJson(ts.corner_b)},
                             {"order_a", OrderJson(ts.order_a)},
                             {"order_b", OrderJson(ts.order_b)},
                             {"lambda", ts.lambda}};
    } catch (const GicError& e) {
      rec["time_sharing"] = nullptr;
      rec["time_sharing_error"] = std::string(ErrorCodeName(e.code()));
    }
    records.push_back(std::move(rec));
  }
  WriteFile(dir / "boundary.csv", csv);
  WriteFile(dir / "solutions.json", records.dump(2) + '\n');

  std::string cmp = std::string(kComparisonCsvHeader) + '\n';
  for (std::size_t i = 0; i < ap.size(); ++i) {
    const double full = boundary[i].solution.objective;
    cmp += Join({FormatDouble(ap[i].mu), FormatDouble(ap[i].q1),
                 FormatDouble(ap[i].q2), FormatDouble(ap[i].r1),
                 FormatDouble(ap[i].r2), FormatDouble(ap[i].objective),
                 FormatDouble(full), FormatDouble(full - ap[i].objective)});
  }
  WriteFile(dir / "comparison.csv", cmp);

  if (sc.plot) {
    SvgPlot plot{"Rate region boundary", "R1 (bits/use)", "R2 (bits/use)",
                 false, false, {}};
    SvgSeries hk{"Han-Kobayashi (public + private)", "#1f77b4", {}, true};
    SvgSeries priv{"all-private", "#d62728", {}, true};
    for (const BoundaryPoint& bp : boundary) hk.points.push_back({bp.r1, bp.r2});
    for (const AllPrivateSolution& s : ap) priv.points.push_back({s.r1, s.r2});
    plot.series = {hk, priv};
    WriteFile(dir / "boundary.svg", RenderSvg(plot));
  }
  log << "region: " << boundary.size() << " boundary points written to "
      << dir.string() << '\n';
  return kExitOk;
}

int RunSaturation(const Scenario& sc, std::ostream& log) {
  const fs::path dir = PrepareOutDir(sc);
  std::vector<SaturationResult> rows(sc.mu_grid.size());
  ParallelFor(sc.mu_grid.size(), [&](std::size_t i) {
    rows[i] = SaturationLevels(sc.params, sc.mu_grid[i], sc.optimizer);
  });
  std::string csv = std::string(kSaturationCsvHeader) + '\n';
  int failures = 0;
  for (const SaturationResult& s : rows) {
    csv += Join({FormatDouble(s.mu), FormatDouble(s.p_hat_1),
                 FormatDouble(s.p_hat_2), FormatDouble(s.r_sat_1),
                 FormatDouble(s.r_sat_2),
                 FormatDouble(s.residual_public_power)});
    if (!s.verified) {
      ++failures;
      log << "saturation: VerificationFailed at mu=" << FormatDouble(s.mu)
          << " residual=" << FormatDouble(s.residual_public_power) << '\n';
    }
  }
  WriteFile(dir / "saturation.csv", csv);
  log << "saturation: " << rows.size() << " rows, " << failures
      << " verification failures, tolerance "
      << FormatDouble(OuterResolution(sc.params, sc.optimizer)) << '\n';
  return failures == 0 ? kExitOk : kExitValidationFailure;
}

int RunLayers(const Scenario& sc, std::ostream& log) {
  const fs::path dir = PrepareOutDir(sc);
  LayerOptions opts;
  opts.band = sc.band;
  const ConvergenceTable t =
      ConvergenceTest(sc.params, sc.LayerSplit(), sc.deltas, opts);
  std::string csv = std::string(kLayersCsvHeader) + '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::string ratio;
    if (i > 0 && t.rows[i].max_abs_error > 0.0) {
      ratio = FormatDouble(t.rows[i - 1].max_abs_error /
                           t.rows[i].max_abs_error);
    }
    csv += Join({FormatDouble(t.rows[i].delta),
                 FormatDouble(t.rows[i].max_abs_error), ratio});
  }
  WriteFile(dir / "layers.csv", csv);
  if (sc.plot) {
    SvgPlot plot{"Layer construction error", "delta", "max abs error (bits)",
                 true, true, {}};
    SvgSeries s{"aggregated vs continuum", "#1f77b4", {}, true};
    for (const auto& row : t.rows) {
      if (row.max_abs_error > 0.0) s.points.push_back({row.delta, row.max_abs_error});
    }
    plot.series = {s};
    WriteFile(dir / "layers.svg", RenderSvg(plot));
  }
  log << "layers: " << t.rows.size() << " deltas, "
      << (t.exact ? "exact telescoping"
                  : (t.first_order ? "first-order convergence"
                                   : "convergence check FAILED"))
      << '\n';
  return t.first_order ? kExitOk : kExitValidationFailure;
}

namespace {

struct CheckRow {
  std::string name;
  int cases = 0;
  double worst = 0.0;  // largest observed error or violation
  bool pass = true;
};

std::vector<std::vector<int>> Permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Position of message `m` inside the compressed ground set `members`.
int ChildIndex(int m, Mask members) {
  return std::popcount(members & (Bit(m) - 1));
}

Polymatroid MaybePerturb(const Polymatroid& p, bool fault) {
  if (!fault) return p;
  std::vector<double> table(p.table().begin(), p.table().end());
  table.back() += 0.25;
  return Polymatroid::FromTable(p.labels(), std::move(table));
}

}  // namespace

int RunValidate(const Scenario& sc, std::ostream& report) {
  std::mt19937_64 rng(sc.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Instance> inst;
  std::vector<double> mus;
  for (int i = 0; i < sc.validate_instances; ++i) {
    inst.push_back(RandomInstance(rng));
    mus.push_back(std::exp2(-3.0 + 6.0 * unit(rng)));
  }

  CheckRow axioms{"polymatroid axioms (4 MACs per instance)"};
  CheckRow corners{"corner points on sum-rate front (24 orders x 2)"};
  CheckRow greedy{"greedy = best corner point (20 weights x 2)"};
  CheckRow projection{"HK MAC = projection above dummy"};
  CheckRow layered{"corner point splits across Map / maP"};
  CheckRow slice{"P0 slice = HK rows, equal optimum"};
  CheckRow epi{"EPI bounds coincide for Gaussian power"};
  CheckRow floor{"EPI floor reproduces Gaussian ranks"};
  CheckRow power{"all-private optimum uses full power"};

  const auto perms4 = Permutations(4);
  for (std::size_t k = 0; k < inst.size(); ++k) {
    const ChannelParams& cp = inst[k].params;
    const PowerSplit& ps = inst[k].split;
    for (Receiver rx : {Receiver::kY1, Receiver::kY2}) {
      const Polymatroid over =
          MaybePerturb(BuildOverlineMac(cp, ps, rx),
                       sc.inject_fault && rx == Receiver::kY1);
      const Polymatroid hk = HkMac(cp, ps, rx);
      axioms.cases += 2;
      axioms.pass = axioms.pass && ValidatePolymatroid(over) &&
                    ValidatePolymatroid(hk);

      const double front = SumRateFront(cp, rx);
      for (const auto& o : perms4) {
        const RateVector r = CornerPoint(over, {o});
        const double sum = std::accumulate(r.rates().begin(), r.rates().end(), 0.0);
        corners.worst = std::max(corners.worst, std::abs(sum - front));
        corners.pass = corners.pass && Membership(over, r).feasible;
        ++corners.cases;
      }

      for (int t = 0; t < 20; ++t) {
        std::vector<double> w(4);
        for (double& x : w) x = unit(rng);
        const double g = MaxWeightedSum(over, w).objective;
        double brute = -1.0;
        for (const auto& o : perms4) {
          const RateVector r = CornerPoint(over, {o});
          double v = 0.0;
          for (int i = 0; i < 4; ++i) v += w[i] * r[i];
          brute = std::max(brute, v);
        }
        greedy.worst = std::max(greedy.worst, std::abs(g - brute));
        ++greedy.cases;
      }

      const Polymatroid proj = ProjectAbove(over, Bit(DummyMessage(rx)));
      for (Mask s = 0; s <= hk.ground(); ++s) {
        projection.worst = std::max(projection.worst, std::abs(proj(s) - hk(s)));
      }
      ++projection.cases;

      // Bottom two messages of a random order against Map / maP.
      const std::vector<int>& ord =
          perms4[static_cast<std::size_t>(unit(rng) * 24) % 24];
      const Mask bottom = Bit(ord[0]) | Bit(ord[1]);
      const Mask top = 0xFu & ~bottom;
      const RateVector full = CornerPoint(over, {ord});
      const RateVector ra = CornerPoint(
          ProjectAbove(over, bottom),
          {{ChildIndex(ord[2], top), ChildIndex(ord[3], top)}});
      const RateVector rb = CornerPoint(
          RestrictBelow(over, bottom),
          {{ChildIndex(ord[0], bottom), ChildIndex(ord[1], bottom)}});
      for (int j = 0; j < 2; ++j) {
        layered.worst = std::max(
            layered.worst, std::abs(full[ord[2 + j]] - ra[ChildIndex(ord[2 + j], top)]));
        layered.worst = std::max(
            layered.worst, std::abs(full[ord[j]] - rb[ChildIndex(ord[j], bottom)]));
      }
      ++layered.cases;
    }

    const P0SliceReport rep = P0SliceCheck(cp, ps);
    const double hk_opt = MaxWsrObjective(BuildPolytope(cp, ps), mus[k]);
    const double slice_opt =
        MaxWsrObjective(BuildP0SlicePolytope(cp, ps), mus[k]);
    slice.worst = std::max({slice.worst, rep.max_residual,
                            std::abs(hk_opt - slice_opt)});
    for (double s : rep.redundant_slack) slice.pass = slice.pass && s >= -1e-12;
    ++slice.cases;

    const double h = 3.0 * (unit(rng) - 0.5);
    const double p_eq = GaussianEquivPower(h);
    const EpiBounds eq = ComputeEpiBounds({h, p_eq, 1.0});
    const EpiBounds inflated = ComputeEpiBounds({h, p_eq + 1e-6, 1.0});
    epi.worst = std::max(epi.worst, std::abs(eq.lower - *eq.upper));
    epi.pass = epi.pass && *inflated.upper > inflated.lower;
    ++epi.cases;

    const ReceiverPowers y1 = ReceivedPowers(cp, ps, Receiver::kY1);
    const double h_signal = GaussianEntropy(
        ps.pv1 + cp.a * ps.pv2 + cp.sigma2);
    const double rate = h_signal -
                        InterferenceEntropyFloor(cp, ps, Receiver::kY1);
    floor.worst = std::max(
        floor.worst, std::abs(rate - GaussianRank(y1, Bit(kV1), Bit(kV2))));
    ++floor.cases;

    OptimizerOptions fast = sc.optimizer;
    fast.all_private_grid = std::min(fast.all_private_grid, 64);
    const AllPrivateSolution aps = AllPrivateOptimum(cp, mus[k], fast);
    power.pass = power.pass && aps.full_power;
    power.worst = std::max(power.worst,
                           1.0 - std::max(aps.q1 / cp.p1, aps.q2 / cp.p2));
    ++power.cases;
  }

  corners.pass = corners.pass && corners.worst <= 1e-12;
  greedy.pass = greedy.worst <= 1e-12;
  projection.pass = projection.worst <= 1e-12;
  layered.pass = layered.worst <= 1e-12;
  slice.pass = slice.pass && slice.worst <= 1e-9;
  epi.pass = epi.pass && epi.worst <= 1e-12;
  floor.pass = floor.worst <= 1e-12;

  const std::vector<CheckRow> rows = {axioms, corners, greedy, projection,
                                      layered, slice, epi, floor, power};
  bool all = true;
  report << "seed " << sc.seed << ", " << sc.validate_instances
         << " random instances\n";
  for (const CheckRow& r : rows) {
    std::ostringstream worst;
    worst << std::scientific << std::setprecision(2) << r.worst;
    report << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(50)
           << r.name << std::right << std::setw(6) << r.cases
           << "  worst " << worst.str() << '\n';
    all = all && r.pass;
  }
  report << (all ? "all checks passed\n" : "validation FAILED\n");
  return all ? kExitOk : kExitValidationFailure;
}

std::string RenderSvg(const SvgPlot& plot) {
  constexpr double kW = 640, kH = 480, kLeft = 70, kRight = 20, kTop = 40,
                   kBottom = 60;
  auto tx = [&](double v) { return plot.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return plot.log_y ? std::log10(v) : v; };
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : plot.series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (!plot.log_x) xmin = std::min(xmin, 0.0);
  if (!plot.log_y) ymin = std::min(ymin, 0.0);
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
  const double xpad = 0.05 * (xmax - xmin);
  const double ypad = 0.05 * (ymax - ymin);
  xmax += xpad;
  ymax += ypad;
  if (plot.log_x) xmin -= xpad;
  if (plot.log_y) ymin -= ypad;
  auto px = [&](double v) {
    return kLeft + (tx(v) - xmin) / (xmax - xmin) * (kW - kLeft - kRight);
  };
  auto py = [&](double v) {
    return kH - kBottom - (ty(v) - ymin) / (ymax - ymin) * (kH - kTop - kBottom);
  };
  auto num = [](double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << v;
    return o.str();
  };
  auto tick_label = [](double v, bool log) {
    std::ostringstream o;
    if (log) {
      o << "1e" << static_cast<int>(std::lround(v));
    } else {
      o << std::setprecision(3) << v;
    }
    return o.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << plot.title << "</text>\n";
  const double x0 = kLeft, x1 = kW - kRight, y0 = kH - kBottom, y1 = kTop;
  svg << "<path d=\"M" << x0 << ' ' << y1 << " V" << y0 << " H" << x1
      << "\" stroke=\"black\" fill=\"none\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double xv = xmin + (xmax - xmin) * i / 5.0;
    double yv = ymin + (ymax - ymin) * i / 5.0;
    if (plot.log_x) xv = std::round(xv);
    if (plot.log_y) yv = std::round(yv);
    const double sx = kLeft + (xv - xmin) / (xmax - xmin) * (kW - kLeft - kRight);
    const double sy =
        kH - kBottom - (yv - ymin) / (ymax - ymin) * (kH - kTop - kBottom);
    if (sx >= x0 - 1e-9 && sx <= x1 + 1e-9) {
      svg << "<line x1=\"" << num(sx) << "\" y1=\"" << y0 << "\" x2=\""
          << num(sx) << "\" y2=\"" << y0 + 5 << "\" stroke=\"black\"/>"
          << "<text x=\"" << num(sx) << "\" y=\"" << y0 + 18
          << "\" text-anchor=\"middle\">" << tick_label(xv, plot.log_x)
          << "</text>\n";
    }
    if (sy <= y0 + 1e-9 && sy >= y1 - 1e-9) {
      svg << "<line x1=\"" << x0 - 5 << "\" y1=\"" << num(sy) << "\" x2=\""
          << x0 << "\" y2=\"" << num(sy) << "\" stroke=\"black\"/>"
          << "<text x=\"" << x0 - 8 << "\" y=\"" << num(sy + 4)
          << "\" text-anchor=\"end\">" << tick_label(yv, plot.log_y)
          << "</text>\n";
    }
  }
  svg << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kH - 15
      << "\" text-anchor=\"middle\">" << plot.x_label << "</text>\n";
  svg << "<text x=\"18\" y=\"" << (y0 + y1) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (y0 + y1) / 2 << ")\">" << plot.y_label << "</text>\n";
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const SvgSeries& s = plot.series[k];
    svg << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) svg << ' ';
      svg << num(px(s.points[i].first)) << ',' << num(py(s.points[i].second));
    }
    svg << "\"/>\n";
    if (s.markers) {
      for (const auto& [x, y] : s.points) {
        svg << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
            << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
      }
    }
    const double ly = kTop + 10 + 16.0 * k;
    svg << "<line x1=\"" << x1 - 200 << "\" y1=\"" << ly << "\" x2=\""
        << x1 - 180 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/><text x=\"" << x1 - 175 << "\" y=\""
        << ly + 4 << "\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gic
