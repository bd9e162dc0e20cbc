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

// Python bindings for the rate-region library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gic/epi.h"
#include "gic/gaussian_mac.h"
#include "gic/hk_region.h"
#include "gic/layers.h"
#include "gic/model.h"
#include "gic/optimizer.h"
#include "gic/polymatroid.h"

namespace py = pybind11;

namespace {

std::vector<double> Rates(const gic::RateVector& r) { return r.rates(); }

py::dict SolutionDict(const gic::WsrSolution& s) {
  py::dict d;
  d["mu"] = s.mu;
  d["rates"] = s.rates.rates();
  d["labels"] = s.rates.labels();
  d["objective"] = s.objective;
  d["tight"] = s.tight;
  d["dominant"] = std::string(gic::DominantName(s.dominant));
  d["r1"] = s.r1();
  d["r2"] = s.r2();
  return d;
}

}  // namespace

PYBIND11_MODULE(_gic, m) {
  m.doc() = "Rate regions of the two-user weak Gaussian interference channel";

  py::register_exception<gic::GicError>(m, "GicError", PyExc_ValueError);

  py::class_<gic::ChannelParams>(m, "ChannelParams")
      .def(py::init([](double a, double b, double p1, double p2,
                       double sigma2) {
             return gic::ValidateParams({a, b, p1, p2, sigma2});
           }),
           py::arg("a"), py::arg("b"), py::arg("p1"), py::arg("p2"),
           py::arg("sigma2") = 1.0)
      .def_readonly("a", &gic::ChannelParams::a)
      .def_readonly("b", &gic::ChannelParams::b)
      .def_readonly("p1", &gic::ChannelParams::p1)
      .def_readonly("p2", &gic::ChannelParams::p2)
      .def_readonly("sigma2", &gic::ChannelParams::sigma2);

  py::class_<gic::PowerSplit>(m, "PowerSplit")
      .def(py::init([](double pu1, double pv1, double pu2, double pv2) {
             return gic::PowerSplit{pu1, pv1, pu2, pv2};
           }),
           py::arg("pu1"), py::arg("pv1"), py::arg("pu2"), py::arg("pv2"))
      .def_static("from_private", &gic::PowerSplit::FromPrivate)
      .def_static("all_private", &gic::PowerSplit::AllPrivate)
      .def_readonly("pu1", &gic::PowerSplit::pu1)
      .def_readonly("pv1", &gic::PowerSplit::pv1)
      .def_readonly("pu2", &gic::PowerSplit::pu2)
      .def_readonly("pv2", &gic::PowerSplit::pv2);

  py::enum_<gic::Receiver>(m, "Receiver")
      .value("Y1", gic::Receiver::kY1)
      .value("Y2", gic::Receiver::kY2);

  py::class_<gic::Polymatroid>(m, "Polymatroid")
      .def_static("from_table", &gic::Polymatroid::FromTable)
      .def("__call__", &gic::Polymatroid::rank)
      .def_property_readonly("size", &gic::Polymatroid::size)
      .def_property_readonly("labels", &gic::Polymatroid::labels)
      .def_property_readonly("table",
                             [](const gic::Polymatroid& p) {
                               return std::vector<double>(p.table().begin(),
                                                          p.table().end());
                             })
      .def("is_valid",
           [](const gic::Polymatroid& p) {
             return gic::ValidatePolymatroid(p);
           })
      .def("corner_point",
           [](const gic::Polymatroid& p, std::vector<int> order) {
             return Rates(gic::CornerPoint(p, {std::move(order)}));
           })
      .def("max_weighted_sum",
           [](const gic::Polymatroid& p, std::vector<double> w) {
             const gic::WeightedSumResult r = gic::MaxWeightedSum(p, w);
             return py::make_tuple(Rates(r.rates), r.order.order, r.objective);
           })
      .def("contains",
           [](const gic::Polymatroid& p, std::vector<double> r) {
             return gic::Membership(p, r).feasible;
           })
      .def("project_above", &gic::ProjectAbove)
      .def("restrict_below", &gic::RestrictBelow);

  m.def("overline_mac", &gic::BuildOverlineMac, py::arg("cp"), py::arg("ps"),
        py::arg("rx"));
  m.def("hk_mac", &gic::HkMac, py::arg("cp"), py::arg("ps"), py::arg("rx"));
  m.def("sum_rate_front", &gic::SumRateFront, py::arg("cp"), py::arg("rx"));

  m.def(
      "hk_vertices",
      [](const gic::ChannelParams& cp, const gic::PowerSplit& ps) {
        std::vector<std::vector<double>> out;
        for (const auto& v : gic::EnumerateVertices(gic::BuildPolytope(cp, ps))) {
          out.push_back(v.rates());
        }
        return out;
      },
      py::arg("cp"), py::arg("ps"));
  m.def(
      "max_wsr_fixed_split",
      [](const gic::ChannelParams& cp, const gic::PowerSplit& ps, double mu) {
        return SolutionDict(
            gic::MaxWsrOverPolytope(gic::BuildPolytope(cp, ps), mu));
      },
      py::arg("cp"), py::arg("ps"), py::arg("mu"));
  m.def(
      "max_wsr",
      [](const gic::ChannelParams& cp, double mu) {
        const gic::HkOptimum opt = gic::MaxWsr(cp, mu);
        py::dict d = SolutionDict(opt.solution);
        d["split"] = py::make_tuple(opt.split.pu1, opt.split.pv1,
                                    opt.split.pu2, opt.split.pv2);
        return d;
      },
      py::arg("cp"), py::arg("mu"));
  m.def(
      "all_private_optimum",
      [](const gic::ChannelParams& cp, double mu) {
        const gic::AllPrivateSolution s = gic::AllPrivateOptimum(cp, mu);
        py::dict d;
        d["q1"] = s.q1;
        d["q2"] = s.q2;
        d["r1"] = s.r1;
        d["r2"] = s.r2;
        d["objective"] = s.objective;
        d["full_power"] = s.full_power;
        return d;
      },
      py::arg("cp"), py::arg("mu"));
  m.def(
      "trace_boundary",
      [](const gic::ChannelParams& cp, const std::vector<double>& mus) {
        std::vector<std::pair<double, double>> out;
        for (const auto& bp : gic::TraceBoundary(cp, mus)) {
          out.emplace_back(bp.r1, bp.r2);
        }
        return out;
      },
      py::arg("cp"), py::arg("mu_list"));
  m.def(
      "layer_rates",
      [](const gic::ChannelParams& cp, const gic::PowerSplit& ps,
         double delta) {
        const gic::ExtendedRateVector r =
            gic::AggregateRates(gic::BuildStacks(cp, ps, delta));
        return py::make_tuple(r.base.rates(), r.dummy_v2_at_y1,
                              r.dummy_v1_at_y2);
      },
      py::arg("cp"), py::arg("ps"), py::arg("delta"));

  m.def("gaussian_entropy", &gic::GaussianEntropy, py::arg("power"));
  m.def("gaussian_equiv_power", &gic::GaussianEquivPower, py::arg("h"));
  m.def(
      "epi_bounds",
      [](double h_a, std::optional<double> p_a, double noise) {
        const gic::EpiBounds b = gic::ComputeEpiBounds({h_a, p_a, noise});
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("h_a"), py::arg("p_a") = py::none(), py::arg("noise") = 1.0);
}
