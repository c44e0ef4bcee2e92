// SPDX-License-Identifier: Apache-2.0
//
// rama - two-user multiple access for reconfigurable mmWave antennas
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rama/constellations.hpp"
#include "rama/error.hpp"
#include "rama/montecarlo.hpp"
#include "rama/region.hpp"
#include "rama/transceiver.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rama;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "two-user downlink multiple access over reconfigurable mmWave antennas";

    py::register_exception<Error>(m, "RamaError", PyExc_ValueError);

    py::enum_<Modulation>(m, "Modulation").value("PSK", Modulation::PSK).value("QAM", Modulation::QAM);

    py::enum_<Scheme>(m, "Scheme")
        .value("NOMA", Scheme::NOMA)
        .value("ReconfigNOMA", Scheme::ReconfigNOMA)
        .value("RAMA_I", Scheme::RAMA_I)
        .value("RAMA_II", Scheme::RAMA_II)
        .value("OMA", Scheme::OMA);
    m.def("parse_scheme", &parse_scheme);
    m.def("scheme_name", [](Scheme s) { return to_string(s); });

    py::enum_<User>(m, "User").value("One", User::One).value("Two", User::Two);

    // constellations
    py::class_<Constellation>(m, "Constellation")
        .def_property_readonly("kind", &Constellation::kind)
        .def_property_readonly("order", &Constellation::order)
        .def_property_readonly("points",
                               [](const Constellation &c) {
                                   return std::vector<Symbol>(c.points().begin(), c.points().end());
                               })
        .def("mean_power", &Constellation::mean_power)
        .def("__len__", &Constellation::order);
    m.def("make_psk", &make_psk, py::arg("order"));
    m.def("make_qam", &make_qam, py::arg("order"));

    py::class_<SymbolRelation>(m, "SymbolRelation")
        .def_readonly("delta_theta", &SymbolRelation::delta_theta)
        .def_readonly("s_bar", &SymbolRelation::s_bar)
        .def("apply", &SymbolRelation::apply);
    m.def("relate", py::overload_cast<Symbol, Symbol>(&relate), py::arg("s1"), py::arg("s2"));

    // channel
    py::class_<LinkBudget>(m, "LinkBudget")
        .def(py::init<double, double, double>(), py::arg("p"), py::arg("gamma1"), py::arg("gamma2"))
        .def_property_readonly("p", &LinkBudget::p)
        .def_property_readonly("gamma1", &LinkBudget::gamma1)
        .def_property_readonly("gamma2", &LinkBudget::gamma2)
        .def("symmetric", &LinkBudget::symmetric);
    m.def("from_db", &from_db, py::arg("p_gamma1_db"), py::arg("p_gamma2_db"));
    m.def("order_users", py::overload_cast<const LinkBudget &>(&order_users));

    // transceiver
    py::class_<PowerAllocation>(m, "PowerAllocation")
        .def(py::init<double, double>(), py::arg("p1"), py::arg("p2"))
        .def_static("from_fraction", &PowerAllocation::from_fraction, py::arg("p"), py::arg("fraction"))
        .def_property_readonly("p", &PowerAllocation::p)
        .def_property_readonly("p1", &PowerAllocation::p1)
        .def_property_readonly("p2", &PowerAllocation::p2);
    py::class_<TxSignal>(m, "TxSignal").def_readonly("tsa1", &TxSignal::tsa1).def_readonly("tsa2", &TxSignal::tsa2);
    m.def("superpose", &superpose);
    m.def("reconfig_noma_split", &reconfig_noma_split, py::arg("x"), py::arg("alpha"));
    m.def("rama1_transmit", &rama1_transmit, py::arg("s1"), py::arg("s2"), py::arg("p"));
    m.def("rama2_transmit", &rama2_transmit, py::arg("s1"), py::arg("s2"), py::arg("alloc"));

    // rates
    py::class_<RatePair>(m, "RatePair")
        .def_readonly("r1", &RatePair::r1)
        .def_readonly("r2", &RatePair::r2)
        .def_readonly("scheme", &RatePair::scheme)
        .def("sum", &RatePair::sum)
        .def("__repr__", [](const RatePair &r) {
            return "RatePair(" + to_string(r.scheme) + ", r1=" + std::to_string(r.r1) + ", r2=" +
                   std::to_string(r.r2) + ")";
        });
    m.def("noma_rates", &noma_rates, py::arg("alloc"), py::arg("lb"));
    m.def("reconfig_noma_rates", &reconfig_noma_rates, py::arg("alloc"), py::arg("lb"), py::arg("alpha"));
    m.def("rama1_rates", &rama1_rates, py::arg("p"), py::arg("lb"));
    m.def("rama2_rates", &rama2_rates, py::arg("alloc"), py::arg("lb"));
    m.def("oma_rates", &oma_rates, py::arg("alloc"), py::arg("lb"), py::arg("beta"));
    m.def("noma_sum_symmetric", &noma_sum_symmetric);
    m.def("rama1_sum_symmetric", &rama1_sum_symmetric);
    m.def("case2_holds", &case2_holds, py::arg("alloc"), py::arg("lb"));
    m.def("case2_sufficient", &case2_sufficient, py::arg("alloc"));

    // region
    py::class_<RateRegion>(m, "RateRegion")
        .def_readonly("scheme", &RateRegion::scheme)
        .def_readonly("frontier", &RateRegion::frontier)
        .def_readonly("grid_resolution", &RateRegion::grid_resolution);
    m.def(
        "trace_region",
        [](Scheme s, const LinkBudget &lb, std::size_t n, double alpha) {
            SchemeParams sp;
            sp.alpha = alpha;
            return trace_region(s, lb, n, sp);
        },
        py::arg("scheme"), py::arg("lb"), py::arg("n") = default_grid_resolution, py::arg("alpha") = 0.5);
    m.def("pareto_filter", [](const std::vector<RatePair> &pts) { return pareto_filter(pts); });
    m.def("r2_at_r1", &r2_at_r1, py::arg("region"), py::arg("r1_target"));

    // sweeps
    py::enum_<XAxis>(m, "XAxis").value("Symmetric", XAxis::SymmetricSnrDb).value("Ratio", XAxis::GainRatioDb);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("x_db", &SweepRow::x_db)
        .def_readonly("scheme", &SweepRow::scheme)
        .def_readonly("split", &SweepRow::split)
        .def_readonly("mean_sum_rate", &SweepRow::mean_sum_rate)
        .def_readonly("std_error", &SweepRow::std_error);
    m.def(
        "run_sweep",
        [](std::vector<Scheme> schemes, XAxis axis, std::vector<double> grid, std::vector<double> splits,
           double anchor_db, double alpha, std::uint64_t samples, std::uint64_t seed) {
            SweepConfig cfg;
            cfg.schemes = std::move(schemes);
            cfg.x_axis = axis;
            cfg.grid_db = grid.empty() ? default_grid(axis) : std::move(grid);
            cfg.splits = std::move(splits);
            cfg.anchor_db = anchor_db;
            cfg.alpha = alpha;
            if (samples > 0)
                cfg.fading = FadingConfig{samples, seed};
            return run_sweep(cfg).rows;
        },
        py::arg("schemes"), py::arg("x_axis") = XAxis::SymmetricSnrDb, py::arg("grid") = std::vector<double>{},
        py::arg("splits") = std::vector<double>{0.25, 0.5, 0.75}, py::arg("anchor_db") = 0.0,
        py::arg("alpha") = 0.5, py::arg("samples") = 0, py::arg("seed") = 1);
}
