// Copyright 2026 The gaploc Authors
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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "gaploc/augmecon.hpp"
#include "gaploc/errors.hpp"
#include "gaploc/metrics.hpp"
#include "gaploc/oracle.hpp"
#include "gaploc/pagerank.hpp"
#include "gaploc/ranges.hpp"
#include "gaploc/scenario.hpp"
#include "gaploc/solution_io.hpp"

namespace py = pybind11;

namespace {

using Triple = std::tuple<double, double, double>;

Triple ToTuple(const gaploc::ObjectiveVector& v) { return {v.f1, v.f2, v.f3}; }

gaploc::Ranges ToRanges(const std::vector<std::pair<double, double>>& in) {
  if (in.size() != gaploc::kNumObjectives) {
    throw gaploc::ValidationError("ranges need one (ideal, nadir) pair per objective");
  }
  gaploc::Ranges r;
  for (std::size_t k = 0; k < in.size(); ++k) r[k] = {in[k].first, in[k].second};
  return r;
}

std::vector<std::pair<double, double>> FromRanges(const gaploc::Ranges& r) {
  std::vector<std::pair<double, double>> out;
  for (const auto& x : r) out.emplace_back(x.ideal, x.nadir);
  return out;
}

}  // namespace

PYBIND11_MODULE(gaploc, m) {
  m.doc() = "Waste bin location: exact AUGMECON2 fronts and PageRank heuristics";

  auto error = py::register_exception<gaploc::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<gaploc::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<gaploc::SchemaError>(m, "SchemaError", error.ptr());
  py::register_exception<gaploc::ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<gaploc::UnknownId>(m, "UnknownId", error.ptr());
  py::register_exception<gaploc::InstanceTooLarge>(m, "InstanceTooLarge", error.ptr());
  py::register_exception<gaploc::UnknownPolicy>(m, "UnknownPolicy", error.ptr());
  py::register_exception<gaploc::MissingSiteDistances>(m, "MissingSiteDistances", error.ptr());
  py::register_exception<gaploc::ExportWithoutCoordinates>(m, "ExportWithoutCoordinates",
                                                           error.ptr());
  py::register_exception<gaploc::StageFailed>(m, "StageFailed", error.ptr());

  py::class_<gaploc::Scenario>(m, "Scenario")
      .def_property_readonly("name", &gaploc::Scenario::name)
      .def_property_readonly("num_sites", &gaploc::Scenario::num_sites)
      .def_property_readonly("num_generators", &gaploc::Scenario::num_generators)
      .def_property_readonly("num_bins", &gaploc::Scenario::num_bins)
      .def_property_readonly("max_distance", &gaploc::Scenario::max_distance)
      .def("to_json", [](const gaploc::Scenario& s) { return gaploc::to_canonical_json(s); })
      .def("__repr__", [](const gaploc::Scenario& s) { return "<Scenario " + s.name() + ">"; });

  m.def("load_scenario", [](const std::string& path) { return gaploc::load_scenario(path); },
        py::arg("path"));
  m.def("parse_scenario", [](const std::string& text) { return gaploc::parse_scenario(text); },
        py::arg("text"));

  m.def("delta", &gaploc::delta, py::arg("value"), py::arg("ideal"), py::arg("nadir"));
  m.def("l2", [](const std::vector<double>& d) { return gaploc::l2(d); }, py::arg("deltas"));

  m.def(
      "oracle_front",
      [](const gaploc::Scenario& s, double cap) {
        std::vector<Triple> out;
        for (const auto& v : gaploc::oracle_front(gaploc::enumerate_oracle(s, cap))) {
          out.push_back(ToTuple(v));
        }
        return out;
      },
      py::arg("scenario"), py::arg("cap") = gaploc::kDefaultOracleCap);

  m.def(
      "ranges",
      [](const gaploc::Scenario& s, unsigned threads) {
        std::vector<gaploc::MethodReport> reports;
        {
          py::gil_scoped_release release;
          reports = gaploc::run_methods(s, {}, {}, threads);
        }
        py::list rows;
        for (const auto& r : reports) {
          py::dict row;
          row["method"] = std::string(gaploc::method_name(r.method));
          std::vector<std::size_t> order;
          for (std::size_t k : r.order) order.push_back(k + 1);
          row["order"] = order;
          row["objectives"] = r.has_solution() ? py::cast(ToTuple(r.objectives)) : py::none();
          row["dominated"] = r.dominated;
          row["error"] = r.error;
          rows.append(row);
        }
        py::dict out;
        out["reports"] = rows;
        out["ranges"] = FromRanges(gaploc::build_ranges(reports));
        return out;
      },
      py::arg("scenario"), py::arg("threads") = 1);

  m.def(
      "pareto",
      [](const gaploc::Scenario& s, const std::vector<std::pair<double, double>>& ranges,
         int gridpoints, int main_objective, bool parallel, unsigned threads) {
        gaploc::GridSpec grid;
        grid.gridpoints = gridpoints;
        if (main_objective < 1 || main_objective > 3) {
          throw gaploc::ValidationError("main objective must be 1, 2 or 3");
        }
        grid.main_objective = static_cast<std::size_t>(main_objective - 1);
        gaploc::AugmeconOptions opts;
        opts.parallel = parallel;
        opts.threads = threads;
        const gaploc::Ranges r = ToRanges(ranges);
        gaploc::ParetoFront front;
        {
          py::gil_scoped_release release;
          front = gaploc::augmecon2(s, r, grid, opts);
        }
        std::vector<Triple> points;
        for (const auto& e : front.entries) points.push_back(ToTuple(e.objectives));
        py::dict out;
        out["front"] = points;
        out["solver_calls"] = front.solver_calls;
        out["run_bound"] = front.run_bound;
        return out;
      },
      py::arg("scenario"), py::arg("ranges"), py::arg("gridpoints") = 10,
      py::arg("main_objective") = 1, py::arg("parallel") = false, py::arg("threads") = 1);

  m.def(
      "pagerank",
      [](const gaploc::Scenario& s, double damping, double tolerance) {
        gaploc::PageRankOptions opts;
        opts.damping = damping;
        opts.tolerance = tolerance;
        const gaploc::RankVector r = gaploc::pagerank(gaploc::build_graph(s), opts);
        py::dict out;
        for (std::size_t i = 0; i < r.ids.size(); ++i) out[py::str(r.ids[i])] = r.rank[i];
        return out;
      },
      py::arg("scenario"), py::arg("damping") = 0.85, py::arg("tolerance") = 1e-8);

  m.def(
      "heuristic",
      [](const gaploc::Scenario& s, const std::string& policy) {
        const gaploc::Policy p = gaploc::parse_policy(policy);
        const gaploc::HeuristicSolution h =
            gaploc::construct(s, gaploc::pagerank(gaploc::build_graph(s)), p);
        const gaploc::HeuristicSummary sum = gaploc::evaluate_heuristic(s, h);
        py::dict out;
        out["policy"] = std::string(gaploc::policy_name(p));
        out["average_distance"] = sum.average_distance;
        out["cost"] = sum.cost;
        out["collected_fraction"] = sum.collected_fraction;
        out["served"] = sum.served;
        out["audit"] = gaploc::audit_heuristic(s, h);
        out["solution"] = gaploc::solution_to_json(s, gaploc::heuristic_to_solution(s, h));
        return out;
      },
      py::arg("scenario"), py::arg("policy"));
}
