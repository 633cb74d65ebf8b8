// Copyright 2026 The twofactor Authors.
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


// Python bindings for the twofactor core library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/graph.hpp"
#include "twofactor/graph6.hpp"
#include "twofactor/report.hpp"
#include "twofactor/structure.hpp"
#include "twofactor/symmetry.hpp"
#include "twofactor/two_factor.hpp"
#include "twofactor/voltage.hpp"

namespace py = pybind11;
using namespace twofactor;

namespace {

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object big(const BigInt& value) {
  return py::int_(py::str(value.str()));
}

BaseGraph base_from(const py::object& base) {
  if (py::isinstance<py::str>(base)) {
    const auto name = base.cast<std::string>();
    if (name == "theta") return BaseGraph::theta();
    return BaseGraph::from_graph(named(name));
  }
  return BaseGraph::from_graph(base.cast<const Graph&>());
}

}  // namespace

PYBIND11_MODULE(_twofactor, m) {
  m.doc() = "Pseudo 2-factor isomorphism toolkit for cubic graphs";

  py::register_exception<Error>(m, "TwofactorError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6",
                  [](const std::string& text) { return parse_graph6(text); })
      .def("graph6", &write_graph6)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_pairs)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v < 0 || v >= g.order()) throw py::index_error();
             const auto ns = g.neighbors(v);
             return std::vector<Vertex>(ns.begin(), ns.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("is_cubic", &Graph::is_cubic)
      .def("relabeled",
           [](const Graph& g, const std::vector<Vertex>& perm) {
             return g.relabeled(perm);
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph('" + write_graph6(g) + "')";
      });

  m.def("named", [](const std::string& name) { return named(name); });
  m.def("named_graphs", &named_graphs);

  m.def("girth", &girth);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_connected", &is_connected);
  m.def("edge_connectivity", &edge_connectivity);
  m.def("cyclic_edge_connectivity", &cyclic_edge_connectivity);
  m.def("is_essentially_4_edge_connected", &is_essentially_4_edge_connected);

  m.def("automorphism_group_order",
        [](const Graph& g) { return big(automorphisms(g).group_order); });
  m.def("canonical_form", &canonical_form);
  m.def("is_isomorphic", &is_isomorphic);

  m.def("count_perfect_matchings", &count_perfect_matchings);
  m.def(
      "classify_json",
      [](const Graph& g, const std::string& mode, int workers,
         std::uint64_t seed, double max_seconds, std::uint64_t max_attempts,
         bool prune) {
        ClassifyOptions options;
        options.mode = parse_classify_mode(mode);
        options.workers = workers;
        options.seed = seed;
        options.max_seconds = max_seconds;
        options.max_attempts = max_attempts;
        options.prune = prune;
        ClassificationReport report;
        {
          py::gil_scoped_release release;
          report = classify(g, options);
        }
        ReportFormat format;
        format.include_timing = true;
        return report_json(g, report, format);
      },
      py::arg("graph"), py::arg("mode") = "exhaustive", py::arg("workers") = 1,
      py::arg("seed") = 1, py::arg("max_seconds") = 0.0,
      py::arg("max_attempts") = 0, py::arg("prune") = true);

  m.def(
      "generate",
      [](int n) {
        py::gil_scoped_release release;
        return generate(n);
      },
      py::arg("n"));

  m.def(
      "lifts",
      [](const py::object& base, const std::string& group, int min_girth,
         bool require_connected) {
        const BaseGraph b = base_from(base);
        const FiniteGroup grp = make_group(group);
        LiftOptions options;
        options.min_girth = min_girth;
        options.require_connected = require_connected;
        py::gil_scoped_release release;
        return enumerate_lifts(b, grp, options);
      },
      py::arg("base"), py::arg("group"), py::arg("min_girth") = 3,
      py::arg("require_connected") = true);

  m.def("constituents", &constituents, py::arg("graph"), py::arg("seed") = 0);
}
