// Copyright 2026 The burnkit Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "burnkit/compute.hpp"
#include "burnkit/exact_solver.hpp"
#include "burnkit/families.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/sweep.hpp"

namespace py = pybind11;
using namespace burnkit;

namespace {

SolverOptions options(std::optional<std::uint64_t> node_budget) {
  SolverOptions o;
  o.node_budget = node_budget;
  return o;
}

py::dict result_dict(const Graph& g, const ComputeOutcome& out, bool certificate, const SolverOptions& opts) {
  py::dict d;
  d["n"] = g.vertex_count();
  d["family"] = format_family_spec(out.family);
  d["q"] = out.qr ? py::cast(out.qr->q) : py::none();
  d["r"] = out.qr ? py::cast(out.qr->r) : py::none();
  if (const auto* inc = std::get_if<Inconclusive>(&out.result)) {
    d["status"] = "inconclusive";
    d["lower"] = inc->lower_bound;
    d["upper"] = inc->upper_bound;
    return d;
  }
  auto r = std::get<BurnResult>(out.result);
  d["status"] = "ok";
  d["value"] = r.value;
  d["method"] = std::string(method_name(r.method));
  d["lower"] = r.lower_bound;
  d["upper"] = r.upper_bound;
  if (certificate && !r.certificate) r.certificate = find_burning_sequence(g, r.value, opts).sequence;
  d["certificate"] = r.certificate ? py::cast(r.certificate->sources) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_burnkit, m) {
  m.doc() = "Burning numbers of graphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_family", [](const std::string& spec) { return build_family(parse_family_spec(spec)); })
      .def_static("read", &read_graph_file, py::arg("path"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("is_connected", &Graph::is_connected)
      .def("family", [](const Graph& g) { return format_family_spec(recognize_family(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "burning_number",
      [](const Graph& g, const std::string& method, bool certificate, std::optional<std::uint64_t> node_budget) {
        const auto opts = options(node_budget);
        const auto out = compute_burning_number(g, parse_compute_mode(method), opts);
        return result_dict(g, out, certificate, opts);
      },
      py::arg("graph"), py::arg("method") = "auto", py::arg("certificate") = false,
      py::arg("node_budget") = py::none(),
      "Burning number with the method used and bounds. `method` is auto, exact or formula.");

  m.def(
      "check_sequence",
      [](const Graph& g, const std::vector<VertexId>& seq) {
        const auto c = check_sequence(g, {seq});
        py::dict d;
        d["valid"] = c.valid;
        d["distance_violation"] = c.distance_violation ? py::cast(*c.distance_violation) : py::none();
        d["uncovered"] = c.uncovered;
        return d;
      },
      py::arg("graph"), py::arg("sequence"));

  m.def(
      "verify_sequence", [](const Graph& g, const std::vector<VertexId>& seq) { return verify_sequence(g, {seq}); },
      py::arg("graph"), py::arg("sequence"));

  m.def(
      "extract_partition",
      [](const Graph& g, const std::vector<VertexId>& seq) {
        py::list parts;
        for (const auto& p : extract_partition(g, {seq}).parts) {
          py::dict d;
          d["root"] = p.root;
          d["vertices"] = p.vertices;
          d["parent"] = p.parent;
          d["height"] = p.height;
          parts.append(d);
        }
        return parts;
      },
      py::arg("graph"), py::arg("sequence"));

  m.def(
      "qr_decompose",
      [](std::size_t n) {
        const auto qr = qr_decompose(n);
        return std::pair{qr.q, qr.r};
      },
      py::arg("n"));

  m.def("normalize_family", [](const std::string& spec) { return format_family_spec(parse_family_spec(spec)); },
        py::arg("spec"));

  m.def(
      "enumerate_sweep",
      [](const std::string& cls, std::size_t max_n) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_sweep(parse_sweep_class(cls), max_n)) out.push_back(format_family_spec(d));
        return out;
      },
      py::arg("cls"), py::arg("max_n"));

  m.def(
      "sweep",
      [](const std::string& cls, std::size_t max_n, unsigned jobs, std::optional<std::string> errata) {
        SweepOptions opts;
        opts.jobs = jobs;
        if (errata) opts.errata = read_errata_file(*errata);
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = run_sweep(parse_sweep_class(cls), max_n, opts);
        }
        py::list rows;
        for (const auto& row : report.rows) {
          py::dict d;
          d["spec"] = row.spec;
          d["n"] = row.n;
          d["formula"] = row.formula_value;
          d["exact"] = row.exact_value ? py::cast(*row.exact_value) : py::none();
          d["method"] = std::string(method_name(row.method));
          d["agree"] = row.agree;
          rows.append(d);
        }
        py::dict d;
        d["rows"] = rows;
        d["mismatches"] = report.summary.mismatches;
        d["unexplained"] = report.summary.unexplained;
        d["inconclusive"] = report.summary.inconclusive;
        return d;
      },
      py::arg("cls"), py::arg("max_n"), py::arg("jobs") = 1, py::arg("errata") = py::none());
}
