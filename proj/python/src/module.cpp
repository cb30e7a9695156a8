#include "admlab/circuit.hpp"
#include "admlab/deligne.hpp"
#include "admlab/green.hpp"
#include "admlab/invariants.hpp"
#include "admlab/ledger.hpp"
#include "admlab/random_graph.hpp"
#include "admlab/report.hpp"
#include "admlab/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace admlab;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.to_string());
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_admlab, m) {
  m.doc() = "Exact potential theory on metrized graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<MetrizedGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"))
      .def_static("load", &load_graph, py::arg("path"))
      .def_property_readonly("genus", [](const MetrizedGraph& g) { return genus(g); })
      .def_property_readonly("vertex_count", &MetrizedGraph::vertex_count)
      .def_property_readonly("edge_count", &MetrizedGraph::edge_count)
      .def_property_readonly("vertex_ids",
                             [](const MetrizedGraph& g) {
                               std::vector<std::string> ids;
                               for (const auto& v : g.vertices()) ids.push_back(v.id);
                               return ids;
                             })
      .def_property_readonly("total_length", [](const MetrizedGraph& g) { return fraction(g.total_length()); })
      .def("canonical_divisor",
           [](const MetrizedGraph& g) {
             const Divisor k = canonical_divisor(g);
             py::dict out;
             for (std::size_t v = 0; v < g.vertex_count(); ++v) out[py::str(g.vertices()[v].id)] = k.coefficients[v];
             return out;
           })
      .def("to_text", &serialize_graph)
      .def("__repr__", [](const MetrizedGraph& g) {
        return "<Graph genus=" + std::to_string(genus(g)) + " vertices=" + std::to_string(g.vertex_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("canonical_measure", [](const MetrizedGraph& g) {
    const Measure mu = canonical_measure(g);
    py::dict points, edges;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) points[py::str(g.vertices()[v].id)] = fraction(mu.point_masses[v]);
    for (std::size_t e = 0; e < g.edge_count(); ++e) edges[py::str(g.edges()[e].id)] = fraction(mu.edge_masses[e]);
    py::dict out;
    out["vertices"] = points;
    out["edges"] = edges;
    return out;
  });
  m.def("delta", [](const MetrizedGraph& g) {
    py::list out;
    for (const auto& d : delta_invariants(g)) out.append(fraction(d));
    return out;
  });
  m.def("epsilon", [](const MetrizedGraph& g) { return fraction(epsilon(g)); });
  m.def("epsilon_via_resistance", [](const MetrizedGraph& g) { return fraction(epsilon_via_resistance(g)); });
  m.def("phi", [](const MetrizedGraph& g) { return fraction(phi(g)); });
  m.def(
      "resistance",
      [](const MetrizedGraph& g, const std::string& a, const std::string& b) {
        return fraction(resistance(g, PointRef::parse(a), PointRef::parse(b)));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"));
  m.def(
      "green",
      [](const MetrizedGraph& g, const std::string& source, const std::string& at) {
        return fraction(green_value(g, canonical_measure(g), PointRef::parse(source), PointRef::parse(at)));
      },
      py::arg("graph"), py::arg("source"), py::arg("at"));
  m.def(
      "oracle",
      [](const MetrizedGraph& g, const std::string& source, int segments) {
        return discrete_oracle(g, canonical_measure(g), PointRef::parse(source), segments);
      },
      py::arg("graph"), py::arg("source"), py::arg("segments") = 64);
  m.def("check", [](const MetrizedGraph& g) { return from_json(to_json(g, run_checks(g))); });

  m.def(
      "random_graph",
      [](std::uint64_t seed, int max_vertices, int max_edges, int min_genus, int max_genus) {
        RandomGraphParams p;
        p.max_vertices = max_vertices;
        p.max_edges = max_edges;
        p.min_genus = min_genus;
        p.max_genus = max_genus;
        return random_graph(seed, p);
      },
      py::arg("seed"), py::arg("max_vertices") = 8, py::arg("max_edges") = 12, py::arg("min_genus") = 2,
      py::arg("max_genus") = 6);
  m.def(
      "sweep",
      [](std::uint64_t seed, std::size_t count) {
        const auto entries = run_sweep(seed, count, {});
        return from_json(to_json(entries, seed));
      },
      py::arg("seed"), py::arg("count"));

  m.def("load_ledger", [](const std::string& path) { return from_json(to_json(evaluate(load_ledger(path)))); });
  m.def(
      "parse_ledger",
      [](const std::string& text, const std::string& base_dir) {
        return from_json(to_json(evaluate(parse_ledger(text, base_dir))));
      },
      py::arg("text"), py::arg("base_dir") = ".");
  m.def("faltings_constant", [](long g) { return fraction(faltings_constant(g)); });
  m.def("isotriviality_floor", [](long g, long p) { return fraction(isotriviality_floor(g, p)); }, py::arg("g"),
        py::arg("characteristic") = 0);

  m.def("identity_names", &identity_names);
  m.def(
      "verify_identity",
      [](const std::string& name, bool derivation) { return from_json(to_json(verify_identity(name), derivation)); },
      py::arg("name"), py::arg("derivation") = false);
  m.def(
      "poly",
      [](const std::string& text) { return PolyGD::parse(text).to_string(); },
      py::arg("text"), "Expanded form of a polynomial in g and d.");
  m.def(
      "poly_eval",
      [](const std::string& text, const py::object& g, const py::object& d) {
        return fraction(PolyGD::parse(text).evaluate(to_rational(g), to_rational(d)));
      },
      py::arg("text"), py::arg("g"), py::arg("d") = 0);
}
