#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onedraw/generators.hpp"
#include "onedraw/oracle.hpp"
#include "onedraw/ortho_layout.hpp"
#include "onedraw/smooth_layout.hpp"

namespace py = pybind11;
using namespace onedraw;

namespace {

struct Layout {
  std::string cls;  // "outer" or "general"
  int max_complexity = 0;
  bool valid = false;
  std::vector<std::string> violations;
  std::string width, height;  // exact, "p" or "p/q"
  std::string json, svg;
};

template <class Drawing>
Layout finish(const Drawing& d, const EmbeddedGraph& g, bool outer) {
  Layout r;
  r.cls = outer ? "outer" : "general";
  r.max_complexity = max_complexity(d);
  ValidationReport rep = validate_drawing(d, g);
  r.valid = rep.ok();
  for (const Violation& v : rep.violations) r.violations.push_back(v.rule + ": " + v.message);
  BoundsReport b = bounds(d);
  r.width = to_string(b.width);
  r.height = to_string(b.height);
  r.json = drawing_json(d, g);
  r.svg = render_svg(d);
  return r;
}

bool outer_class(const EmbeddedGraph& g) {
  return g.num_vertices() >= 2 && is_biconnected(g) && is_outer_one_plane(g);
}

Layout draw(const EmbeddedGraph& g, const std::string& mode, const std::string& cls) {
  if (mode != "oc" && mode != "sc") throw py::value_error("mode must be 'oc' or 'sc'");
  if (cls != "auto" && cls != "general" && cls != "outer") throw py::value_error("cls must be 'auto', 'general' or 'outer'");
  bool outer = cls == "outer" || (cls == "auto" && outer_class(g));
  if (outer && !outer_class(g)) throw py::value_error("class outer needs a biconnected outer-1-plane graph");
  if (mode == "sc") return finish(outer ? sc2_layout(g) : sc3_layout(g), g, outer);
  return finish(outer ? outer_oc3(g) : oc4_layout(g), g, outer);
}

std::vector<std::string> violations(const EmbeddedGraph& g) {
  std::vector<std::string> out;
  for (const Violation& v : validate_one_plane(g).violations) out.push_back(v.rule + ": " + v.message);
  return out;
}

py::dict oracle(const EmbeddedGraph& g, int budget) {
  OracleResult r = min_max_bends(g, budget);
  py::dict d;
  d["max_bends"] = r.max_bends;
  d["total_bends"] = r.total_bends;
  d["bends"] = r.bends;
  d["witness"] = drawing_json(r.witness, g);
  return d;
}

}  // namespace

PYBIND11_MODULE(_onedraw, m) {
  m.doc() = "Orthogonal and smooth orthogonal layouts of 1-plane graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<EmbeddedGraph>(m, "Graph")
      .def_property_readonly("vertices", [](const EmbeddedGraph& g) { return g.vertex_ids; })
      .def_property_readonly("edges",
                             [](const EmbeddedGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const Edge& e : g.edges) out.emplace_back(e.id, g.vertex_ids[e.u], g.vertex_ids[e.v]);
                               return out;
                             })
      .def_property_readonly("crossings",
                             [](const EmbeddedGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Crossing& c : g.crossings) out.emplace_back(g.edges[c.e1].id, g.edges[c.e2].id);
                               return out;
                             })
      .def("to_text", &write_graph)
      .def("__repr__", [](const EmbeddedGraph& g) {
        return "<Graph vertices=" + std::to_string(g.num_vertices()) + " edges=" + std::to_string(g.num_edges()) +
               " crossings=" + std::to_string(g.crossings.size()) + ">";
      });

  py::class_<Layout>(m, "Layout")
      .def_readonly("cls", &Layout::cls)
      .def_readonly("max_complexity", &Layout::max_complexity)
      .def_readonly("valid", &Layout::valid)
      .def_readonly("violations", &Layout::violations)
      .def_readonly("width", &Layout::width)
      .def_readonly("height", &Layout::height)
      .def_readonly("json", &Layout::json)
      .def_readonly("svg", &Layout::svg);

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("violations", &violations, py::arg("graph"), "Rule violations of the 1-plane embedding");
  m.def("is_outer_one_plane", &is_outer_one_plane, py::arg("graph"));
  m.def("is_biconnected", &is_biconnected, py::arg("graph"));
  m.def("named_families", &named_families);
  m.def(
      "gen_named",
      [](const std::string& family, int t) {
        try {
          return gen_named(family, t);
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("family"), py::arg("t") = 1);
  m.def("random_one_plane", &random_one_plane, py::arg("n"), py::arg("seed"));
  m.def("random_outer_one_plane", &random_outer_one_plane, py::arg("n"), py::arg("seed"));
  m.def("draw", &draw, py::arg("graph"), py::arg("mode") = "oc", py::arg("cls") = "auto",
        py::call_guard<py::gil_scoped_release>());
  m.def("oracle", &oracle, py::arg("graph"), py::arg("budget") = 14);
}
