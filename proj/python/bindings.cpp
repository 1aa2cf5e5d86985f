#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spheretri/canonical.hpp"
#include "spheretri/catalog.hpp"
#include "spheretri/generator.hpp"
#include "spheretri/plane_map.hpp"
#include "spheretri/text_format.hpp"
#include "spheretri/tricolor.hpp"

namespace py = pybind11;
using namespace spheretri;

namespace {

std::vector<int> to_ints(const EdgeColoring& c) {
  std::vector<int> out;
  out.reserve(c.size());
  for (auto x : c) out.push_back(static_cast<int>(x));
  return out;
}

EdgeColoring from_ints(const std::vector<int>& xs) {
  EdgeColoring out;
  for (int x : xs) {
    if (x < 0 || x > 2) throw Error(ErrorCode::InvalidArgument, "colours are 0, 1 or 2");
    out.push_back(static_cast<Color>(x));
  }
  return out;
}

std::vector<std::array<VertexId, 3>> face_list(const PlaneTriangulation& t) {
  std::vector<std::array<VertexId, 3>> out;
  for (const auto& f : faces(t)) out.push_back(f.v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const PlaneTriangulation& t) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : edges(t)) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sphere triangulations and their rainbow edge colourings";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<PlaneTriangulation>(m, "Triangulation")
      .def(py::init([](Rotation r) { return PlaneTriangulation::build(std::move(r)); }), py::arg("rotations"))
      .def_static("parse", [](const std::string& text) { return parse_rotation_text(text); })
      .def_property_readonly("order", &PlaneTriangulation::order)
      .def_property_readonly("edge_count", &PlaneTriangulation::edge_count)
      .def_property_readonly("face_count", &PlaneTriangulation::face_count)
      .def_property_readonly("rotations", &PlaneTriangulation::rotations)
      .def("degree", &PlaneTriangulation::degree)
      .def("degrees", [](const PlaneTriangulation& t) { return degree_multiset(t); })
      .def("faces", &face_list)
      .def("edges", &edge_list)
      .def("mirror", [](const PlaneTriangulation& t) { return mirror(t); })
      .def("canonical_code", [](const PlaneTriangulation& t) { return canonical_code(t).hex(); })
      .def("name", [](const PlaneTriangulation& t) { return catalog_name(t); })
      .def("to_text", [](const PlaneTriangulation& t) { return to_rotation_text(t); })
      .def("to_dot", [](const PlaneTriangulation& t, const std::string& name) { return to_dot(t, name); },
           py::arg("name") = "T")
      .def("__eq__", [](const PlaneTriangulation& a, const PlaneTriangulation& b) { return a == b; })
      .def("__repr__", [](const PlaneTriangulation& t) { return "Triangulation('" + to_rotation_text(t) + "')"; });

  m.def("tetrahedron", &tetrahedron);
  m.def("octahedron", &octahedron);
  m.def("is_isomorphic", [](const PlaneTriangulation& a, const PlaneTriangulation& b) { return is_isomorphic(a, b); });

  m.def("insert_in_face", [](const PlaneTriangulation& t, std::array<VertexId, 3> f) { return insert_in_face(t, Face{f}); });
  m.def("insert_on_edge", [](const PlaneTriangulation& t, VertexId u, VertexId v) { return insert_on_edge(t, Edge::of(u, v)); });

  m.def(
      "enumerate",
      [](int max_n, int polygon_cap, bool use_polygons, unsigned threads) {
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate(max_n, {.polygon_cap = polygon_cap, .use_polygons = use_polygons, .threads = threads});
        }
        std::map<int, std::vector<PlaneTriangulation>> out;
        for (auto& [n, reps] : r.by_n) {
          for (auto& rep : reps) out[n].push_back(std::move(rep.triangulation));
        }
        return out;
      },
      py::arg("max_n"), py::arg("polygon_cap") = 6, py::arg("use_polygons") = true, py::arg("threads") = 1,
      "Triangulations with 4..max_n vertices up to isomorphism, keyed by vertex count.");

  m.def("count_colorings", [](const PlaneTriangulation& t) { return count_colorings(t); });
  m.def("count_coloring_orbits", [](const PlaneTriangulation& t) { return count_coloring_orbits(t); });
  m.def(
      "colorings",
      [](const PlaneTriangulation& t) {
        std::vector<std::vector<int>> out;
        for (const auto& c : enumerate_colorings(t)) out.push_back(to_ints(c));
        return out;
      },
      "One colouring per renaming class; entry i colours edges()[i] with 0, 1 or 2.");
  m.def("is_rainbow", [](const PlaneTriangulation& t, const std::vector<int>& c) { return validate(t, from_ints(c)); });
  m.def("summary", [](const PlaneTriangulation& t, const std::vector<int>& c) {
    return summary_text(class_summary(t, from_ints(c)));
  });
}
