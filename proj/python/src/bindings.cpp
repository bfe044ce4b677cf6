#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrw1/gf2.hpp"
#include "lrw1/io.hpp"
#include "lrw1/local_ops.hpp"
#include "lrw1/obstruction.hpp"
#include "lrw1/structure.hpp"
#include "lrw1/threads.hpp"
#include "lrw1/widths.hpp"

namespace py = pybind11;
using namespace lrw1;

PYBIND11_MODULE(_lrw1, m) {
  m.doc() = "Linear rankwidth at most one: exact widths, vertex-minors and thread graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("parse", [](const std::string& s) { return parse_graph_text(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + to_graph6(g) + "')"; });

  m.def("cycle", &graphs::cycle);
  m.def("path", &graphs::path);
  m.def("complete", &graphs::complete);
  m.def("net", &graphs::net);
  m.def("half_cube", &graphs::half_cube);

  m.def("canonical_form", [](const Graph& g) { return py::bytes(canonical_form(g).bytes()); });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"));

  m.def("cutrank", [](const Graph& g, const std::vector<int>& x) {
    VertexSet s;
    for (int v : x) s.insert(v);
    return cutrank(g, s);
  });
  m.def("order_width", [](const Graph& g, const std::vector<int>& order) { return order_width(g, {order}); });
  m.def(
      "lrw", [](const Graph& g) {
        const auto r = lrw_exact(g);
        return py::make_tuple(r.width, r.witness.order);
      },
      "Linear rankwidth and the lexicographically least optimal order.");
  m.def("rw", [](const Graph& g) { return rw_exact(g).width; });

  m.def("local_complement", &local_complement);
  m.def("orbit", [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& f : orbit(g)) out.push_back(to_graph6(f.graph()));
    return out;
  });
  m.def("is_locally_equivalent", &is_locally_equivalent);
  m.def(
      "vertex_minor_witness",
      [](const Graph& g, const Graph& h) -> std::optional<std::vector<std::pair<std::string, int>>> {
        const auto seq = contains_vertex_minor(g, h);
        if (!seq) return std::nullopt;
        std::vector<std::pair<std::string, int>> out;
        for (const auto& s : steps_in_source_labels(g.order(), *seq))
          out.emplace_back(s.kind == VmStep::Kind::Complement ? "complement" : "delete", s.vertex);
        return out;
      },
      "Steps in the host's labels, or None when h is not a vertex-minor of g.");

  m.def("thread_certificate", [](const Graph& g) -> std::optional<std::string> {
    const auto cert = recognize_thread_graph(g);
    if (!cert) return std::nullopt;
    return to_text(*cert);
  });
  m.def("is_distance_hereditary", [](const Graph& g) { return is_distance_hereditary(g).has_value(); });
  m.def("obstruction_shape", [](const Graph& g) { return std::string(to_string(classify_obstruction_shape(g))); });

  m.def("find_obstructions", [](int n_max) {
    std::vector<std::string> out;
    for (const auto& o : find_obstructions(n_max, lrw_at_most_one)) out.push_back(to_graph6(o.representative.graph()));
    return out;
  });
  m.def(
      "verify_report_json",
      [](int n_max, int jobs) {
        VerifyOptions options;
        options.jobs = jobs;
        py::gil_scoped_release release;
        return format_report_json(verify_main_theorem(n_max, options));
      },
      py::arg("n_max"), py::arg("jobs") = 1);
}
