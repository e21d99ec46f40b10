#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elckit/canonical.hpp"
#include "elckit/classify.hpp"
#include "elckit/codes.hpp"
#include "elckit/constructions.hpp"
#include "elckit/enumeration.hpp"
#include "elckit/errors.hpp"
#include "elckit/graph6.hpp"
#include "elckit/orbit.hpp"

namespace py = pybind11;
using namespace elckit;

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Side side_from_string(const std::string& name) {
    if (name == "left") return Side::Left;
    if (name == "right") return Side::Right;
    throw std::invalid_argument("side must be 'left' or 'right'");
}

py::dict report_dict(const CodeReport& report) {
    py::dict d;
    d["n"] = report.n;
    d["k"] = report.k;
    d["d"] = report.d ? py::cast(*report.d) : py::none();
    d["dual_k"] = report.n - report.k;
    d["dual_d"] = report.dual_d ? py::cast(*report.dual_d) : py::none();
    d["self_dual"] = report.self_dual;
    d["isodual"] = report.isodual ? py::cast(*report.isodual) : py::none();
    if (report.weights) d["weight_distribution"] = *report.weights;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local and edge-local complementation on graphs, orbit "
              "enumeration, and the bipartite-graph / binary-code bridge";

    py::register_exception<capacity_error>(m, "CapacityError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::order)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return set_to_list(g.neighborhood(v)); })
        .def("has_edge", &Graph::has_edge)
        .def("lc", &Graph::local_complement, py::arg("v"))
        .def("elc", &Graph::elc, py::arg("u"), py::arg("v"))
        .def("elc_via_lc", &Graph::elc_via_lc, py::arg("u"), py::arg("v"))
        .def("complement", &Graph::complement)
        .def("induced",
             [](const Graph& g, const std::vector<int>& vs) {
                 VertexSet mask = 0;
                 for (int v : vs) mask |= vbit(v);
                 return g.induced_subgraph(mask);
             })
        .def("relabeled", &Graph::relabeled)
        .def("is_connected", &Graph::is_connected)
        .def("is_bipartite", &Graph::is_bipartite)
        .def("is_odd", &Graph::is_odd)
        .def("is_even", &Graph::is_even)
        .def("bipartition",
             [](const Graph& g) -> py::object {
                 auto p = g.bipartition();
                 if (!p) return py::none();
                 return py::make_tuple(set_to_list(p->left), set_to_list(p->right));
             })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + to_graph6(g) + "')";
        });

    m.def("from_graph6", &from_graph6, py::arg("text"));
    m.def("canonical_graph6", [](const Graph& g) { return canonical_form(g).g6; });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("construct", &build_construction, py::arg("spec"), py::arg("strict") = false);

    m.def(
        "elc_orbit",
        [](const Graph& g, std::optional<std::size_t> cap) {
            Orbit orbit = elc_orbit(g, cap);
            return py::make_tuple(orbit.members, orbit.truncated);
        },
        py::arg("g"), py::arg("cap") = py::none(),
        "Sorted canonical graph6 members and a truncation flag");
    m.def(
        "lc_orbit",
        [](const Graph& g, std::optional<std::size_t> cap) {
            Orbit orbit = lc_orbit(g, cap);
            return py::make_tuple(orbit.members, orbit.truncated);
        },
        py::arg("g"), py::arg("cap") = py::none());
    m.def("is_elc_preserved", [](const Graph& g) { return is_elc_preserved(g); });

    m.def(
        "code_report",
        [](const Graph& g, const std::string& side) {
            auto p = g.bipartition();
            if (!p) throw std::invalid_argument("code_report needs a bipartite graph");
            return report_dict(code_report(g, *p, side_from_string(side)));
        },
        py::arg("g"), py::arg("side") = "left");

    m.def("count_orbits", [](int n, const std::string& cls) {
        CensusEngine engine;
        return engine.orbit_count(n, cls == "bipartite" ? GraphClass::Bipartite
                                                        : GraphClass::NonBipartite);
    });
    m.def("count_preserved", [](int n, const std::string& cls) {
        CensusEngine engine;
        return engine.preserved_count(n, cls == "bipartite" ? GraphClass::Bipartite
                                                            : GraphClass::NonBipartite);
    });
}
