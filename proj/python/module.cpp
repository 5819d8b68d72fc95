#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclemetrics/cyclewidth.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"
#include "cyclemetrics/graph_io.hpp"
#include "cyclemetrics/isocycle.hpp"
#include "cyclemetrics/planar_dual.hpp"
#include "cyclemetrics/stretch.hpp"
#include "cyclemetrics/supported_cycle.hpp"

namespace py = pybind11;
using namespace cyclemetrics;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default:
      throw std::logic_error("unsupported JSON value");
  }
}

json from_py(const py::handle& h) {
  // round trip through the json module keeps this small
  auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(h).cast<std::string>());
}

json tree_json(std::span<const Edge> edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop");
    es.emplace_back(u, v);
  }
  return Graph(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cycle width, supported cycles, isometric cycles and exact stretch oracles";
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
                  "edge list or JSON graph text")
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("label", &Graph::label)
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("to_json", [](const Graph& g) { return to_py(graph_to_json(g)); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("gen_path", &gen_path);
  m.def("gen_cycle", &gen_cycle);
  m.def("gen_complete", &gen_complete);
  m.def("gen_rect_grid", [](std::size_t a, std::size_t b) { return gen_rect_grid(a, b).graph; });
  m.def("gen_tri_grid", [](std::size_t n) { return gen_tri_grid(n).graph; });
  m.def("gen_lok_counterexample", &gen_lok_counterexample);
  m.def("subdivide", [](const Graph& g) { return subdivide(g).result; });
  m.def("plane_rect_grid", [](std::size_t a, std::size_t b) { return to_py(plane_graph_to_json(gen_rect_grid(a, b).plane)); });
  m.def("plane_cycle", [](std::size_t n) { return to_py(plane_graph_to_json(plane_cycle(n))); });

  m.def("distances", [](const Graph& g) {
    auto d = all_pairs_distances(g);
    std::vector<std::vector<int>> out(g.vertex_count());
    for (Vertex a = 0; a < g.vertex_count(); ++a)
      for (Vertex b = 0; b < g.vertex_count(); ++b) out[a].push_back(d(a, b) == kUnreachable ? -1 : d(a, b));
    return out;
  });

  m.def("cycle_width", [](const Graph& g) {
    auto r = cycle_width(g);
    return to_py({{"width", r.width}, {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)}});
  });
  m.def("support_approx", [](const Graph& g) {
    auto r = support_approx(g);
    return to_py({{"width", r.width},
                  {"lower", r.lower},
                  {"upper", r.upper},
                  {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)},
                  {"certificate", r.certificate ? certificate_to_json(*r.certificate) : json(nullptr)}});
  });
  m.def(
      "support_exact",
      [](const Graph& g, std::uint64_t cap) {
        auto r = support_oracle(g, cap);
        return to_py({{"k", r.k}, {"certificate", r.witness ? certificate_to_json(*r.witness) : json(nullptr)}});
      },
      py::arg("g"), py::arg("cycle_cap") = kDefaultCycleCap);
  m.def(
      "stretch_exact",
      [](const Graph& g, std::uint64_t cap) {
        auto r = stretch_oracle(g, cap);
        return to_py({{"stretch", r.value}, {"tree", tree_json(r.witness_tree.edges())}});
      },
      py::arg("g"), py::arg("tree_cap") = kDefaultTreeCap);
  m.def(
      "congestion_exact",
      [](const Graph& g, std::uint64_t cap) {
        auto r = congestion_oracle(g, cap);
        return to_py({{"congestion", r.value}, {"tree", tree_json(r.witness_tree.edges())}});
      },
      py::arg("g"), py::arg("tree_cap") = kDefaultTreeCap);
  m.def("supported_value", [](const Graph& g, const std::vector<Vertex>& cycle, std::array<std::size_t, 3> cuts) {
    return supported_value(g, cycle, cuts).value;
  });
  m.def("verify_certificate", [](const Graph& g, const py::dict& cert) {
    auto c = certificate_from_json(from_py(cert));
    auto r = verify_certificate(g, all_pairs_distances(g), c);
    return to_py({{"ok", r.ok}, {"verified_k", r.verified_k}, {"message", r.message}});
  });

  m.def("longest_isometric_cycle", [](const Graph& g) { return to_py(isometric_to_json(longest_isometric_cycle(g))); });
  m.def("find_isometric_cycle", [](const Graph& g, int k) -> std::optional<std::vector<Vertex>> {
    return find_isometric_cycle(g, all_pairs_distances(g), k);
  });
  m.def("is_isometric_cycle", [](const Graph& g, const std::vector<Vertex>& c) { return is_isometric_cycle(g, c); });
  m.def("lemma36_conditions", [](const Graph& g, int k) {
    std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
    for (const auto& w : check_lemma36_conditions(g, all_pairs_distances(g), k)) out.emplace_back(w.u, w.v, w.x);
    return out;
  });

  m.def("dual_graph", [](const py::dict& plane) { return to_py(dual_to_json(dual_graph(plane_graph_from_json(from_py(plane))))); });
  m.def(
      "verify_duality",
      [](const py::dict& plane, std::uint64_t cap) {
        auto r = verify_duality_global(plane_graph_from_json(from_py(plane)), cap);
        return to_py({{"congestion", r.congestion}, {"dual_stretch", r.dual_stretch}, {"equal_plus_one", r.equal_plus_one}});
      },
      py::arg("plane"), py::arg("tree_cap") = kDefaultTreeCap);
}
