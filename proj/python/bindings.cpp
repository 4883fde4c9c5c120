#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlucky/bounds.hpp"
#include "dlucky/constructions.hpp"
#include "dlucky/io.hpp"
#include "dlucky/solver.hpp"

namespace py = pybind11;
using namespace dlucky;

namespace {

template <typename T>
std::vector<T> copy(std::span<const T> s) {
  return {s.begin(), s.end()};
}

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "d-lucky labelings: graphs, verification, bounds, constructions, exact search";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       std::vector<std::string> tags) {
             return Graph(n, to_edges(edges), std::move(tags));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{},
           py::arg("tags") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &edge_pairs)
      .def_property_readonly("tags", [](const Graph& g) { return copy(g.tags()); })
      .def("neighbors", [](const Graph& g, Vertex u) { return copy(g.neighbors(u)); })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("with_tags", &Graph::with_tags)
      .def("__len__", &Graph::vertex_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("m"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("empty_graph", &empty_graph, py::arg("n"));
  m.def("complement", &complement);
  m.def("cartesian_product", &cartesian_product);
  m.def("corona", &corona);
  m.def("complete_multipartite", &complete_multipartite, py::arg("n"), py::arg("t"));
  m.def("is_connected", &is_connected);
  m.def(
      "subdivide_edges",
      [](const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        return subdivide_edges(g, to_edges(edges));
      },
      py::arg("g"), py::arg("edges"));

  py::class_<Labeling>(m, "Labeling")
      .def(py::init([](std::vector<Label> labels, std::optional<Label> k) {
             return Labeling(std::move(labels), k);
           }),
           py::arg("labels"), py::arg("k") = py::none())
      .def_property_readonly("labels", [](const Labeling& l) { return copy(l.labels()); })
      .def_property_readonly("k", &Labeling::k_max)
      .def("__len__", &Labeling::size)
      .def("__getitem__", [](const Labeling& l, Vertex v) {
        if (v >= l.size()) throw py::index_error();
        return l[v];
      })
      .def("__eq__", [](const Labeling& a, const Labeling& b) { return a == b; });

  py::class_<ConflictReport>(m, "ConflictReport")
      .def_property_readonly("conflicts",
                             [](const ConflictReport& r) {
                               std::vector<std::tuple<Vertex, Vertex, DSum>> out;
                               for (const auto& c : r.conflicts)
                                 out.emplace_back(c.edge.u, c.edge.v, c.dsum);
                               return out;
                             })
      .def_readonly("d_sums", &ConflictReport::d_sums)
      .def_property_readonly("is_d_lucky", &ConflictReport::is_d_lucky);

  m.def("d_lucky_sum", &d_lucky_sum, py::arg("g"), py::arg("labeling"), py::arg("u"));
  m.def("d_lucky_sums", &d_lucky_sums, py::arg("g"), py::arg("labeling"));
  m.def("verify", &verify, py::arg("g"), py::arg("labeling"));
  m.def("max_label", &max_label);

  py::class_<CliqueRecord>(m, "CliqueRecord")
      .def_readonly("vertices", &CliqueRecord::vertices)
      .def_readonly("delta", &CliqueRecord::delta)
      .def_readonly("max_deg", &CliqueRecord::max_deg);
  py::class_<LowerBoundReport>(m, "LowerBoundReport")
      .def_readonly("value", &LowerBoundReport::value)
      .def_readonly("omega", &LowerBoundReport::omega)
      .def_readonly("witness", &LowerBoundReport::witness);

  m.def("enumerate_maximum_cliques", &enumerate_maximum_cliques, py::arg("g"),
        py::arg("vertex_cap") = kDefaultCliqueVertexCap);
  m.def("lower_bound_thm1_report", &lower_bound_thm1_report, py::arg("g"),
        py::arg("vertex_cap") = kDefaultCliqueVertexCap);
  m.def("lower_bound_thm1", &lower_bound_thm1, py::arg("g"),
        py::arg("vertex_cap") = kDefaultCliqueVertexCap);
  m.def("lower_bound_cor2", &lower_bound_cor2, py::arg("r"), py::arg("omega"));

  py::class_<LabeledFamily>(m, "LabeledFamily")
      .def_readonly("family", &LabeledFamily::family)
      .def_readonly("graph", &LabeledFamily::graph)
      .def_readonly("labeling", &LabeledFamily::labeling)
      .def_readonly("claimed_eta", &LabeledFamily::claimed_eta)
      .def_readonly("role_index", &LabeledFamily::role_index);

  m.def("build_corona", [](std::size_t n, std::size_t r) { return build_corona({n, r}); },
        py::arg("n"), py::arg("r"));
  m.def("build_web", [](std::size_t m_, std::size_t n) { return build_web({m_, n}); },
        py::arg("m"), py::arg("n"));
  m.def("build_cocktail",
        [](std::size_t n, std::size_t t, std::size_t r) { return build_cocktail({n, t, r}); },
        py::arg("n"), py::arg("t"), py::arg("r"));
  m.def("corona_graph", [](std::size_t n, std::size_t r) { return corona_family_graph({n, r}); },
        py::arg("n"), py::arg("r"));
  m.def("cylinder_graph", &cylinder_graph, py::arg("m"), py::arg("n"));
  m.def("web_graph", [](std::size_t m_, std::size_t n) { return web_graph({m_, n}); },
        py::arg("m"), py::arg("n"));
  m.def("cocktail_graph",
        [](std::size_t n, std::size_t t, std::size_t r) { return cocktail_graph({n, t, r}); },
        py::arg("n"), py::arg("t"), py::arg("r"));
  m.def("pendant_tuple", &pendant_tuple, py::arg("rank"), py::arg("k"), py::arg("r"));
  m.def("family_dsum_table", [](const LabeledFamily& f) {
    std::vector<std::tuple<std::string, Vertex, DSum>> out;
    for (const auto& row : family_dsum_table(f)) out.emplace_back(row.role, row.vertex, row.dsum);
    return out;
  });
  m.def("structural_dsums", &structural_dsums);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("eta", &SolveResult::eta)
      .def_readonly("witness", &SolveResult::witness)
      .def_readonly("nodes_explored", &SolveResult::nodes_explored)
      .def_readonly("k_tried", &SolveResult::k_tried);

  m.def(
      "exact_eta",
      [](const Graph& g, Label max_k, std::size_t vertex_cap, unsigned threads) {
        SolveOptions opts;
        opts.vertex_cap = vertex_cap;
        opts.threads = threads;
        py::gil_scoped_release release;
        return exact_eta(g, max_k, opts);
      },
      py::arg("g"), py::arg("max_k") = 8, py::arg("vertex_cap") = kDefaultSolverVertexCap,
      py::arg("threads") = 1);
  m.def(
      "exists_labeling",
      [](const Graph& g, Label k, std::size_t vertex_cap) {
        SolveOptions opts;
        opts.vertex_cap = vertex_cap;
        py::gil_scoped_release release;
        return exists_labeling(g, k, opts);
      },
      py::arg("g"), py::arg("k"), py::arg("vertex_cap") = kDefaultSolverVertexCap);

  m.def("graph_to_json", &graph_to_json);
  m.def("graph_from_json", [](const std::string& text) { return graph_from_json(text); });
  m.def("labeling_to_json", &labeling_to_json, py::arg("labeling"),
        py::arg("roles") = RoleIndex{});
  m.def("labeling_from_json", [](const std::string& text) {
    auto file = labeling_from_json(text);
    return py::make_tuple(file.labeling, file.roles);
  });
  m.def(
      "to_dot",
      [](const Graph& g, const Labeling* labeling, const std::optional<RoleIndex>& roles) {
        return to_dot(g, labeling, roles ? &*roles : nullptr);
      },
      py::arg("g"), py::arg("labeling") = nullptr, py::arg("roles") = py::none());
}
