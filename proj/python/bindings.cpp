#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triclique/extract.hpp"
#include "triclique/fixtures.hpp"
#include "triclique/generators.hpp"
#include "triclique/graph_io.hpp"
#include "triclique/oracle.hpp"
#include "triclique/serialize.hpp"

namespace py = pybind11;
using namespace triclique;

namespace {

template <class Tag>
std::vector<std::uint32_t> labels(const IndexSet<Tag>& s)
{
    return s.labels();
}

std::vector<std::vector<std::uint32_t>> labels(const std::vector<VertexSet>& sets)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& s : sets)
        out.push_back(s.labels());
    return out;
}

TraceMode mode_of(const std::string& m)
{
    return parse_trace_mode(m);
}

Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    return Graph::from_edge_list(n, edges);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Triangle-pruning maximum clique heuristic with exact oracles";

    static py::exception<Error> error(m, "TricliqueError");
    static py::exception<BudgetExceeded> budget(m, "BudgetExceededError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            py::set_error(budget, e.what());
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<VertexId, VertexId>> out;
                 for (const auto& e : g.edges())
                     out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("edge", [](const Graph& g, EdgeId e) { return std::make_pair(g.edge(e).u, g.edge(e).v); })
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 auto s = g.neighbors(v);
                 return std::vector<VertexId>(s.begin(), s.end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("load_graph", [](const std::string& path) { return load_graph(path); }, py::arg("path"));
    m.def("complete", &complete, py::arg("n"));
    m.def("moon_moser", &moon_moser, py::arg("k"));
    m.def("complete_multipartite", &complete_multipartite, py::arg("parts"));
    m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("complement", &complement, py::arg("g"));

    py::class_<Triangle>(m, "Triangle")
        .def_readonly("id", &Triangle::id)
        .def_readonly("vertices", &Triangle::vertices)
        .def_readonly("edges", &Triangle::edges);
    m.def("enumerate_triangles", &enumerate_triangles, py::arg("g"));
    m.def("edge_weight_vector", [](const Graph& g) { return edge_weight_vector(g, enumerate_triangles(g)).counts; },
          py::arg("g"));
    m.def("vertex_weight_vector", [](const Graph& g) { return vertex_weight_vector(g, enumerate_triangles(g)).counts; },
          py::arg("g"));
    m.def("min_max",
          [](const std::vector<std::uint32_t>& counts) {
              const auto r = min_max({WeightKind::PerEdge, counts});
              return std::make_tuple(r.min, r.max, r.all_zero);
          },
          py::arg("counts"));

    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("index", &IterationRecord::index)
        .def_property_readonly("surviving", [](const IterationRecord& r) { return labels(r.surviving); })
        .def_property_readonly("weights", [](const IterationRecord& r) { return r.weights.counts; })
        .def_readonly("min", &IterationRecord::min)
        .def_readonly("max", &IterationRecord::max)
        .def_property_readonly("removed", [](const IterationRecord& r) { return labels(r.removed); })
        .def_readonly("min_edges", &IterationRecord::min_edges);

    py::class_<Trace>(m, "Trace")
        .def_readonly("iterations", &Trace::iterations)
        .def_readonly("main_index", &Trace::main_index)
        .def_readonly("stopped_early", &Trace::stopped_early)
        .def("to_json", [](const Trace& t, const std::string& mode) { return to_json(t, mode_of(mode)).dump(); },
             py::arg("mode") = "exhaustive");
    m.def("full_trace",
          [](const Graph& g, const std::string& mode, bool differential) {
              return full_trace(g, {mode_of(mode), differential});
          },
          py::arg("g"), py::arg("mode") = "exhaustive", py::arg("differential") = false);

    py::class_<CliqueResult>(m, "CliqueResult")
        .def_property_readonly("vertices", [](const CliqueResult& r) { return labels(r.vertices); })
        .def_property_readonly("size", &CliqueResult::size)
        .def_readonly("witness_triangles", &CliqueResult::witness_triangles)
        .def_readonly("seed_edges", &CliqueResult::seed_edges)
        .def_readonly("verified", &CliqueResult::verified)
        .def_readonly("depth", &CliqueResult::depth)
        .def_readonly("degenerate", &CliqueResult::degenerate)
        .def_readonly("fallback_used", &CliqueResult::fallback_used)
        .def_readonly("main_iteration", &CliqueResult::main_iteration)
        .def("to_json", [](const CliqueResult& r) { return to_json(r).dump(); });

    m.def("is_clique",
          [](const Graph& g, const std::vector<VertexId>& vs) {
              return is_clique(g, VertexSet::from_range(g.vertex_count(), vs));
          },
          py::arg("g"), py::arg("vertices"));
    m.def("extract_max_clique",
          [](const Graph& g, const std::string& mode, bool differential, std::optional<EdgeId> seed_edge) {
              return extract_max_clique(g, {mode_of(mode), differential, seed_edge});
          },
          py::arg("g"), py::arg("mode") = "exhaustive", py::arg("differential") = false,
          py::arg("seed_edge") = py::none());
    m.def("cliques_per_min_edge",
          [](const Graph& g, const std::string& mode) {
              auto pe = cliques_per_min_edge(g, {mode_of(mode), false, std::nullopt});
              py::dict d;
              d["main_index"] = pe.main_index;
              d["min_weight"] = pe.min_weight;
              d["by_edge"] = pe.by_edge;
              d["distinct"] = labels(pe.distinct);
              return d;
          },
          py::arg("g"), py::arg("mode") = "exhaustive");

    py::class_<ExactClique>(m, "ExactClique")
        .def_property_readonly("clique", [](const ExactClique& r) { return labels(r.clique); })
        .def_readonly("omega", &ExactClique::omega)
        .def_readonly("nodes", &ExactClique::nodes);
    m.def("max_clique_exact", &max_clique_exact, py::arg("g"), py::arg("budget") = default_node_budget);
    m.def("enumerate_maximal_cliques",
          [](const Graph& g, std::uint64_t budget) { return labels(enumerate_maximal_cliques(g, budget).cliques); },
          py::arg("g"), py::arg("budget") = default_node_budget);
    m.def("maghout_cliques",
          [](const Graph& g, std::size_t clause_budget) { return labels(maghout_cliques(g, clause_budget).cliques); },
          py::arg("g"), py::arg("clause_budget") = default_clause_budget);

    m.def("fixture_names", &fixture_names);
    m.def("load_fixture",
          [](const std::string& name) {
              auto f = load_fixture(name);
              return std::make_tuple(f.graph, f.expected_json);
          },
          py::arg("name"));
}
