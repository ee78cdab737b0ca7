#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netclust/benchmark.hpp"
#include "netclust/dot_export.hpp"
#include "netclust/graph.hpp"
#include "netclust/graph_io.hpp"
#include "netclust/gso.hpp"
#include "netclust/modularity.hpp"
#include "netclust/oracle.hpp"
#include "netclust/partition.hpp"

namespace py = pybind11;
using namespace netclust;

namespace {

Partition to_partition(const std::vector<Label>& labels) { return Partition{labels}; }

InputFormat format_from_string(const std::string& format, const std::string& path) {
    if (format == "gml") return InputFormat::gml;
    if (format == "edgelist") return InputFormat::edgelist;
    if (format == "auto") {
        return path.size() >= 4 && path.substr(path.size() - 4) == ".gml"
                   ? InputFormat::gml
                   : InputFormat::edgelist;
    }
    throw std::invalid_argument("format must be one of: auto, gml, edgelist");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Community detection by modularity-maximizing group search";

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](NodeId n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
            py::arg("node_count"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors",
             [](const Graph& g, NodeId v) {
                 const auto span = g.neighbors(v);
                 return std::vector<NodeId>(span.begin(), span.end());
             },
             py::arg("node"))
        .def("degree", &Graph::degree, py::arg("node"))
        .def("__repr__", [](const Graph& g) {
            return "<netclust.Graph with " + std::to_string(g.node_count()) + " nodes, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    py::class_<LoadedGraph>(m, "LoadedGraph")
        .def_readonly("graph", &LoadedGraph::graph)
        .def_readonly("original_ids", &LoadedGraph::original_ids)
        .def_property_readonly("duplicate_edges",
                               [](const LoadedGraph& l) { return l.warnings.duplicate_edges; })
        .def_property_readonly("ignored_weights",
                               [](const LoadedGraph& l) { return l.warnings.ignored_weights; });

    m.def(
        "load_graph",
        [](const std::string& path, const std::string& format) {
            return load_graph_file(path, format_from_string(format, path));
        },
        py::arg("path"), py::arg("format") = "auto");
    m.def(
        "parse_gml", [](const std::string& text) { return parse_gml(text); }, py::arg("text"));
    m.def(
        "parse_edge_list", [](const std::string& text) { return parse_edge_list(text); },
        py::arg("text"));

    m.def(
        "modularity",
        [](const Graph& g, const std::vector<Label>& labels) {
            return modularity(g, to_partition(labels));
        },
        py::arg("graph"), py::arg("labels"));
    m.def(
        "delta_modularity",
        [](const Graph& g, const std::vector<Label>& labels, NodeId node, Label new_label) {
            return delta_modularity(g, to_partition(labels), node, new_label);
        },
        py::arg("graph"), py::arg("labels"), py::arg("node"), py::arg("new_label"));
    m.def(
        "canonicalize",
        [](const std::vector<Label>& labels) { return canonicalize(to_partition(labels)).labels; },
        py::arg("labels"));
    m.def(
        "community_count",
        [](const std::vector<Label>& labels) { return community_count(to_partition(labels)); },
        py::arg("labels"));

    py::class_<GsoParams>(m, "GsoParams")
        .def(py::init<>())
        .def_readwrite("group_size", &GsoParams::group_size)
        .def_readwrite("iterations", &GsoParams::iterations)
        .def_readwrite("ranger_fraction", &GsoParams::ranger_fraction)
        .def_readwrite("patience", &GsoParams::patience)
        .def_readwrite("producer_scan_count", &GsoParams::producer_scan_count)
        .def_readwrite("scan_rates", &GsoParams::scan_rates)
        .def_readwrite("scrounger_copy_prob", &GsoParams::scrounger_copy_prob)
        .def_readwrite("ranger_walk_rate", &GsoParams::ranger_walk_rate)
        .def_readwrite("neighbor_move_prob", &GsoParams::neighbor_move_prob)
        .def_readwrite("k_max", &GsoParams::k_max)
        .def_readwrite("seed", &GsoParams::seed)
        .def_readwrite("stagnation_limit", &GsoParams::stagnation_limit);

    py::class_<RunResult>(m, "RunResult")
        .def_property_readonly("best_q", [](const RunResult& r) { return r.best_q; })
        .def_property_readonly("best_partition",
                               [](const RunResult& r) { return r.best_partition.labels; })
        .def_readonly("trace", &RunResult::trace)
        .def_readonly("iterations_run", &RunResult::iterations_run)
        .def_readonly("evaluations", &RunResult::evaluations)
        .def("__repr__", [](const RunResult& r) {
            return "<netclust.RunResult best_q=" + std::to_string(r.best_q) + ">";
        });

    m.def(
        "optimize",
        [](const Graph& g, const GsoParams& params, int workers) {
            py::gil_scoped_release release;
            return optimize(g, params, workers);
        },
        py::arg("graph"), py::arg("params"), py::arg("workers") = 1);

    m.def(
        "brute_force_max_modularity",
        [](const Graph& g) {
            const OracleResult result = brute_force_max_modularity(g);
            return py::make_tuple(result.q, result.partition.labels);
        },
        py::arg("graph"));
    m.def(
        "greedy_baseline",
        [](const Graph& g) {
            const OracleResult result = greedy_baseline(g);
            return py::make_tuple(result.q, result.partition.labels);
        },
        py::arg("graph"));

    m.def(
        "export_dot",
        [](const Graph& g, const std::vector<Label>& labels,
           const std::vector<std::int64_t>& original_ids) {
            return export_dot(g, to_partition(labels), original_ids);
        },
        py::arg("graph"), py::arg("labels"),
        py::arg("original_ids") = std::vector<std::int64_t>{});
}
