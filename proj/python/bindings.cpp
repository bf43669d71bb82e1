#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "romankit/constructions.hpp"
#include "romankit/domination.hpp"
#include "romankit/enumerate.hpp"
#include "romankit/hypergraph.hpp"
#include "romankit/io.hpp"
#include "romankit/verifier.hpp"

namespace py = pybind11;
using namespace romankit;

namespace {

py::tuple split_tuple(const SplitLabeledGraph& s) {
    return py::make_tuple(s.graph, s.partition.clique, s.partition.independent);
}

SplitLabeledGraph split_from(const Graph& g, std::optional<VertexSet> clique) {
    if (!clique) return SplitLabeledGraph::with_default_partition(g);
    SplitPartition p{*clique, {}};
    std::sort(p.clique.begin(), p.clique.end());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(p.clique.begin(), p.clique.end(), v)) p.independent.push_back(v);
    return SplitLabeledGraph::make(g, std::move(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact {k}-Roman domination toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<std::size_t, std::vector<VertexSet>>(), py::arg("n"), py::arg("edges"))
        .def_static("from_graph", &Hypergraph::from_graph)
        .def_property_readonly("order", &Hypergraph::order)
        .def("edges", &Hypergraph::edges)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; });

    m.def("to_graph6", &to_graph6);
    m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
    m.def("read_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("to_edge_list", &to_edge_list);
    m.def("read_hypergraph", [](const std::string& text) {
        std::istringstream in(text);
        return read_hypergraph(in);
    });

    m.def("complement", &complement);
    m.def("is_isomorphic", &is_isomorphic);
    m.def("find_split_partition", [](const Graph& g) -> std::optional<py::tuple> {
        auto p = find_split_partition(g);
        if (!p) return std::nullopt;
        return py::make_tuple(p->clique, p->independent);
    });
    m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("dedup") = true);

    m.def("gamma", [](const Graph& g) {
        auto c = gamma(g);
        return py::make_tuple(c.gamma, c.witness);
    }, "Domination number and the lexicographically least minimum dominating set.");
    m.def("gamma_rk", [](const Graph& g, int k) {
        auto c = gamma_rk(g, k);
        return py::make_tuple(c.gamma_rk, c.witness.weights());
    }, py::arg("graph"), py::arg("k"));
    m.def("is_k_roman", &is_k_roman, py::arg("graph"), py::arg("k"));
    m.def("is_krdf", [](const Graph& g, int k, std::vector<int> w) { return is_krdf(g, WeightFunction(k, std::move(w))); },
          py::arg("graph"), py::arg("k"), py::arg("weights"));

    m.def("perfect_matching", &perfect_matching);
    m.def("edge_cover_number", &edge_cover_number);
    m.def("incidence_graph", &incidence_graph);
    m.def("strongly_compatible_minimal", &strongly_compatible_minimal);
    m.def("compatible_split", [](const Hypergraph& h) {
        auto [g, p] = compatible_split(h);
        return py::make_tuple(g, p.clique, p.independent);
    });

    m.def("sun", [](int t) { return split_tuple(sun(t)); });
    m.def("co_sun", [](int t) { return split_tuple(co_sun(t)); });
    m.def("middle_graph", &middle_graph);
    m.def("exact_cover_reduction", [](const Hypergraph& h, int k) { return split_tuple(exact_cover_reduction(h, k)); });
    m.def("split_join", [](const Graph& a, const VertexSet& ka, const Graph& b, const VertexSet& kb) {
        return split_tuple(split_join(split_from(a, ka), split_from(b, kb)));
    });
    m.def("split_join_decompose", [](const Graph& g, std::optional<VertexSet> clique) {
        py::list out;
        for (const auto& f : split_join_decompose(split_from(g, std::move(clique))).factors)
            out.append(py::make_tuple(f.factor.graph, f.factor.partition.clique, f.original));
        return out;
    }, py::arg("graph"), py::arg("clique") = py::none());

    m.def("suite_names", &verify::suite_names);
    m.def("_run_suite", [](const std::string& suite, const std::string& budget_json, int threads) {
        verify::Budget b;
        auto j = verify::json::parse(budget_json);
        auto merged = verify::json(b);
        merged.update(j);
        b = merged.get<verify::Budget>();
        verify::VerificationReport r;
        {
            py::gil_scoped_release release;
            r = verify::run_suite(suite, b, verify::Solvers::exact(), threads);
        }
        return verify::json(r).dump();
    });
}
