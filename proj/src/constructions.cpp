#include "romankit/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace romankit {

SplitLabeledGraph SplitLabeledGraph::make(Graph g, SplitPartition p) {
    if (!is_split_partition(g, p)) throw std::invalid_argument("partition is not a split partition of the graph");
    return {std::move(g), std::move(p)};
}

SplitLabeledGraph SplitLabeledGraph::with_default_partition(Graph g) {
    auto p = find_split_partition(g);
    if (!p) throw std::invalid_argument("graph is not split");
    return {std::move(g), std::move(*p)};
}

Graph middle_graph(const Graph& g) { return strongly_compatible_minimal(Hypergraph::from_graph(g)); }

SplitLabeledGraph split_join(const SplitLabeledGraph& a, const SplitLabeledGraph& b) {
    const auto shift = static_cast<Vertex>(a.graph.order());
    Graph g = disjoint_union(a.graph, b.graph);
    for (Vertex x : a.partition.clique)
        for (Vertex y : b.partition.clique) g.add_edge(x, y + shift);
    SplitPartition p = a.partition;
    for (Vertex y : b.partition.clique) p.clique.push_back(y + shift);
    for (Vertex y : b.partition.independent) p.independent.push_back(y + shift);
    return {std::move(g), std::move(p)};
}

SplitJoinDecomposition split_join_decompose(const SplitLabeledGraph& sg) {
    const Graph& g = sg.graph;
    const SplitPartition& p = sg.partition;
    if (!is_split_partition(g, p)) throw std::invalid_argument("partition is not a split partition of the graph");

    Graph stripped = g;
    for (std::size_t a = 0; a < p.clique.size(); ++a)
        for (std::size_t b = a + 1; b < p.clique.size(); ++b) stripped.remove_edge(p.clique[a], p.clique[b]);

    SplitJoinDecomposition out;
    for (const VertexSet& comp : connected_components(stripped)) {
        JoinFactor f;
        f.original = comp;
        f.factor.graph = induced_subgraph(g, comp);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const bool in_k = std::binary_search(p.clique.begin(), p.clique.end(), comp[i]);
            (in_k ? f.factor.partition.clique : f.factor.partition.independent).push_back(static_cast<Vertex>(i));
        }
        out.factors.push_back(std::move(f));
    }
    return out;
}

namespace {

void require_t(int t) {
    if (t < 3) throw std::invalid_argument("suns need t >= 3, got " + std::to_string(t));
}

}  // namespace

SplitLabeledGraph sun(int t) {
    require_t(t);
    const auto n = static_cast<Vertex>(t);
    Graph g(2 * n);
    SplitPartition p;
    for (Vertex i = 0; i < n; ++i) {
        p.clique.push_back(i);
        p.independent.push_back(n + i);
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    for (Vertex j = 0; j < n; ++j) {
        g.add_edge(j, n + j);            // i = j
        g.add_edge((j + 1) % n, n + j);  // i = j + 1
    }
    return {std::move(g), std::move(p)};
}

SplitLabeledGraph co_sun(int t) {
    SplitLabeledGraph s = sun(t);
    return {complement(s.graph), {s.partition.independent, s.partition.clique}};
}

Hypergraph cycle_hypergraph(std::size_t t) {
    if (t < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<VertexSet> edges;
    for (Vertex j = 0; j < t; ++j) edges.push_back({j, static_cast<Vertex>((j + 1) % t)});
    return Hypergraph(t, std::move(edges));
}

Labeling sun_cycle_labeling(int t) {
    require_t(t);
    const auto n = static_cast<std::size_t>(t);
    Labeling out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n + (i + n - 1) % n;
        out[n + i] = i;
    }
    return out;
}

Hypergraph co_sun_hypergraph(int t) {
    require_t(t);
    const auto n = static_cast<Vertex>(t);
    std::vector<VertexSet> edges;
    for (Vertex j = 0; j < n; ++j) {
        VertexSet e;
        for (Vertex i = 0; i < n; ++i)
            if (i != j && i != (j + 1) % n) e.push_back(i);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

Labeling co_sun_labeling(int t) { return identity_labeling(co_sun_hypergraph(t)); }

SplitLabeledGraph exact_cover_reduction(const Hypergraph& h, int k) {
    if (k < 1 || !is_k_uniform(h, static_cast<std::size_t>(k)))
        throw std::invalid_argument("hypergraph is not " + std::to_string(k) + "-uniform");
    if (has_isolated_vertex(h)) throw std::invalid_argument("hypergraph has an isolated vertex");
    auto [g, p] = compatible_split(h);
    return {std::move(g), std::move(p)};
}

}  // namespace romankit
