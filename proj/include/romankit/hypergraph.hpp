#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "romankit/graph.hpp"

namespace romankit {

// H = (V, E) with V = {0, ..., n-1} and E a list of distinct nonempty
// vertex sets. Each hyperedge is stored sorted.
class Hypergraph {
public:
    Hypergraph() = default;
    // Throws std::invalid_argument on empty, out-of-range, or repeated edges.
    Hypergraph(std::size_t n, std::vector<VertexSet> edges);

    // A graph read as a 2-uniform hypergraph; edges in Graph::edges() order.
    static Hypergraph from_graph(const Graph& g);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t j) const { return edges_.at(j); }

    // One vertex mask per hyperedge. Requires n <= 64.
    std::vector<VertexMask> edge_masks() const;

    bool operator==(const Hypergraph& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> edges_;
};

bool is_k_uniform(const Hypergraph& h, std::size_t k);
bool has_isolated_vertex(const Hypergraph& h);

// Lexicographically least list of hyperedge indices forming an exact cover
// of V, or nullopt.
std::optional<std::vector<std::size_t>> perfect_matching(const Hypergraph& h);

// rho(H). Throws std::invalid_argument if H has an isolated vertex.
int edge_cover_number(const Hypergraph& h);

// Graphs built on V u E use the fixed labelling: hypergraph vertex i is
// graph vertex i, hyperedge j is graph vertex n + j.
using Labeling = std::vector<std::size_t>;  // graph vertex -> label in [0, n + m)

Labeling identity_labeling(const Hypergraph& h);

// Bipartite incidence graph: the compatible graph with fewest edges.
Graph incidence_graph(const Hypergraph& h);

// Incidence graph plus edges between intersecting hyperedges.
Graph strongly_compatible_minimal(const Hypergraph& h);

// Incidence graph with E turned into a clique. Returns the partition
// K = edge vertices, I = hypergraph vertices.
std::pair<Graph, SplitPartition> compatible_split(const Hypergraph& h);

// Incidence graph plus the listed hyperedge pairs (indices into edges()).
Graph compatible_with_extra_edges(const Hypergraph& h, const std::vector<std::pair<std::size_t, std::size_t>>& extra);

// strongly_compatible_minimal plus each non-intersecting hyperedge pair
// independently with probability 1/2, from a seeded engine.
Graph strongly_compatible_random(const Hypergraph& h, std::uint64_t seed);

// Throws std::invalid_argument unless labeling is a bijection onto V u E.
bool is_compatible(const Graph& g, const Hypergraph& h, const Labeling& labeling);
bool is_strongly_compatible(const Graph& g, const Hypergraph& h, const Labeling& labeling);

}  // namespace romankit
