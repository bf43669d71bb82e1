#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace romankit {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // kept sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Bitmask over at most 64 vertices; the exact solvers work on these.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVertices = 64;

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const;

    // Throws std::out_of_range for bad indices and std::invalid_argument for
    // self-loops. Adding an existing edge is a no-op.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    // One mask per vertex holding its open neighbourhood. Requires n <= 64.
    std::vector<VertexMask> adjacency_masks() const;

    bool operator==(const Graph& other) const = default;

private:
    void check(Vertex v) const;

    std::vector<VertexSet> adj_;
};

// (K, I) with K a clique and I an independent set covering all vertices.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    bool operator==(const SplitPartition& other) const = default;
};

Graph complement(const Graph& g);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

// Checks the partition property and that K, I are well-formed vertex sets.
bool is_split_partition(const Graph& g, const SplitPartition& p);

// Maximum-clique split partition, or nullopt if g is not split. Ties among
// maximum clique sides are broken towards the lexicographically smallest K.
std::optional<SplitPartition> find_split_partition(const Graph& g);

// Every split partition of g, by exhaustive search. Intended for n <= 20.
std::vector<SplitPartition> all_split_partitions(const Graph& g);

inline constexpr std::size_t kMaxIsomorphismOrder = 10;

// Exhaustive permutation search with degree pruning; n <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

// Canonical relabelling: isomorphic graphs map to identical graphs. Uses
// colour refinement to cut down the permutation search; meant for n <= 10.
Graph canonical_form(const Graph& g);

// Disjoint union, vertices of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Named small graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // centre is vertex 0

VertexSet mask_to_set(VertexMask m);
VertexMask set_to_mask(const VertexSet& s);

}  // namespace romankit
