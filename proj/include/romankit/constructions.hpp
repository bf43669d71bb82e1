#pragma once

#include <vector>

#include "romankit/graph.hpp"
#include "romankit/hypergraph.hpp"

namespace romankit {

// G = (K, I, E): a split graph together with the partition it is read with.
struct SplitLabeledGraph {
    Graph graph;
    SplitPartition partition;

    // Throws std::invalid_argument if the partition does not fit the graph.
    static SplitLabeledGraph make(Graph g, SplitPartition p);
    // Uses find_split_partition; throws if g is not split.
    static SplitLabeledGraph with_default_partition(Graph g);

    bool operator==(const SplitLabeledGraph& other) const = default;
};

// Subdivide every edge; join subdivision vertices of edges sharing an
// endpoint. Original vertices keep their index, edge j of g.edges() becomes
// vertex n + j.
Graph middle_graph(const Graph& g);

// Disjoint union with b shifted by a's order, plus all K_a x K_b edges.
SplitLabeledGraph split_join(const SplitLabeledGraph& a, const SplitLabeledGraph& b);

struct JoinFactor {
    SplitLabeledGraph factor;
    VertexSet original;  // factor vertex i is original[i] in the input
};

struct SplitJoinDecomposition {
    std::vector<JoinFactor> factors;  // one per component after deleting K-edges

    bool prime() const { return factors.size() < 2; }
};

SplitJoinDecomposition split_join_decompose(const SplitLabeledGraph& g);

// t-sun: u_1..u_t at indices 0..t-1 forming K, w_1..w_t at t..2t-1 forming
// I, with u_i ~ w_j iff i = j or i = j + 1 (mod t).
SplitLabeledGraph sun(int t);

// Complement of sun(t) with K = {w_j}, I = {u_i}.
SplitLabeledGraph co_sun(int t);

// Labelling of sun(t) against cycle_hypergraph(t): w_j is cycle vertex j and
// u_i is the cycle edge {w_{i-1}, w_i}.
Hypergraph cycle_hypergraph(std::size_t t);  // edge j = {j, j+1 mod t}
Labeling sun_cycle_labeling(int t);

// (t-2)-uniform hypergraph on the u's with one edge per w_j, namely K minus
// the two sun-neighbours of w_j, plus the labelling of co_sun(t) against it.
Hypergraph co_sun_hypergraph(int t);
Labeling co_sun_labeling(int t);

// The split graph compatible with h in which E is a clique; h must be
// k-uniform without isolated vertices.
SplitLabeledGraph exact_cover_reduction(const Hypergraph& h, int k);

}  // namespace romankit
