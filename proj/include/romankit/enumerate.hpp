#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "romankit/graph.hpp"
#include "romankit/hypergraph.hpp"

namespace romankit {

inline constexpr std::size_t kMaxDedupOrder = 8;
inline constexpr std::size_t kMaxLabeledOrder = 9;

// All graphs on n vertices: every labelled graph (2^(n choose 2) of them),
// or with dedup one canonical representative per isomorphism class. The
// visitor returns false to stop early. Throws std::invalid_argument past the
// size limits.
void for_each_graph(std::size_t n, bool dedup, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(std::size_t n, bool dedup);

// Hypergraphs on `order` vertices whose edges have a size listed in
// edge_sizes and whose edge count is at most max_edges, one per
// isomorphism class under vertex permutations. order <= 7.
std::vector<Hypergraph> enumerate_hypergraphs(std::size_t order, const std::vector<std::size_t>& edge_sizes,
                                              std::size_t max_edges);

// Random k-uniform hypergraph without isolated vertices. With
// plant_matching (and k dividing order) the edge set contains a perfect
// matching before extra edges are mixed in. The edge count is drawn up to
// max_edges, but covering every vertex may need more.
Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, std::size_t order, std::size_t k, std::size_t max_edges,
                                     bool plant_matching);

}  // namespace romankit
