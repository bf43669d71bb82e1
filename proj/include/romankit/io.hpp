#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "romankit/domination.hpp"
#include "romankit/graph.hpp"
#include "romankit/hypergraph.hpp"

namespace romankit {

// Malformed input. line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// graph6, without the optional ">>graph6<<" header on output. Input may
// carry the header and a trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// "n m" then m lines "u v"; '#' starts a comment.
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

// "n m" then m lines, each a space-separated hyperedge.
std::string to_hypergraph_text(const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);

// A line holding k, then one line of n weights in vertex order.
std::string to_weight_text(const WeightFunction& f);
WeightFunction read_weight_function(std::istream& in);

// Two lines "K v..." and "I v...", in either order.
std::string to_partition_text(const SplitPartition& p);
SplitPartition read_partition(std::istream& in);

}  // namespace romankit
