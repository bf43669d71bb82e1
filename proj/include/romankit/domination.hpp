#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "romankit/graph.hpp"

namespace romankit {

// f: V -> {0, ..., k}.
class WeightFunction {
public:
    WeightFunction() = default;
    // Throws std::invalid_argument if k < 1 or a weight lies outside [0, k].
    WeightFunction(int k, std::vector<int> weights);

    int k() const { return k_; }
    const std::vector<int>& weights() const { return weights_; }
    int operator[](Vertex v) const { return weights_.at(v); }
    std::size_t size() const { return weights_.size(); }

    // f(V)
    int weight() const;
    // f(S)
    int weight_of(const VertexSet& s) const;

    bool operator==(const WeightFunction& other) const = default;

private:
    int k_ = 1;
    std::vector<int> weights_;
};

struct DominationCertificate {
    int gamma = 0;
    VertexSet witness;  // lexicographically least minimum dominating set
};

struct RomanCertificate {
    int k = 1;
    int gamma_rk = 0;
    WeightFunction witness;  // lexicographically least optimal weight vector
};

bool is_dominating_set(const Graph& g, const VertexSet& d);

DominationCertificate gamma(const Graph& g);

// Open-neighbourhood condition at every zero-weight vertex. Throws
// std::invalid_argument if f is not defined on exactly V(g).
bool is_krdf(const Graph& g, const WeightFunction& f);

// Minimum weight {k}-Roman dominating function; k >= 1.
RomanCertificate gamma_rk(const Graph& g, int k);

// Whether some {k}-Roman dominating function has weight <= budget; the
// decision core behind gamma_rk and is_k_roman.
std::optional<WeightFunction> find_krdf_within(const Graph& g, int k, int budget);

// gamma_rk(g, k) == k * gamma(g). Rejects k < 2.
bool is_k_roman(const Graph& g, int k);

// Minimum dominating set inside the clique side. Requires a valid split
// partition and no isolated vertices.
VertexSet bertossi_dominating_set(const Graph& g, const SplitPartition& p);

// Optimal {2}-Roman function f with f(N(u) & I) <= 1 for every u in K and
// f(K) >= 2, obtained by rewriting an exact optimum.
WeightFunction normalized_gamma_r2(const Graph& g, const SplitPartition& p);

// Greedy dominating set: repeatedly pick the vertex covering the most
// undominated vertices (lowest index on ties).
VertexSet greedy_dominating_set(const Graph& g);

}  // namespace romankit
