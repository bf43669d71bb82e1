#pragma once

// Naive exhaustive references. They only use adjacency queries and
// enumerate everything, so they stay independent of the solvers under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "romankit/graph.hpp"
#include "romankit/hypergraph.hpp"

namespace oracle {

using romankit::Graph;
using romankit::Hypergraph;
using romankit::SplitPartition;
using romankit::Vertex;
using romankit::VertexSet;

inline VertexSet bits_to_set(std::uint64_t bits, std::size_t n) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
        if ((bits >> v) & 1U) s.push_back(v);
    return s;
}

inline bool dominates(const Graph& g, std::uint64_t bits) {
    for (Vertex v = 0; v < g.order(); ++v) {
        bool hit = (bits >> v) & 1U;
        for (Vertex u = 0; u < g.order() && !hit; ++u) hit = g.adjacent(u, v) && ((bits >> u) & 1U);
        if (!hit) return false;
    }
    return true;
}

// Minimum dominating set, lexicographically least among the minimum ones.
inline VertexSet min_dominating_set(const Graph& g) {
    std::optional<VertexSet> best;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
        if (!dominates(g, bits)) continue;
        VertexSet s = bits_to_set(bits, g.order());
        if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) best = s;
    }
    return *best;
}

inline int gamma(const Graph& g) { return static_cast<int>(min_dominating_set(g).size()); }

inline bool valid_roman(const Graph& g, const std::vector<int>& w, int k) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (w[v] != 0) continue;
        int s = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            if (g.adjacent(u, v)) s += w[u];
        if (s < k) return false;
    }
    return true;
}

// Every function V -> {0..k} in lexicographic order of the weight vector.
template <class F>
void for_each_function(std::size_t n, int k, F&& visit) {
    std::vector<int> w(n, 0);
    while (true) {
        visit(static_cast<const std::vector<int>&>(w));
        std::size_t i = n;
        while (i > 0 && w[i - 1] == k) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

// Minimum-weight {k}-Roman function, lexicographically least weight vector.
inline std::vector<int> min_roman_function(const Graph& g, int k) {
    std::optional<std::vector<int>> best;
    int best_w = 0;
    for_each_function(g.order(), k, [&](const std::vector<int>& w) {
        const int total = std::accumulate(w.begin(), w.end(), 0);
        if (best && total >= best_w) return;
        if (valid_roman(g, w, k)) {
            best = w;
            best_w = total;
        }
    });
    return *best;
}

inline int gamma_rk(const Graph& g, int k) {
    const auto w = min_roman_function(g, k);
    return std::accumulate(w.begin(), w.end(), 0);
}

// Lowest weight of a {k}-Roman function using only the values 0 and k.
inline int min_zero_or_k_roman(const Graph& g, int k) {
    int best = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
        std::vector<int> w(g.order(), 0);
        for (Vertex v = 0; v < g.order(); ++v)
            if ((bits >> v) & 1U) w[v] = k;
        const int total = k * std::popcount(bits);
        if ((best < 0 || total < best) && valid_roman(g, w, k)) best = total;
    }
    return best;
}

inline std::vector<SplitPartition> split_partitions(const Graph& g) {
    std::vector<SplitPartition> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
        SplitPartition p;
        for (Vertex v = 0; v < g.order(); ++v) ((bits >> v) & 1U ? p.clique : p.independent).push_back(v);
        bool ok = true;
        for (Vertex a : p.clique)
            for (Vertex b : p.clique) ok = ok && (a == b || g.adjacent(a, b));
        for (Vertex a : p.independent)
            for (Vertex b : p.independent) ok = ok && !g.adjacent(a, b);
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < a.order() && ok; ++u)
            for (Vertex v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool covers(const Hypergraph& h, std::uint64_t chosen, bool disjoint) {
    std::vector<int> hits(h.order(), 0);
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        if ((chosen >> j) & 1U)
            for (Vertex v : h.edge(j)) ++hits[v];
    return std::all_of(hits.begin(), hits.end(), [&](int c) { return disjoint ? c == 1 : c >= 1; });
}

inline int edge_cover_number(const Hypergraph& h) {
    int best = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.edge_count()); ++bits)
        if ((best < 0 || std::popcount(bits) < best) && covers(h, bits, false)) best = std::popcount(bits);
    return best;
}

// Lexicographically least sorted index list of a perfect matching.
inline std::optional<std::vector<std::size_t>> perfect_matching(const Hypergraph& h) {
    std::optional<std::vector<std::size_t>> best;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << h.edge_count()); ++bits) {
        if (!covers(h, bits, true)) continue;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < h.edge_count(); ++j)
            if ((bits >> j) & 1U) idx.push_back(j);
        if (!best || idx < *best) best = idx;
    }
    return best;
}

}  // namespace oracle
