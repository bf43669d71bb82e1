#include "romankit/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "romankit/io.hpp"

namespace romankit {

namespace {

Graph graph_from_bits(std::size_t n, std::uint64_t bits) {
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((bits >> k) & 1U) g.add_edge(i, j);
    return g;
}

// Canonical representatives per order, grown one vertex at a time: every
// graph on m vertices is some graph on m-1 vertices plus a new vertex.
const std::vector<Graph>& dedup_level(std::size_t n) {
    static std::mutex lock;
    static std::vector<std::vector<Graph>> levels{{Graph(0)}};
    std::lock_guard guard(lock);
    while (levels.size() <= n) {
        const std::size_t m = levels.size();
        std::map<std::string, Graph> seen;
        for (const Graph& base : levels.back()) {
            for (std::uint32_t s = 0; s < (std::uint32_t{1} << (m - 1)); ++s) {
                Graph g(m);
                for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
                for (Vertex v = 0; v + 1 < m; ++v)
                    if ((s >> v) & 1U) g.add_edge(v, static_cast<Vertex>(m - 1));
                Graph c = canonical_form(g);
                seen.emplace(to_graph6(c), std::move(c));
            }
        }
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (auto& [key, g] : seen) level.push_back(std::move(g));
        levels.push_back(std::move(level));
    }
    return levels[n];
}

}  // namespace

void for_each_graph(std::size_t n, bool dedup, const std::function<bool(const Graph&)>& visit) {
    if (dedup) {
        if (n > kMaxDedupOrder)
            throw std::invalid_argument("isomorphism-deduplicated enumeration is limited to n <= 8");
        for (const Graph& g : dedup_level(n))
            if (!visit(g)) return;
        return;
    }
    if (n > kMaxLabeledOrder) throw std::invalid_argument("labelled enumeration is limited to n <= 9");
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
        if (!visit(graph_from_bits(n, bits))) return;
}

std::vector<Graph> enumerate_graphs(std::size_t n, bool dedup) {
    std::vector<Graph> out;
    for_each_graph(n, dedup, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::vector<Hypergraph> enumerate_hypergraphs(std::size_t order, const std::vector<std::size_t>& edge_sizes,
                                              std::size_t max_edges) {
    if (order > 7) throw std::invalid_argument("hypergraph enumeration is limited to 7 vertices");

    // candidate edges in (size, lexicographic) order
    std::vector<VertexMask> cands;
    for (std::size_t size : edge_sizes) {
        std::vector<VertexMask> same;
        for (VertexMask m = 1; m < (VertexMask{1} << order); ++m)
            if (static_cast<std::size_t>(std::popcount(m)) == size) same.push_back(m);
        std::sort(same.begin(), same.end(), [](VertexMask a, VertexMask b) { return mask_to_set(a) < mask_to_set(b); });
        cands.insert(cands.end(), same.begin(), same.end());
    }
    if (cands.size() > 63) throw std::invalid_argument("too many candidate hyperedges to enumerate");
    std::map<VertexMask, std::size_t> index;
    for (std::size_t i = 0; i < cands.size(); ++i) index[cands[i]] = i;

    // image of every candidate under every vertex permutation
    std::vector<std::vector<std::uint64_t>> image;
    std::vector<Vertex> perm(order);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        std::vector<std::uint64_t> row(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            VertexMask mapped = 0;
            for (Vertex v : mask_to_set(cands[i])) mapped |= VertexMask{1} << perm[v];
            row[i] = std::uint64_t{1} << index.at(mapped);
        }
        image.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // A set of candidates is kept iff its bitmask is the least in its orbit.
    auto is_least = [&](std::uint64_t set) {
        for (const auto& row : image) {
            std::uint64_t mapped = 0;
            for (std::uint64_t s = set; s; s &= s - 1) mapped |= row[std::countr_zero(s)];
            if (mapped < set) return false;
        }
        return true;
    };

    std::vector<Hypergraph> out;
    const std::size_t c = cands.size();
    const std::size_t top = std::min(max_edges, c);
    for (std::size_t count = 0; count <= top; ++count) {
        if (count == 0) {
            out.emplace_back(order, std::vector<VertexSet>{});
            continue;
        }
        // Gosper's hack over count-subsets of the candidates
        std::uint64_t set = (std::uint64_t{1} << count) - 1;
        const std::uint64_t limit = std::uint64_t{1} << c;
        while (set < limit) {
            if (is_least(set)) {
                std::vector<VertexSet> edges;
                for (std::uint64_t s = set; s; s &= s - 1) edges.push_back(mask_to_set(cands[std::countr_zero(s)]));
                out.emplace_back(order, std::move(edges));
            }
            const std::uint64_t low = set & -set;
            const std::uint64_t ripple = set + low;
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    return out;
}

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

VertexSet random_subset_with(std::mt19937_64& rng, std::size_t order, std::size_t k, std::optional<Vertex> must) {
    std::vector<Vertex> pool(order);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[below(rng, i)]);
    VertexSet e;
    if (must) e.push_back(*must);
    for (Vertex v : pool) {
        if (e.size() == k) break;
        if (!must || v != *must) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, std::size_t order, std::size_t k, std::size_t max_edges,
                                     bool plant_matching) {
    if (k == 0 || k > order) throw std::invalid_argument("need 1 <= k <= order");
    std::set<VertexSet> edges;
    if (plant_matching && order % k == 0) {
        std::vector<Vertex> perm(order);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
        for (std::size_t s = 0; s < order; s += k) {
            VertexSet e(perm.begin() + static_cast<std::ptrdiff_t>(s), perm.begin() + static_cast<std::ptrdiff_t>(s + k));
            std::sort(e.begin(), e.end());
            edges.insert(std::move(e));
        }
    }
    // ensure every vertex is covered
    for (Vertex v = 0; v < order; ++v) {
        bool covered = std::any_of(edges.begin(), edges.end(),
                                   [v](const VertexSet& e) { return std::binary_search(e.begin(), e.end(), v); });
        if (!covered) edges.insert(random_subset_with(rng, order, k, v));
    }
    std::size_t possible = 1;
    for (std::size_t i = 0; i < k; ++i) possible = possible * (order - i) / (i + 1);
    std::size_t target = edges.size();
    if (max_edges > target) target += below(rng, max_edges - target + 1);
    target = std::min(target, possible);
    for (int attempts = 0; edges.size() < target && attempts < 1000; ++attempts)
        edges.insert(random_subset_with(rng, order, k, std::nullopt));

    std::vector<VertexSet> list(edges.begin(), edges.end());
    for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[below(rng, i)]);
    return Hypergraph(order, std::move(list));
}

}  // namespace romankit
