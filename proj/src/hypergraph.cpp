#include "romankit/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace romankit {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
    std::set<VertexSet> seen;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto& e = edges_[j];
        std::sort(e.begin(), e.end());
        if (e.empty()) throw std::invalid_argument("hyperedge " + std::to_string(j) + " is empty");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("hyperedge " + std::to_string(j) + " repeats a vertex");
        if (e.back() >= n_)
            throw std::invalid_argument("hyperedge " + std::to_string(j) + " has vertex " + std::to_string(e.back()) +
                                        " out of range");
        if (!seen.insert(e).second) throw std::invalid_argument("hyperedge " + std::to_string(j) + " is a duplicate");
    }
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
    std::vector<VertexSet> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return Hypergraph(g.order(), std::move(edges));
}

std::vector<VertexMask> Hypergraph::edge_masks() const {
    if (n_ > kMaxMaskVertices) throw std::invalid_argument("hypergraph exceeds the 64-vertex solver limit");
    std::vector<VertexMask> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(set_to_mask(e));
    return out;
}

bool is_k_uniform(const Hypergraph& h, std::size_t k) {
    return std::all_of(h.edges().begin(), h.edges().end(), [k](const VertexSet& e) { return e.size() == k; });
}

bool has_isolated_vertex(const Hypergraph& h) {
    std::vector<bool> hit(h.order(), false);
    for (const auto& e : h.edges())
        for (Vertex v : e) hit[v] = true;
    return std::find(hit.begin(), hit.end(), false) != hit.end();
}

namespace {

VertexMask full_mask(std::size_t n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

class ExactCover {
public:
    explicit ExactCover(const Hypergraph& h) : edges_(h.edge_masks()), full_(full_mask(h.order())) {}

    std::optional<std::vector<std::size_t>> least() const {
        std::vector<std::size_t> chosen;
        VertexMask covered = 0;
        std::size_t next = 0;
        while (covered != full_) {
            bool found = false;
            for (std::size_t e = next; e < edges_.size(); ++e) {
                if (edges_[e] & covered) continue;
                if (exists(covered | edges_[e], e + 1)) {
                    chosen.push_back(e);
                    covered |= edges_[e];
                    next = e + 1;
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return chosen;
    }

private:
    // Algorithm X on edges with index >= first, branching on the uncovered
    // vertex with the fewest usable edges.
    bool exists(VertexMask covered, std::size_t first) const {
        if (covered == full_) return true;
        int pivot = -1;
        std::size_t fewest = edges_.size() + 1;
        for (VertexMask u = full_ & ~covered; u; u &= u - 1) {
            const VertexMask bit = u & -u;
            std::size_t count = 0;
            for (std::size_t e = first; e < edges_.size(); ++e)
                if ((edges_[e] & bit) && !(edges_[e] & covered)) ++count;
            if (count < fewest) {
                fewest = count;
                pivot = std::countr_zero(u);
                if (count == 0) return false;
            }
        }
        const VertexMask bit = VertexMask{1} << pivot;
        for (std::size_t e = first; e < edges_.size(); ++e)
            if ((edges_[e] & bit) && !(edges_[e] & covered) && exists(covered | edges_[e], first)) return true;
        return false;
    }

    std::vector<VertexMask> edges_;
    VertexMask full_;
};

class EdgeCover {
public:
    explicit EdgeCover(const Hypergraph& h) : edges_(h.edge_masks()), full_(full_mask(h.order())) {
        for (auto m : edges_) widest_ = std::max(widest_, std::popcount(m));
    }

    int minimum() {
        best_ = greedy();
        branch(0, 0);
        return best_;
    }

private:
    int greedy() const {
        VertexMask covered = 0;
        int used = 0;
        while (covered != full_) {
            VertexMask pick = 0;
            int gain = 0;
            for (auto m : edges_)
                if (std::popcount(m & ~covered) > gain) {
                    gain = std::popcount(m & ~covered);
                    pick = m;
                }
            covered |= pick;
            ++used;
        }
        return used;
    }

    void branch(VertexMask covered, int used) {
        if (covered == full_) {
            best_ = std::min(best_, used);
            return;
        }
        const VertexMask uncovered = full_ & ~covered;
        if (used + (std::popcount(uncovered) + widest_ - 1) / widest_ >= best_) return;
        int pivot = -1;
        int fewest = static_cast<int>(edges_.size()) + 1;
        for (VertexMask u = uncovered; u; u &= u - 1) {
            const VertexMask bit = u & -u;
            int count = 0;
            for (auto m : edges_)
                if (m & bit) ++count;
            if (count < fewest) {
                fewest = count;
                pivot = std::countr_zero(u);
            }
        }
        const VertexMask bit = VertexMask{1} << pivot;
        std::vector<VertexMask> cands;
        for (auto m : edges_)
            if (m & bit) cands.push_back(m);
        std::stable_sort(cands.begin(), cands.end(), [&](VertexMask a, VertexMask b) {
            return std::popcount(a & uncovered) > std::popcount(b & uncovered);
        });
        for (auto m : cands) branch(covered | m, used + 1);
    }

    std::vector<VertexMask> edges_;
    VertexMask full_;
    int widest_ = 1;
    int best_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> perfect_matching(const Hypergraph& h) { return ExactCover(h).least(); }

int edge_cover_number(const Hypergraph& h) {
    if (has_isolated_vertex(h)) throw std::invalid_argument("edge cover undefined: hypergraph has an isolated vertex");
    if (h.order() == 0) return 0;
    return EdgeCover(h).minimum();
}

Labeling identity_labeling(const Hypergraph& h) {
    Labeling out(h.order() + h.edge_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

Graph incidence_graph(const Hypergraph& h) {
    const auto n = static_cast<Vertex>(h.order());
    Graph g(h.order() + h.edge_count());
    for (std::size_t j = 0; j < h.edge_count(); ++j)
        for (Vertex v : h.edge(j)) g.add_edge(v, n + static_cast<Vertex>(j));
    return g;
}

namespace {

bool intersects(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

Graph compatible_with_extra_edges(const Hypergraph& h,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& extra) {
    const auto n = static_cast<Vertex>(h.order());
    Graph g = incidence_graph(h);
    for (const auto& [a, b] : extra) {
        if (a >= h.edge_count() || b >= h.edge_count())
            throw std::out_of_range("extra edge refers to a missing hyperedge");
        g.add_edge(n + static_cast<Vertex>(a), n + static_cast<Vertex>(b));
    }
    return g;
}

Graph strongly_compatible_minimal(const Hypergraph& h) {
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = a + 1; b < h.edge_count(); ++b)
            if (intersects(h.edge(a), h.edge(b))) extra.emplace_back(a, b);
    return compatible_with_extra_edges(h, extra);
}

Graph strongly_compatible_random(const Hypergraph& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = a + 1; b < h.edge_count(); ++b)
            if (intersects(h.edge(a), h.edge(b)) || (rng() & 1U)) extra.emplace_back(a, b);
    return compatible_with_extra_edges(h, extra);
}

std::pair<Graph, SplitPartition> compatible_split(const Hypergraph& h) {
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = a + 1; b < h.edge_count(); ++b) extra.emplace_back(a, b);
    SplitPartition p;
    for (std::size_t i = 0; i < h.order(); ++i) p.independent.push_back(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < h.edge_count(); ++j) p.clique.push_back(static_cast<Vertex>(h.order() + j));
    return {compatible_with_extra_edges(h, extra), std::move(p)};
}

namespace {

// Inverse of the labelling: label -> graph vertex.
std::vector<Vertex> invert(const Graph& g, const Hypergraph& h, const Labeling& labeling) {
    const std::size_t total = h.order() + h.edge_count();
    if (labeling.size() != g.order() || g.order() != total)
        throw std::invalid_argument("labeling must cover every vertex and hyperedge exactly once");
    std::vector<Vertex> inverse(total, 0);
    std::vector<bool> hit(total, false);
    for (std::size_t x = 0; x < labeling.size(); ++x) {
        if (labeling[x] >= total || hit[labeling[x]])
            throw std::invalid_argument("labeling is not a bijection onto V u E");
        hit[labeling[x]] = true;
        inverse[labeling[x]] = static_cast<Vertex>(x);
    }
    return inverse;
}

}  // namespace

bool is_compatible(const Graph& g, const Hypergraph& h, const Labeling& labeling) {
    const auto at = invert(g, h, labeling);
    const std::size_t n = h.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (g.adjacent(at[a], at[b])) return false;
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
        const auto& e = h.edge(j);
        for (std::size_t v = 0; v < n; ++v) {
            const bool member = std::binary_search(e.begin(), e.end(), static_cast<Vertex>(v));
            if (g.adjacent(at[v], at[n + j]) != member) return false;
        }
    }
    return true;
}

bool is_strongly_compatible(const Graph& g, const Hypergraph& h, const Labeling& labeling) {
    if (!is_compatible(g, h, labeling)) return false;
    const auto at = invert(g, h, labeling);
    const std::size_t n = h.order();
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = a + 1; b < h.edge_count(); ++b)
            if (intersects(h.edge(a), h.edge(b)) && !g.adjacent(at[n + a], at[n + b])) return false;
    return true;
}

}  // namespace romankit
