#include "romankit/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace romankit {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

void Graph::check(Vertex v) const {
    if (v >= adj_.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                std::to_string(adj_.size()));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto insert = [](VertexSet& s, Vertex x) {
        auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it == s.end() || *it != x) s.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto erase = [](VertexSet& s, Vertex x) {
        auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it != s.end() && *it == x) s.erase(it);
    };
    erase(adj_[u], v);
    erase(adj_[v], u);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexMask> Graph::adjacency_masks() const {
    if (adj_.size() > kMaxMaskVertices)
        throw std::invalid_argument("graph of order " + std::to_string(adj_.size()) +
                                    " exceeds the 64-vertex solver limit");
    std::vector<VertexMask> masks(adj_.size(), 0);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u]) masks[u] |= VertexMask{1} << v;
    return masks;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<long> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<long>(i);
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (index[w] > static_cast<long>(i)) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool is_split_partition(const Graph& g, const SplitPartition& p) {
    const std::size_t n = g.order();
    std::vector<int> count(n, 0);
    auto mark = [&](const VertexSet& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= n) return false;
            if (i > 0 && s[i - 1] >= s[i]) return false;
            ++count[s[i]];
        }
        return true;
    };
    if (!mark(p.clique) || !mark(p.independent)) return false;
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) return false;
    return is_clique(g, p.clique) && is_independent(g, p.independent);
}

namespace {

VertexSet complement_of(std::size_t n, const VertexSet& s) {
    VertexSet out;
    std::size_t j = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (j < s.size() && s[j] == v)
            ++j;
        else
            out.push_back(v);
    }
    return out;
}

}  // namespace

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return SplitPartition{};

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Hammer-Simeone: m = max{i : d_i >= i - 1} (1-based), split iff
    // sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    std::size_t top = 0, rest = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m ? top : rest) += g.degree(order[i]);
    if (top != m * (m - 1) + rest) return std::nullopt;

    // With the equality above any degree-sorted top-m set is a clique with an
    // independent complement, and m is the clique number.
    VertexSet clique(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(clique.begin(), clique.end());
    VertexSet independent = complement_of(n, clique);
    SplitPartition best{clique, independent};

    // Other maximum-clique partitions differ from this one by swapping one
    // x in K for one y in I with N(y) = K - x and x independent of I - y.
    for (Vertex y : independent) {
        if (g.degree(y) + 1 != clique.size()) continue;
        for (Vertex x : clique) {
            if (g.adjacent(x, y)) continue;
            SplitPartition cand;
            cand.clique = clique;
            cand.clique.erase(std::find(cand.clique.begin(), cand.clique.end(), x));
            cand.clique.insert(std::lower_bound(cand.clique.begin(), cand.clique.end(), y), y);
            cand.independent = complement_of(n, cand.clique);
            if (is_split_partition(g, cand) && cand.clique < best.clique) best = std::move(cand);
        }
    }
    return best;
}

std::vector<SplitPartition> all_split_partitions(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 20) throw std::invalid_argument("all_split_partitions is limited to 20 vertices");
    std::vector<SplitPartition> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        SplitPartition p;
        for (Vertex v = 0; v < n; ++v) ((bits >> v) & 1U ? p.clique : p.independent).push_back(v);
        if (is_clique(g, p.clique) && is_independent(g, p.independent)) out.push_back(std::move(p));
    }
    return out;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<long> map;  // a-vertex -> b-vertex
    std::vector<bool> used;

    bool extend(Vertex v) {
        if (v == a.order()) return true;
        for (Vertex w = 0; w < b.order(); ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = a.adjacent(u, v) == b.adjacent(static_cast<Vertex>(map[u]), w);
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder)
        throw std::invalid_argument("is_isomorphic is limited to graphs with at most 10 vertices");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    IsoSearch s{a, b, std::vector<long>(a.order(), -1), std::vector<bool>(b.order(), false)};
    return s.extend(0);
}

namespace {

// Stable colour refinement with canonical colour names.
std::vector<int> refine_colours(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n);
    for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<int>(g.degree(v));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> names;
        for (const auto& s : sig) names.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : names) id = next++;
        for (Vertex v = 0; v < n; ++v) colour[v] = names[sig[v]];
        if (names.size() == classes) break;
        classes = names.size();
    }
    return colour;
}

struct CanonSearch {
    const Graph& g;
    std::vector<int> slot_colour;  // colour required at each position
    std::vector<int> colour;
    std::vector<Vertex> placed;
    std::vector<bool> used;
    std::vector<Vertex> best;
    bool have_best = false;

    // Compares the column-major upper-triangle codes (graph6 bit order) of
    // `placed` and `best` over the first `cols` positions. Bits of column p
    // are fixed once position p is filled, so prefixes compare cleanly.
    int compare_prefix(std::size_t cols) const {
        for (std::size_t j = 1; j < cols; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                bool x = g.adjacent(placed[i], placed[j]);
                bool y = g.adjacent(best[i], best[j]);
                if (x != y) return x ? 1 : -1;
            }
        return 0;
    }

    void run(std::size_t pos) {
        const std::size_t n = g.order();
        if (pos == n) {
            if (!have_best || compare_prefix(n) > 0) {
                best = placed;
                have_best = true;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || colour[v] != slot_colour[pos]) continue;
            placed.push_back(v);
            if (!have_best || compare_prefix(pos + 1) >= 0) {
                used[v] = true;
                run(pos + 1);
                used[v] = false;
            }
            placed.pop_back();
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxIsomorphismOrder + 2)
        throw std::invalid_argument("canonical_form is limited to graphs with at most 12 vertices");
    if (n == 0) return g;
    std::vector<int> colour = refine_colours(g);
    std::vector<int> slots = colour;
    std::sort(slots.begin(), slots.end());
    CanonSearch s{g, slots, colour, {}, std::vector<bool>(n, false), {}, false};
    s.run(0);
    Graph out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (g.adjacent(s.best[i], s.best[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const auto shift = static_cast<Vertex>(a.order());
    Graph out(a.order() + b.order());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(static_cast<Vertex>(n - 1), 0);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

VertexSet mask_to_set(VertexMask m) {
    VertexSet out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

VertexMask set_to_mask(const VertexSet& s) {
    VertexMask m = 0;
    for (Vertex v : s) {
        if (v >= kMaxMaskVertices) throw std::out_of_range("vertex exceeds 64-vertex mask");
        m |= VertexMask{1} << v;
    }
    return m;
}

}  // namespace romankit
