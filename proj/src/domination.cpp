#include "romankit/domination.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace romankit {

WeightFunction::WeightFunction(int k, std::vector<int> weights) : k_(k), weights_(std::move(weights)) {
    if (k_ < 1) throw std::invalid_argument("k must be at least 1");
    for (std::size_t v = 0; v < weights_.size(); ++v)
        if (weights_[v] < 0 || weights_[v] > k_)
            throw std::invalid_argument("weight " + std::to_string(weights_[v]) + " at vertex " + std::to_string(v) +
                                        " outside [0, " + std::to_string(k_) + "]");
}

int WeightFunction::weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

int WeightFunction::weight_of(const VertexSet& s) const {
    int total = 0;
    for (Vertex v : s) total += weights_.at(v);
    return total;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
    std::vector<bool> dominated(g.order(), false);
    for (Vertex v : d) {
        if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
        dominated[v] = true;
        for (Vertex w : g.neighbors(v)) dominated[w] = true;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

namespace {

VertexMask full_mask(std::size_t n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

std::vector<VertexMask> closed_masks(const Graph& g) {
    auto masks = g.adjacency_masks();
    for (std::size_t v = 0; v < masks.size(); ++v) masks[v] |= VertexMask{1} << v;
    return masks;
}

class DominationSearch {
public:
    explicit DominationSearch(const Graph& g) : closed_(closed_masks(g)), full_(full_mask(g.order())) {}

    int minimum(int upper) {
        best_ = upper;
        branch(0, 0);
        return best_;
    }

    // Lexicographically least dominating set of exactly `size` vertices.
    std::optional<VertexSet> least_of_size(int size) {
        VertexSet chosen;
        if (lex(0, 0, size, chosen)) return chosen;
        return std::nullopt;
    }

private:
    int max_cover(VertexMask undominated, VertexMask candidates) const {
        int best = 0;
        for (VertexMask c = candidates; c; c &= c - 1) {
            int v = std::countr_zero(c);
            best = std::max(best, std::popcount(closed_[v] & undominated));
        }
        return best;
    }

    void branch(VertexMask dominated, int size) {
        if (dominated == full_) {
            best_ = std::min(best_, size);
            return;
        }
        if (size + 1 >= best_) return;
        const VertexMask undominated = full_ & ~dominated;
        const int cover = max_cover(undominated, full_);
        const int need = (std::popcount(undominated) + cover - 1) / cover;
        if (size + need >= best_) return;

        // Branch on the undominated vertex with the fewest dominators.
        int pivot = -1, fewest = 65;
        for (VertexMask u = undominated; u; u &= u - 1) {
            int v = std::countr_zero(u);
            int c = std::popcount(closed_[v]);
            if (c < fewest) {
                fewest = c;
                pivot = v;
            }
        }
        std::vector<int> cands;
        for (VertexMask c = closed_[pivot]; c; c &= c - 1) cands.push_back(std::countr_zero(c));
        std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
            return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
        });
        for (int c : cands) branch(dominated | closed_[c], size + 1);
    }

    bool lex(VertexMask dominated, int start, int remaining, VertexSet& chosen) const {
        if (dominated == full_) return remaining == 0 || pad(chosen, start, remaining);
        if (remaining == 0 || start >= static_cast<int>(closed_.size())) return false;
        const VertexMask undominated = full_ & ~dominated;
        const VertexMask allowed = full_ & ~((VertexMask{1} << start) - 1);
        for (VertexMask u = undominated; u; u &= u - 1)
            if (!(closed_[std::countr_zero(u)] & allowed)) return false;
        const int cover = max_cover(undominated, allowed);
        if (remaining * cover < std::popcount(undominated)) return false;

        const int first = std::countr_zero(undominated);
        const int last = 63 - std::countl_zero(closed_[first]);
        for (int c = start; c <= last; ++c) {
            chosen.push_back(static_cast<Vertex>(c));
            if (lex(dominated | closed_[c], c + 1, remaining - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    // A dominating set found early is padded with the smallest unused
    // indices. Only reachable when asked for a size above the minimum.
    bool pad(VertexSet& chosen, int start, int remaining) const {
        for (int c = start; c < static_cast<int>(closed_.size()) && remaining > 0; ++c, --remaining)
            chosen.push_back(static_cast<Vertex>(c));
        return remaining == 0;
    }

    std::vector<VertexMask> closed_;
    VertexMask full_;
    int best_ = 0;
};

class RomanSearch {
public:
    RomanSearch(const Graph& g, int k)
        : g_(g), k_(k), n_(g.order()), w_(n_, 0), sum_(n_, 0), open_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) open_[v] = static_cast<int>(g.degree(v));
    }

    std::optional<WeightFunction> run(int budget) {
        if (budget < 0) return std::nullopt;
        if (dfs(0, budget)) return WeightFunction(k_, w_);
        return std::nullopt;
    }

private:
    bool dfs(Vertex i, int remaining) {
        if (i == n_) return true;
        const int top = std::min(k_, remaining);
        for (int x = 0; x <= top; ++x) {
            w_[i] = x;
            for (Vertex nb : g_.neighbors(i)) {
                sum_[nb] += x;
                --open_[nb];
            }
            const bool ok = feasible(i, remaining - x) && dfs(i + 1, remaining - x);
            for (Vertex nb : g_.neighbors(i)) {
                sum_[nb] -= x;
                ++open_[nb];
            }
            if (ok) return true;
        }
        w_[i] = 0;
        return false;
    }

    // Every assigned zero vertex must still be able to collect k from its
    // unassigned neighbours within the remaining budget.
    bool feasible(Vertex i, int remaining) const {
        for (Vertex v = 0; v <= i; ++v) {
            if (w_[v] != 0 || sum_[v] >= k_) continue;
            if (open_[v] == 0) return false;
            if (sum_[v] + std::min(remaining, k_ * open_[v]) < k_) return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    std::size_t n_;
    std::vector<int> w_;
    std::vector<int> sum_;
    std::vector<int> open_;
};

void require_split_without_isolated(const Graph& g, const SplitPartition& p) {
    if (!is_split_partition(g, p)) throw std::invalid_argument("invalid split partition");
    if (has_isolated_vertex(g)) throw std::invalid_argument("graph has an isolated vertex");
}

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
    const auto closed = closed_masks(g);
    const VertexMask full = full_mask(g.order());
    VertexMask dominated = 0;
    VertexSet out;
    while (dominated != full) {
        int best = -1, gain = -1;
        for (std::size_t v = 0; v < closed.size(); ++v) {
            int c = std::popcount(closed[v] & ~dominated);
            if (c > gain) {
                gain = c;
                best = static_cast<int>(v);
            }
        }
        out.push_back(static_cast<Vertex>(best));
        dominated |= closed[best];
    }
    std::sort(out.begin(), out.end());
    return out;
}

DominationCertificate gamma(const Graph& g) {
    if (g.order() == 0) return {};
    DominationSearch search(g);
    const int upper = static_cast<int>(greedy_dominating_set(g).size());
    const int value = search.minimum(upper);
    auto witness = search.least_of_size(value);
    if (!witness) throw std::logic_error("dominating set search lost its witness");
    return {value, *witness};
}

bool is_krdf(const Graph& g, const WeightFunction& f) {
    if (f.size() != g.order())
        throw std::invalid_argument("weight function has " + std::to_string(f.size()) + " entries, graph has " +
                                    std::to_string(g.order()) + " vertices");
    for (Vertex v = 0; v < g.order(); ++v)
        if (f[v] == 0 && f.weight_of(g.neighbors(v)) < f.k()) return false;
    return true;
}

std::optional<WeightFunction> find_krdf_within(const Graph& g, int k, int budget) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return RomanSearch(g, k).run(budget);
}

RomanCertificate gamma_rk(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    // gamma(g) <= gamma_rk(g) <= min(k * gamma(g), n)
    const int lower = gamma(g).gamma;
    for (int budget = lower;; ++budget) {
        if (auto f = RomanSearch(g, k).run(budget)) return {k, budget, *f};
    }
}

bool is_k_roman(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("the {k}-Roman property is defined for k >= 2");
    const int dom = gamma(g).gamma;
    return !RomanSearch(g, k).run(k * dom - 1).has_value();
}

VertexSet bertossi_dominating_set(const Graph& g, const SplitPartition& p) {
    require_split_without_isolated(g, p);
    VertexSet d = gamma(g).witness;
    // An I-vertex v can be traded for any clique neighbour u, since
    // N[v] is contained in N[u].
    for (Vertex& v : d) {
        if (std::binary_search(p.clique.begin(), p.clique.end(), v)) continue;
        const auto& nb = g.neighbors(v);
        v = nb.front();
    }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

WeightFunction normalized_gamma_r2(const Graph& g, const SplitPartition& p) {
    require_split_without_isolated(g, p);
    const RomanCertificate cert = gamma_rk(g, 2);
    std::vector<int> f = cert.witness.weights();
    auto in_clique = [&](Vertex v) { return std::binary_search(p.clique.begin(), p.clique.end(), v); };

    // Move weight from I onto a clique vertex that sees 2 or more of it.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex u : p.clique) {
            int on_i = 0;
            for (Vertex w : g.neighbors(u))
                if (!in_clique(w)) on_i += f[w];
            if (on_i < 2) continue;
            for (Vertex w : g.neighbors(u))
                if (!in_clique(w)) f[w] = 0;
            f[u] = 2;
            changed = true;
        }
    }

    int on_k = 0;
    for (Vertex u : p.clique) on_k += f[u];
    if (on_k <= 1) {
        // Here every I-vertex carries 1 and exactly one clique vertex does.
        if (p.independent.empty()) throw std::logic_error("clique-only graph with f(K) <= 1");
        const Vertex v = p.independent.front();
        const Vertex target = g.neighbors(v).front();
        for (Vertex u : p.clique)
            if (f[u] == 1 && u != target) f[u] = 0;
        f[target] = 2;
        f[v] = 0;
    }

    WeightFunction out(2, std::move(f));
    if (out.weight() != cert.gamma_rk || !is_krdf(g, out))
        throw std::logic_error("normalisation changed the optimum");
    return out;
}

}  // namespace romankit
