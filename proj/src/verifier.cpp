#include "romankit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "romankit/constructions.hpp"
#include "romankit/domination.hpp"
#include "romankit/enumerate.hpp"
#include "romankit/io.hpp"

namespace romankit::verify {

void to_json(json& j, const Budget& b) {
    j = json{{"max_n", b.max_n},
             {"max_t", b.max_t},
             {"max_k", b.max_k},
             {"hyper_max_v", b.hyper_max_v},
             {"hyper_max_e", b.hyper_max_e},
             {"random_hypergraphs", b.random_hypergraphs},
             {"random_max_v", b.random_max_v},
             {"random_max_e", b.random_max_e},
             {"factor_max_n", b.factor_max_n},
             {"reduction_instances", b.reduction_instances},
             {"seed", b.seed}};
}

void from_json(const json& j, Budget& b) {
    b.max_n = j.at("max_n").get<int>();
    b.max_t = j.at("max_t").get<int>();
    b.max_k = j.at("max_k").get<int>();
    b.hyper_max_v = j.at("hyper_max_v").get<int>();
    b.hyper_max_e = j.at("hyper_max_e").get<int>();
    b.random_hypergraphs = j.at("random_hypergraphs").get<int>();
    b.random_max_v = j.at("random_max_v").get<int>();
    b.random_max_e = j.at("random_max_e").get<int>();
    b.factor_max_n = j.at("factor_max_n").get<int>();
    b.reduction_instances = j.at("reduction_instances").get<int>();
    b.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(json& j, const Counterexample& c) {
    j = json{{"instance", c.instance}, {"property", c.property}, {"observed", c.observed}, {"expected", c.expected}};
}

void from_json(const json& j, Counterexample& c) {
    c = Counterexample{j.at("instance"), j.at("property").get<std::string>(), j.at("observed"), j.at("expected")};
}

void to_json(json& j, const VerificationReport& r) {
    j = json{{"suite", r.suite}, {"budget", r.budget}, {"checked", r.checked}, {"status", r.passed ? "pass" : "fail"}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
}

void from_json(const json& j, VerificationReport& r) {
    r.suite = j.at("suite").get<std::string>();
    r.budget = j.at("budget").get<Budget>();
    r.checked = j.at("checked").get<std::size_t>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("bad report status '" + status + "'");
    r.passed = status == "pass";
    r.counterexample.reset();
    if (j.contains("counterexample")) r.counterexample = j.at("counterexample").get<Counterexample>();
    if (r.passed == r.counterexample.has_value())
        throw std::invalid_argument("report status disagrees with counterexample presence");
}

Solvers Solvers::exact() {
    return {
        [](const Graph& g) { return romankit::gamma(g).gamma; },
        [](const Graph& g, int k) { return romankit::gamma_rk(g, k).gamma_rk; },
        [](const Graph& g, int k) { return romankit::is_k_roman(g, k); },
        [](const Hypergraph& h) { return romankit::perfect_matching(h).has_value(); },
        [](const Hypergraph& h) { return romankit::edge_cover_number(h); },
    };
}

namespace {

using Check = std::optional<Counterexample>;

Check fail(const json& instance, std::string property, json observed, json expected) {
    return Counterexample{instance, std::move(property), std::move(observed), std::move(expected)};
}

// instance encodings

json graph_json(const Graph& g) { return json{{"graph6", to_graph6(g)}}; }

Graph graph_of(const json& j) { return from_graph6(j.at("graph6").get<std::string>()); }

json split_json(const SplitLabeledGraph& s) {
    return json{{"graph6", to_graph6(s.graph)}, {"clique", s.partition.clique}};
}

SplitLabeledGraph split_of(const json& j) {
    Graph g = graph_of(j);
    SplitPartition p;
    p.clique = j.at("clique").get<VertexSet>();
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(p.clique.begin(), p.clique.end(), v)) p.independent.push_back(v);
    return SplitLabeledGraph::make(std::move(g), std::move(p));
}

json hyper_json(const Hypergraph& h) { return json{{"hypergraph", to_hypergraph_text(h)}}; }

Hypergraph hyper_of(const json& j) {
    std::istringstream in(j.at("hypergraph").get<std::string>());
    return read_hypergraph(in);
}

// instance families

std::vector<Graph> graphs_upto(int max_n, int min_n = 0) {
    std::vector<Graph> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& g : enumerate_graphs(static_cast<std::size_t>(n), true)) out.push_back(std::move(g));
    return out;
}

std::vector<SplitLabeledGraph> split_graphs_upto(int max_n, int min_n = 1) {
    std::vector<SplitLabeledGraph> out;
    for (const Graph& g : graphs_upto(max_n, min_n))
        for (auto& p : all_split_partitions(g)) out.push_back({g, std::move(p)});
    return out;
}

bool no_isolated(const SplitLabeledGraph& s) { return !has_isolated_vertex(s.graph); }

struct Construction {
    std::string name;
    Graph graph;
};

// The two extreme strongly compatible graphs plus a seeded one in between.
std::vector<Construction> strongly_compatible_family(const Hypergraph& h, std::uint64_t seed) {
    return {{"minimal", strongly_compatible_minimal(h)},
            {"split", compatible_split(h).first},
            {"intermediate", strongly_compatible_random(h, seed)}};
}

std::vector<Hypergraph> uniform_family(const Budget& b, int k, bool require_cover) {
    std::vector<Hypergraph> out;
    for (int v = std::max(k, 1); v <= b.hyper_max_v; ++v)
        for (auto& h : enumerate_hypergraphs(static_cast<std::size_t>(v), {static_cast<std::size_t>(k)},
                                             static_cast<std::size_t>(b.hyper_max_e)))
            if (!require_cover || !has_isolated_vertex(h)) out.push_back(std::move(h));
    std::mt19937_64 rng(b.seed * 7919 + static_cast<std::uint64_t>(k));
    const int lo = std::max(k, 1);
    for (int i = 0; i < b.random_hypergraphs && b.random_max_v >= lo; ++i) {
        const auto v = static_cast<std::size_t>(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(b.random_max_v - lo + 1)));
        out.push_back(random_uniform_hypergraph(rng, v, static_cast<std::size_t>(k),
                                                static_cast<std::size_t>(b.random_max_e), rng() & 1U));
    }
    return out;
}

std::vector<json> hyper_instances(const Budget& b, int k_from, bool require_cover) {
    std::vector<json> out;
    for (int k = k_from; k <= b.max_k; ++k)
        for (const auto& h : uniform_family(b, k, require_cover)) {
            json j = hyper_json(h);
            j["k"] = k;
            j["seed"] = b.seed * 1000003 + out.size();
            out.push_back(std::move(j));
        }
    return out;
}

std::uint64_t seed_of(const json& j) { return j.at("seed").get<std::uint64_t>(); }
int k_of(const json& j) { return j.at("k").get<int>(); }

json pair_json(const SplitLabeledGraph& a, const SplitLabeledGraph& b) {
    return json{{"a", split_json(a)}, {"b", split_json(b)}};
}

std::vector<json> pairs_of(const std::vector<SplitLabeledGraph>& fs) {
    std::vector<json> out;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i; j < fs.size(); ++j) out.push_back(pair_json(fs[i], fs[j]));
    return out;
}

// suites

std::vector<json> gen_graph_k(const Budget& b, int k_from, int k_to) {
    std::vector<json> out;
    for (const Graph& g : graphs_upto(b.max_n))
        for (int k = k_from; k <= k_to; ++k) {
            json j = graph_json(g);
            j["k"] = k;
            out.push_back(std::move(j));
        }
    return out;
}

Check check_sandwich(const json& in, const Solvers& s) {
    const Graph g = graph_of(in);
    const int k = k_of(in);
    const int dom = s.gamma(g);
    const int rk = s.gamma_rk(g, k);
    if (rk < dom || rk > k * dom)
        return fail(in, "gamma <= gamma_rk <= k*gamma", json{{"gamma", dom}, {"gamma_rk", rk}},
                    json{{"gamma_rk_min", dom}, {"gamma_rk_max", k * dom}});
    if (rk > static_cast<int>(g.order()))
        return fail(in, "gamma_rk <= n", json{{"gamma_rk", rk}}, json{{"gamma_rk_max", g.order()}});
    if (k == 1 && rk != dom) return fail(in, "gamma_r1 == gamma", json{{"gamma_r1", rk}}, json{{"gamma_r1", dom}});
    return std::nullopt;
}

Check check_monotonicity(const json& in, const Solvers& s) {
    const Graph g = graph_of(in);
    const int k = k_of(in);
    const bool upper = s.is_k_roman(g, k + 1);
    const bool lower = s.is_k_roman(g, k);
    if (upper && !lower)
        return fail(in, "{k+1}-Roman implies {k}-Roman",
                    json{{"k_plus_1_roman", upper}, {"k_roman", lower}}, json{{"k_roman", true}});
    return std::nullopt;
}

Check check_compatible_gammark(const json& in, const Solvers& s) {
    const Hypergraph h = hyper_of(in);
    const int k = k_of(in);
    for (const auto& c : strongly_compatible_family(h, seed_of(in))) {
        const int rk = s.gamma_rk(c.graph, k);
        if (rk != static_cast<int>(h.order()))
            return fail(in, "gamma_rk(G) == |V| for the " + c.name + " compatible graph", json{{"gamma_rk", rk}},
                        json{{"gamma_rk", h.order()}});
    }
    // the bipartite incidence graph is compatible too
    const int inc = s.gamma_rk(incidence_graph(h), k);
    if (inc != static_cast<int>(h.order()))
        return fail(in, "gamma_rk(G) == |V| for the incidence graph", json{{"gamma_rk", inc}},
                    json{{"gamma_rk", h.order()}});
    return std::nullopt;
}

std::vector<json> gen_edge_cover(const Budget& b) {
    std::vector<json> out = hyper_instances(b, 1, true);
    // mixed edge sizes on few vertices
    for (int v = 1; v <= std::min(4, b.hyper_max_v); ++v) {
        std::vector<std::size_t> sizes;
        for (int s = 1; s <= v; ++s) sizes.push_back(static_cast<std::size_t>(s));
        for (const auto& h : enumerate_hypergraphs(static_cast<std::size_t>(v), sizes,
                                                   static_cast<std::size_t>(b.hyper_max_e))) {
            if (has_isolated_vertex(h) || is_k_uniform(h, h.edge(0).size())) continue;
            json j = hyper_json(h);
            j["seed"] = b.seed * 1000003 + out.size();
            out.push_back(std::move(j));
        }
    }
    return out;
}

Check check_edge_cover(const json& in, const Solvers& s) {
    const Hypergraph h = hyper_of(in);
    const int rho = s.edge_cover_number(h);
    for (const auto& c : strongly_compatible_family(h, seed_of(in))) {
        const int dom = s.gamma(c.graph);
        if (dom != rho)
            return fail(in, "gamma(G) == rho(H) for the " + c.name + " strongly compatible graph",
                        json{{"gamma", dom}}, json{{"gamma", rho}});
    }
    return std::nullopt;
}

Check check_pm_equivalence(const json& in, const Solvers& s) {
    const Hypergraph h = hyper_of(in);
    const int k = k_of(in);
    const bool pm = s.has_perfect_matching(h);
    const auto v = static_cast<int>(h.order());
    for (const auto& c : strongly_compatible_family(h, seed_of(in))) {
        const int dom = s.gamma(c.graph);
        const bool eq = dom * k == v;
        const bool le = dom * k <= v;
        if (pm != eq || eq != le)
            return fail(in, "perfect matching <=> gamma == |V|/k <=> gamma <= |V|/k (" + c.name + ")",
                        json{{"perfect_matching", pm}, {"gamma_eq", eq}, {"gamma_le", le}, {"gamma", dom}},
                        json{{"all_equal", true}});
    }
    return std::nullopt;
}

Check check_k_roman_iff_pm(const json& in, const Solvers& s) {
    const Hypergraph h = hyper_of(in);
    const int k = k_of(in);
    const bool pm = s.has_perfect_matching(h);
    for (const auto& c : strongly_compatible_family(h, seed_of(in))) {
        const bool roman = s.is_k_roman(c.graph, k);
        if (roman != pm)
            return fail(in, "{k}-Roman <=> perfect matching (" + c.name + ")", json{{"k_roman", roman}},
                        json{{"k_roman", pm}});
    }
    return std::nullopt;
}

std::vector<json> gen_middle(const Budget& b) {
    std::vector<json> out;
    for (const Graph& g : graphs_upto(b.max_n, 2))
        if (!has_isolated_vertex(g)) out.push_back(graph_json(g));
    return out;
}

Check check_middle(const json& in, const Solvers& s) {
    const Graph g = graph_of(in);
    const Graph m = middle_graph(g);
    const Hypergraph h = Hypergraph::from_graph(g);
    const int r2 = s.gamma_rk(m, 2);
    if (r2 != static_cast<int>(g.order()))
        return fail(in, "gamma_r2(M(G)) == n", json{{"gamma_r2", r2}}, json{{"gamma_r2", g.order()}});
    const int dom = s.gamma(m);
    const int rho = s.edge_cover_number(h);
    if (dom != rho) return fail(in, "gamma(M(G)) == rho(G)", json{{"gamma", dom}}, json{{"gamma", rho}});
    const bool roman = s.is_k_roman(m, 2);
    const bool pm = s.has_perfect_matching(h);
    if (roman != pm)
        return fail(in, "M(G) {2}-Roman <=> G has a perfect matching", json{{"two_roman", roman}},
                    json{{"two_roman", pm}});
    return std::nullopt;
}

std::vector<json> gen_split_nonisolated(const Budget& b) {
    std::vector<json> out;
    for (const auto& sg : split_graphs_upto(b.max_n))
        if (no_isolated(sg)) out.push_back(split_json(sg));
    return out;
}

bool in_set(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

Check check_weight_to_clique(const json& in, const Solvers& s) {
    const SplitLabeledGraph sg = split_of(in);
    const auto& [g, p] = sg;
    const WeightFunction f = normalized_gamma_r2(g, p);
    const int opt = s.gamma_rk(g, 2);
    if (!is_krdf(g, f) || f.weight() != opt)
        return fail(in, "normalised function is an optimal {2}-Roman function",
                    json{{"weight", f.weight()}, {"valid", is_krdf(g, f)}}, json{{"weight", opt}, {"valid", true}});
    if (f.weight_of(p.clique) < 2)
        return fail(in, "f(K) >= 2", json{{"f_K", f.weight_of(p.clique)}}, json{{"f_K_min", 2}});
    for (Vertex u : p.clique) {
        int on_i = 0;
        for (Vertex w : g.neighbors(u))
            if (in_set(p.independent, w)) on_i += f[w];
        if (on_i > 1)
            return fail(in, "f(N(u) & I) <= 1", json{{"u", u}, {"f_N_u_I", on_i}}, json{{"f_N_u_I_max", 1}});
    }
    return std::nullopt;
}

std::vector<json> gen_one_i_neighbor(const Budget& b) {
    std::vector<json> out;
    for (const auto& sg : split_graphs_upto(b.max_n)) {
        if (!no_isolated(sg)) continue;
        bool ok = true;
        for (Vertex u : sg.partition.clique) {
            int c = 0;
            for (Vertex w : sg.graph.neighbors(u)) c += in_set(sg.partition.independent, w);
            ok = ok && c <= 1;
        }
        if (ok) out.push_back(split_json(sg));
    }
    return out;
}

Check check_one_i_neighbor(const json& in, const Solvers& s) {
    const SplitLabeledGraph sg = split_of(in);
    const bool roman = s.is_k_roman(sg.graph, 2);
    const bool expect = sg.partition.independent.size() <= 1;
    if (roman != expect)
        return fail(in, "{2}-Roman <=> |I| <= 1", json{{"two_roman", roman}}, json{{"two_roman", expect}});
    return std::nullopt;
}

Check check_bertossi(const json& in, const Solvers& s) {
    const SplitLabeledGraph sg = split_of(in);
    const auto& [g, p] = sg;
    const VertexSet d = bertossi_dominating_set(g, p);
    const int dom = s.gamma(g);
    const bool inside = std::all_of(d.begin(), d.end(), [&](Vertex v) { return in_set(p.clique, v); });
    if (!inside || !is_dominating_set(g, d) || static_cast<int>(d.size()) != dom)
        return fail(in, "minimum dominating set inside K",
                    json{{"set", d}, {"inside_K", inside}, {"dominating", is_dominating_set(g, d)}},
                    json{{"size", dom}, {"inside_K", true}, {"dominating", true}});
    // independent route: the smallest dominating subset of K by exhaustion
    int best = static_cast<int>(p.clique.size()) + 1;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << p.clique.size()); ++bits) {
        VertexSet c;
        for (std::size_t i = 0; i < p.clique.size(); ++i)
            if ((bits >> i) & 1U) c.push_back(p.clique[i]);
        if (static_cast<int>(c.size()) < best && is_dominating_set(g, c)) best = static_cast<int>(c.size());
    }
    if (best != dom) return fail(in, "min dominating subset of K == gamma", json{{"min_in_K", best}}, json{{"gamma", dom}});
    return std::nullopt;
}

SplitLabeledGraph split_from_parts(std::size_t n, const std::vector<Edge>& edges, VertexSet clique) {
    Graph g = Graph::from_edges(n, edges);
    SplitPartition p{std::move(clique), {}};
    for (Vertex v = 0; v < n; ++v)
        if (!in_set(p.clique, v)) p.independent.push_back(v);
    return SplitLabeledGraph::make(std::move(g), std::move(p));
}

std::vector<json> gen_join_additivity(const Budget& b) {
    std::vector<SplitLabeledGraph> fs;
    for (auto& sg : split_graphs_upto(b.factor_max_n))
        if (no_isolated(sg) && !sg.partition.independent.empty()) fs.push_back(std::move(sg));
    std::vector<json> out = pairs_of(fs);
    // the two hypotheses are both needed
    json first = pair_json(split_from_parts(2, {}, {0}), split_from_parts(2, {}, {0}));
    first["join_gamma"] = 3;
    first["factor_gamma_sum"] = 4;
    json second = pair_json(split_from_parts(2, {{0, 1}}, {0, 1}), split_from_parts(2, {{0, 1}}, {0}));
    second["join_gamma"] = 1;
    second["factor_gamma_sum"] = 2;
    out.push_back(std::move(first));
    out.push_back(std::move(second));
    return out;
}

Check check_join_additivity(const json& in, const Solvers& s) {
    const auto a = split_of(in.at("a"));
    const auto b = split_of(in.at("b"));
    const int joined = s.gamma(split_join(a, b).graph);
    const int sum = s.gamma(a.graph) + s.gamma(b.graph);
    if (in.contains("join_gamma")) {
        const int want_join = in.at("join_gamma").get<int>();
        const int want_sum = in.at("factor_gamma_sum").get<int>();
        if (joined != want_join || sum != want_sum)
            return fail(in, "hypothesis counterexample reproduces", json{{"join_gamma", joined}, {"factor_gamma_sum", sum}},
                        json{{"join_gamma", want_join}, {"factor_gamma_sum", want_sum}});
        return std::nullopt;
    }
    if (joined != sum)
        return fail(in, "gamma(S(G1,G2)) == gamma(G1) + gamma(G2)", json{{"join_gamma", joined}},
                    json{{"join_gamma", sum}});
    return std::nullopt;
}

std::vector<SplitLabeledGraph> nonisolated_factors(const Budget& b) {
    std::vector<SplitLabeledGraph> fs;
    for (auto& sg : split_graphs_upto(b.factor_max_n))
        if (no_isolated(sg)) fs.push_back(std::move(sg));
    return fs;
}

std::vector<json> gen_join_forward(const Budget& b) { return pairs_of(nonisolated_factors(b)); }

Check check_join_forward(const json& in, const Solvers& s) {
    const auto a = split_of(in.at("a"));
    const auto b = split_of(in.at("b"));
    const bool joined = s.is_k_roman(split_join(a, b).graph, 2);
    const bool ra = s.is_k_roman(a.graph, 2);
    const bool rb = s.is_k_roman(b.graph, 2);
    if (joined && !(ra && rb))
        return fail(in, "S(G1,G2) {2}-Roman implies both factors {2}-Roman",
                    json{{"join", joined}, {"a", ra}, {"b", rb}}, json{{"a", true}, {"b", true}});
    return std::nullopt;
}

std::vector<json> gen_join_characterization(const Budget& b) {
    std::vector<SplitLabeledGraph> fs;
    for (auto& sg : nonisolated_factors(b))
        if (is_k_roman(sg.graph, 2)) fs.push_back(std::move(sg));
    return pairs_of(fs);
}

Check check_join_characterization(const json& in, const Solvers& s) {
    const auto a = split_of(in.at("a"));
    const auto b = split_of(in.at("b"));
    const std::size_t ia = a.partition.independent.size();
    const std::size_t ib = b.partition.independent.size();
    const bool expect = ia == 0 || ib == 0 || (ia >= 2 && ib >= 2);
    const bool joined = s.is_k_roman(split_join(a, b).graph, 2);
    if (joined != expect)
        return fail(in, "S(G1,G2) {2}-Roman <=> an I side is empty or both have >= 2 vertices",
                    json{{"join", joined}}, json{{"join", expect}});
    return std::nullopt;
}

std::vector<json> gen_single_vertex_join(const Budget& b) {
    const auto in_k = split_from_parts(1, {}, {0});
    const auto in_i = split_from_parts(1, {}, {});
    std::vector<SplitLabeledGraph> others = nonisolated_factors(b);
    others.push_back(in_k);
    others.push_back(in_i);
    std::vector<json> out;
    for (const auto& single : {in_k, in_i})
        for (const auto& other : others) out.push_back(pair_json(single, other));
    return out;
}

Check check_single_vertex_join(const json& in, const Solvers& s) {
    const auto a = split_of(in.at("a"));
    const auto b = split_of(in.at("b"));
    const bool single_k = b.graph.order() == 1 && b.partition.clique.size() == 1;
    const bool expect = a.partition.independent.empty() && (single_k || s.is_k_roman(b.graph, 2));
    const bool joined = s.is_k_roman(split_join(a, b).graph, 2);
    if (joined != expect)
        return fail(in, "S(K1,G2) {2}-Roman <=> I1 empty and (G2 = K-vertex or G2 {2}-Roman)", json{{"join", joined}},
                    json{{"join", expect}});
    return std::nullopt;
}

std::vector<json> gen_clique_join(const Budget& b) {
    std::vector<json> out;
    const auto others = nonisolated_factors(b);
    for (int m = 1; m <= b.factor_max_n; ++m) {
        VertexSet all;
        for (Vertex v = 0; v < static_cast<Vertex>(m); ++v) all.push_back(v);
        const SplitLabeledGraph clique{complete_graph(static_cast<std::size_t>(m)), {all, {}}};
        for (const auto& other : others) out.push_back(pair_json(clique, other));
    }
    return out;
}

Check check_clique_join(const json& in, const Solvers& s) {
    const auto a = split_of(in.at("a"));
    const auto b = split_of(in.at("b"));
    const bool joined = s.is_k_roman(split_join(a, b).graph, 2);
    const bool rb = s.is_k_roman(b.graph, 2);
    if (joined != rb)
        return fail(in, "S(K_m, G2) {2}-Roman <=> G2 {2}-Roman", json{{"join", joined}}, json{{"join", rb}});
    return std::nullopt;
}

std::vector<json> gen_t(int from, int to) {
    std::vector<json> out;
    for (int t = from; t <= to; ++t) out.push_back(json{{"t", t}});
    return out;
}

int t_of(const json& j) { return j.at("t").get<int>(); }

Check check_suns(const json& in, const Solvers& s) {
    const int t = t_of(in);
    const auto sg = sun(t);
    const bool two = s.is_k_roman(sg.graph, 2);
    if (two != (t % 2 == 0))
        return fail(in, "S_t {2}-Roman <=> t even", json{{"two_roman", two}}, json{{"two_roman", t % 2 == 0}});
    const bool three = s.is_k_roman(sg.graph, 3);
    if (three) return fail(in, "S_t is not {3}-Roman", json{{"three_roman", true}}, json{{"three_roman", false}});
    const int dom = s.gamma(sg.graph);
    if (dom != (t + 1) / 2) return fail(in, "gamma(S_t) == ceil(t/2)", json{{"gamma", dom}}, json{{"gamma", (t + 1) / 2}});
    if (!is_strongly_compatible(sg.graph, cycle_hypergraph(static_cast<std::size_t>(t)), sun_cycle_labeling(t)))
        return fail(in, "S_t strongly compatible with C_t", json{{"strongly_compatible", false}},
                    json{{"strongly_compatible", true}});
    if (!split_join_decompose(sg).prime())
        return fail(in, "S_t is prime for the split join", json{{"prime", false}}, json{{"prime", true}});
    return std::nullopt;
}

Check check_co_suns(const json& in, const Solvers& s) {
    const int t = t_of(in);
    const auto cs = co_sun(t);
    const bool expect = t == 4 || t == 5;
    const bool two = s.is_k_roman(cs.graph, 2);
    if (two != expect)
        return fail(in, "co-S_t {2}-Roman <=> t in {4,5}", json{{"two_roman", two}}, json{{"two_roman", expect}});
    if (s.is_k_roman(cs.graph, 3))
        return fail(in, "co-S_t is not {3}-Roman", json{{"three_roman", true}}, json{{"three_roman", false}});
    if (!is_strongly_compatible(cs.graph, co_sun_hypergraph(t), co_sun_labeling(t)))
        return fail(in, "co-S_t strongly compatible with its (t-2)-uniform hypergraph",
                    json{{"strongly_compatible", false}}, json{{"strongly_compatible", true}});
    if (t == 4 && !is_isomorphic(cs.graph, sun(4).graph))
        return fail(in, "co-S_4 isomorphic to S_4", json{{"isomorphic", false}}, json{{"isomorphic", true}});
    if (t == 3) {
        const int dom = s.gamma(cs.graph);
        const int r2 = s.gamma_rk(cs.graph, 2);
        if (dom != 3 || r2 != 4)
            return fail(in, "gamma(co-S_3) == 3 and gamma_r2(co-S_3) == 4", json{{"gamma", dom}, {"gamma_r2", r2}},
                        json{{"gamma", 3}, {"gamma_r2", 4}});
    }
    return std::nullopt;
}

Check check_cosun_gamma(const json& in, const Solvers& s) {
    const int dom = s.gamma(co_sun(t_of(in)).graph);
    if (dom != 2) return fail(in, "gamma(co-S_t) == 2", json{{"gamma", dom}}, json{{"gamma", 2}});
    return std::nullopt;
}

std::vector<json> gen_reduction(const Budget& b) {
    std::mt19937_64 rng(b.seed);
    std::vector<json> out;
    const int top = std::max(3, b.random_max_v);
    for (int i = 0; i < b.reduction_instances; ++i) {
        const auto v = static_cast<std::size_t>(3 + static_cast<int>(rng() % static_cast<std::uint64_t>(top - 2)));
        const bool plant = rng() & 1U;
        json j = hyper_json(random_uniform_hypergraph(rng, v, 3, static_cast<std::size_t>(b.random_max_e), plant));
        j["k"] = 3;
        out.push_back(std::move(j));
    }
    return out;
}

Check check_reduction(const json& in, const Solvers& s) {
    const Hypergraph h = hyper_of(in);
    const int k = k_of(in);
    const auto red = exact_cover_reduction(h, k);
    if (!is_split_partition(red.graph, red.partition))
        return fail(in, "reduction yields a split graph", json{{"split", false}}, json{{"split", true}});
    const bool roman = s.is_k_roman(red.graph, k);
    const bool pm = s.has_perfect_matching(h);
    if (roman != pm)
        return fail(in, "reduction {k}-Roman <=> perfect matching", json{{"k_roman", roman}}, json{{"k_roman", pm}});
    return std::nullopt;
}

struct Suite {
    std::function<std::vector<json>(const Budget&)> generate;
    std::function<Check(const json&, const Solvers&)> check;
};

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> suites{
        {"sandwich", {[](const Budget& b) { return gen_graph_k(b, 1, b.max_k); }, check_sandwich}},
        {"monotonicity", {[](const Budget& b) { return gen_graph_k(b, 2, b.max_k); }, check_monotonicity}},
        {"compatible-gammark", {[](const Budget& b) { return hyper_instances(b, 1, false); }, check_compatible_gammark}},
        {"edge-cover", {gen_edge_cover, check_edge_cover}},
        {"pm-equivalence", {[](const Budget& b) { return hyper_instances(b, 1, true); }, check_pm_equivalence}},
        {"k-roman-iff-pm", {[](const Budget& b) { return hyper_instances(b, 2, true); }, check_k_roman_iff_pm}},
        {"middle-italian", {gen_middle, check_middle}},
        {"weight-to-clique", {gen_split_nonisolated, check_weight_to_clique}},
        {"one-I-neighbor", {gen_one_i_neighbor, check_one_i_neighbor}},
        {"bertossi", {gen_split_nonisolated, check_bertossi}},
        {"join-additivity", {gen_join_additivity, check_join_additivity}},
        {"join-forward", {gen_join_forward, check_join_forward}},
        {"single-vertex-join", {gen_single_vertex_join, check_single_vertex_join}},
        {"clique-join", {gen_clique_join, check_clique_join}},
        {"join-characterization", {gen_join_characterization, check_join_characterization}},
        {"suns", {[](const Budget& b) { return gen_t(3, b.max_t); }, check_suns}},
        {"co-suns", {[](const Budget& b) { return gen_t(3, b.max_t); }, check_co_suns}},
        {"cosun-gamma", {[](const Budget& b) { return gen_t(5, b.max_t); }, check_cosun_gamma}},
        {"reduction-soundness", {gen_reduction, check_reduction}},
    };
    return suites;
}

const Suite& lookup(const std::string& name) {
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

void validate(const Budget& b) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("budget exceeded: ") + what);
    };
    require(b.max_n >= 0 && b.max_n <= static_cast<int>(kMaxDedupOrder), "max_n must lie in [0, 8]");
    require(b.max_t >= 3 && b.max_t <= 16, "max_t must lie in [3, 16]");
    require(b.max_k >= 1 && b.max_k <= 4, "max_k must lie in [1, 4]");
    require(b.hyper_max_v >= 0 && b.hyper_max_v <= 7, "hyper_max_v must lie in [0, 7]");
    require(b.hyper_max_e >= 0 && b.hyper_max_e <= 12, "hyper_max_e must lie in [0, 12]");
    require(b.random_hypergraphs >= 0 && b.random_max_v >= 1 && b.random_max_v <= 12, "random_max_v must lie in [1, 12]");
    require(b.random_max_e >= 1 && b.random_max_e <= 16, "random_max_e must lie in [1, 16]");
    require(b.factor_max_n >= 1 && b.factor_max_n <= 6, "factor_max_n must lie in [1, 6]");
    require(b.reduction_instances >= 0, "reduction_instances must be non-negative");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "sandwich",        "monotonicity",   "compatible-gammark", "edge-cover",          "pm-equivalence",
        "k-roman-iff-pm",  "middle-italian", "weight-to-clique",   "one-I-neighbor",      "bertossi",
        "join-additivity", "join-forward",   "single-vertex-join", "clique-join",         "join-characterization",
        "suns",            "co-suns",        "cosun-gamma",        "reduction-soundness"};
    return names;
}

int threads_from_env() {
    if (const char* env = std::getenv("ROMANKIT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::vector<json> suite_instances(const std::string& suite, const Budget& budget) {
    validate(budget);
    return lookup(suite).generate(budget);
}

std::optional<Counterexample> check_instance(const std::string& suite, const json& instance, const Solvers& solvers) {
    return lookup(suite).check(instance, solvers);
}

VerificationReport run_suite(const std::string& suite, const Budget& budget, const Solvers& solvers, int threads) {
    const Suite& s = lookup(suite);
    validate(budget);
    const std::vector<json> instances = s.generate(budget);
    if (threads < 0) threads = threads_from_env();

    // Verdicts land in per-instance slots; the reported counterexample is
    // the failing instance with the smallest index, whatever the schedule.
    std::vector<Check> verdicts(instances.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{instances.size()};
    std::exception_ptr error;
    std::mutex error_lock;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < instances.size();) {
            if (i > first_fail.load()) continue;
            try {
                verdicts[i] = s.check(instances[i], solvers);
            } catch (...) {
                std::lock_guard guard(error_lock);
                if (!error) error = std::current_exception();
                return;
            }
            if (verdicts[i]) {
                std::size_t seen = first_fail.load();
                while (i < seen && !first_fail.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    VerificationReport report;
    report.suite = suite;
    report.budget = budget;
    const std::size_t fail_at = first_fail.load();
    report.passed = fail_at == instances.size();
    // on failure, instances after the first failure may be skipped
    report.checked = report.passed ? instances.size() : fail_at + 1;
    if (!report.passed) report.counterexample = verdicts[fail_at];
    return report;
}

}  // namespace romankit::verify
