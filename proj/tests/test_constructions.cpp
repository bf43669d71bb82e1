#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "romankit/constructions.hpp"
#include "romankit/domination.hpp"
#include "romankit/enumerate.hpp"

using namespace romankit;

namespace {

SplitLabeledGraph p2_with_k(Vertex k_vertex) {
    return SplitLabeledGraph::make(path_graph(2), {{k_vertex}, {1 - k_vertex}});
}

}  // namespace

TEST_CASE("split labelled graph validation") {
    CHECK_THROWS_AS(SplitLabeledGraph::make(path_graph(4), {{0, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SplitLabeledGraph::with_default_partition(cycle_graph(5)), std::invalid_argument);
    CHECK(SplitLabeledGraph::with_default_partition(path_graph(4)).partition.clique == VertexSet{1, 2});
}

TEST_CASE("middle graphs") {
    CHECK(is_isomorphic(middle_graph(path_graph(2)), path_graph(3)));
    const Graph m3 = middle_graph(path_graph(3));
    CHECK(m3.order() == 5);
    CHECK(m3.adjacent(3, 4));
    for (std::size_t t = 3; t <= 6; ++t) {
        const Graph m = middle_graph(cycle_graph(t));
        CHECK(gamma_rk(m, 2).gamma_rk == static_cast<int>(t));
        CHECK(gamma(m).gamma == static_cast<int>((t + 1) / 2));
    }
    for (std::size_t n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) {
            const Graph m = middle_graph(g);
            CHECK(m.order() == n + g.size());
            CHECK(m == strongly_compatible_minimal(Hypergraph::from_graph(g)));
        }
}

TEST_CASE("split join") {
    const auto p4 = split_join(p2_with_k(1), p2_with_k(0));
    CHECK(is_isomorphic(p4.graph, path_graph(4)));
    CHECK(is_split_partition(p4.graph, p4.partition));

    const SplitLabeledGraph k1{Graph(1), {{0}, {}}};
    CHECK(split_join(k1, k1).graph == complete_graph(2));

    const auto x = SplitLabeledGraph::make(Graph(2), {{0}, {1}});
    CHECK(gamma(split_join(x, x).graph).gamma == 3);
    CHECK(oracle::gamma(split_join(x, x).graph) == 3);

    const SplitLabeledGraph k2{complete_graph(2), {{0, 1}, {}}};
    const auto wz = SplitLabeledGraph::make(path_graph(2), {{0}, {1}});
    CHECK(oracle::gamma(split_join(k2, wz).graph) == 1);
    CHECK(oracle::gamma(k2.graph) + oracle::gamma(wz.graph) == 2);

    // commutative up to isomorphism
    const auto s3 = sun(3);
    CHECK(is_isomorphic(split_join(s3, p4).graph, split_join(p4, s3).graph) == true);
}

TEST_CASE("split join decomposition") {
    const auto p4 = split_join_decompose(SplitLabeledGraph::with_default_partition(path_graph(4)));
    REQUIRE(p4.factors.size() == 2);
    for (const auto& f : p4.factors) CHECK(is_isomorphic(f.factor.graph, path_graph(2)));
    CHECK(p4.factors[0].original == VertexSet{0, 1});
    CHECK(p4.factors[1].original == VertexSet{2, 3});

    for (int t = 3; t <= 8; ++t) CHECK(split_join_decompose(sun(t)).prime());

    const SplitLabeledGraph k4{complete_graph(4), {{0, 1, 2, 3}, {}}};
    const auto parts = split_join_decompose(k4);
    CHECK(parts.factors.size() == 4);
    for (const auto& f : parts.factors) CHECK(f.factor.graph.order() == 1);

    CHECK_THROWS_AS(split_join_decompose(SplitLabeledGraph{path_graph(4), {{0, 1}, {2, 3}}}), std::invalid_argument);
}

TEST_CASE("join then decompose recovers the factors") {
    std::vector<SplitLabeledGraph> factors;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n, true))
            for (const auto& p : all_split_partitions(g)) {
                SplitLabeledGraph f{g, p};
                // connected once intra-clique edges are removed
                if (split_join_decompose(f).prime()) factors.push_back(f);
            }
    REQUIRE(!factors.empty());
    for (std::size_t i = 0; i < factors.size(); i += 3)
        for (std::size_t j = 0; j < factors.size(); j += 5) {
            const auto joined = split_join(factors[i], factors[j]);
            const auto d = split_join_decompose(joined);
            REQUIRE(d.factors.size() == 2);
            const Graph back = disjoint_union(d.factors[0].factor.graph, d.factors[1].factor.graph);
            const Graph orig = disjoint_union(factors[i].graph, factors[j].graph);
            CHECK(is_isomorphic(back, orig));
            // folding the factors back together gives the joined graph
            CHECK(split_join(d.factors[0].factor, d.factors[1].factor).graph == joined.graph);
        }
}

TEST_CASE("suns") {
    CHECK_THROWS_AS(sun(2), std::invalid_argument);
    for (int t = 3; t <= 8; ++t) {
        const auto s = sun(t);
        CHECK(s.graph.order() == static_cast<std::size_t>(2 * t));
        CHECK(is_split_partition(s.graph, s.partition));
        for (Vertex u : s.partition.clique) CHECK(s.graph.degree(u) == static_cast<std::size_t>(t + 1));
        for (Vertex w : s.partition.independent) CHECK(s.graph.degree(w) == 2);
        // w_j ~ u_j and u_{j+1}
        for (int j = 0; j < t; ++j) {
            CHECK(s.graph.adjacent(static_cast<Vertex>(t + j), static_cast<Vertex>(j)));
            CHECK(s.graph.adjacent(static_cast<Vertex>(t + j), static_cast<Vertex>((j + 1) % t)));
        }
        CHECK(is_strongly_compatible(s.graph, cycle_hypergraph(static_cast<std::size_t>(t)), sun_cycle_labeling(t)));
    }
    CHECK(is_isomorphic(sun(4).graph, complement(sun(4).graph)));
}

TEST_CASE("co-suns") {
    CHECK_THROWS_AS(co_sun(1), std::invalid_argument);
    CHECK(is_isomorphic(co_sun(4).graph, sun(4).graph));
    for (int t = 3; t <= 8; ++t) {
        const auto c = co_sun(t);
        CHECK(c.graph == complement(sun(t).graph));
        CHECK(is_split_partition(c.graph, c.partition));
        CHECK(c.partition.clique == sun(t).partition.independent);
        const Hypergraph h = co_sun_hypergraph(t);
        CHECK(is_k_uniform(h, static_cast<std::size_t>(t - 2)));
        CHECK(is_strongly_compatible(c.graph, h, co_sun_labeling(t)));
    }
    CHECK(is_k_roman(co_sun(5).graph, 2));
    for (int t = 5; t <= 8; ++t) CHECK(gamma(co_sun(t).graph).gamma == 2);
}

TEST_CASE("exact cover reduction") {
    const auto two = exact_cover_reduction(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}), 3);
    CHECK(is_k_roman(two.graph, 3));
    CHECK_FALSE(is_k_roman(exact_cover_reduction(cycle_hypergraph(5), 2).graph, 2));
    CHECK(is_k_roman(exact_cover_reduction(cycle_hypergraph(4), 2).graph, 2));

    CHECK_THROWS_AS(exact_cover_reduction(Hypergraph(4, {{0, 1, 2}, {2, 3}}), 3), std::invalid_argument);
    CHECK_THROWS_AS(exact_cover_reduction(Hypergraph(4, {{0, 1, 2}}), 3), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Hypergraph h = random_uniform_hypergraph(rng, 6, 3, 6, rng() & 1U);
        const auto r = exact_cover_reduction(h, 3);
        CHECK(r.partition == compatible_split(h).second);
        CHECK(is_k_roman(r.graph, 3) == oracle::perfect_matching(h).has_value());
    }
}
