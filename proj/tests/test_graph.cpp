#include <doctest.h>

#include <random>

#include "hpart/errors.hpp"
#include "hpart/graph.hpp"
#include "oracles.hpp"

using namespace hpart;
using namespace hpart::testing;

TEST_SUITE("graph")
{
    TEST_CASE("from_edge_list encodes, deduplicates and rejects bad input")
    {
        const std::vector<Edge> c4_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        const auto c4 = Graph::from_edge_list(4, c4_edges);
        CHECK(c4.order() == 4);
        CHECK(c4.size() == 4);
        CHECK(c4.adjacent(3, 0));
        CHECK(c4.adjacent(0, 3));

        const auto k1 = Graph::from_edge_list(1, {});
        CHECK(k1.order() == 1);
        CHECK(k1.size() == 0);

        const std::vector<Edge> doubled{{0, 1}, {0, 1}, {1, 2}, {1, 0}};
        const auto p3 = Graph::from_edge_list(3, doubled);
        CHECK(p3.size() == 2);
        CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

        const std::vector<Edge> loop{{1, 1}};
        CHECK_THROWS_AS(Graph::from_edge_list(2, loop), InputError);
        const std::vector<Edge> outside{{0, 2}};
        CHECK_THROWS_AS(Graph::from_edge_list(2, outside), InputError);
    }

    TEST_CASE("degree_in counts neighbors inside D only")
    {
        const auto c4 = cycle(4);
        CHECK(degree_in(c4, 1, VertexSet(4, {0, 1, 2})) == 2);
        CHECK(degree_in(c4, 3, VertexSet(4, {0, 2})) == 2);
        CHECK(degree_in(c4, 3, VertexSet(4, {3})) == 0);
        for (Vertex v = 0; v < 4; ++v)
            CHECK(degree_in(c4, v, VertexSet(4)) == 0);
    }

    TEST_CASE("induced_subgraph relabels in ascending order")
    {
        const auto c4 = cycle(4);
        const auto p3 = induced_subgraph(c4, VertexSet(4, {0, 1, 2}));
        CHECK(p3.original == std::vector<Vertex>{0, 1, 2});
        CHECK(p3.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

        const auto pair = induced_subgraph(c4, VertexSet(4, {0, 2}));
        CHECK(pair.graph.order() == 2);
        CHECK(pair.graph.size() == 0);

        const auto whole = induced_subgraph(c4, c4.vertices());
        CHECK(whole.graph.edges() == c4.edges());

        CHECK_THROWS_AS(induced_subgraph(c4, VertexSet(6, {5})), ContractError);
    }

    TEST_CASE("components report original ids ordered by smallest member")
    {
        const auto c4 = cycle(4);
        auto comps = components(c4, VertexSet(4, {0, 1, 3}));
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == VertexSet(4, {0, 1, 3}));

        comps = components(c4, VertexSet(4, {0, 2}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == VertexSet(4, {0}));
        CHECK(comps[1] == VertexSet(4, {2}));

        const auto k3 = complete(3);
        comps = components(k3, k3.vertices());
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == 3);

        CHECK(components(c4, VertexSet(4)).empty());
    }

    TEST_CASE("is_connected excludes the empty graph")
    {
        CHECK(is_connected(cycle(5)));
        const std::vector<Edge> two_edges{{0, 1}, {2, 3}};
        CHECK_FALSE(is_connected(Graph::from_edge_list(4, two_edges)));
        CHECK_FALSE(is_connected(Graph()));
        CHECK(is_connected(complete(1)));
    }

    TEST_CASE("max_degree")
    {
        CHECK(max_degree(cycle(5)) == 2);
        CHECK(max_degree(complete(1)) == 0);
        CHECK(max_degree(Graph()) == 0);

        // Petersen: count degrees directly from the edge list.
        const auto pg = petersen();
        std::vector<std::size_t> counted(pg.order(), 0);
        for (const auto& [u, v] : pg.edges()) {
            ++counted[u];
            ++counted[v];
        }
        CHECK(pg.size() == 15);
        CHECK(*std::max_element(counted.begin(), counted.end()) == 3);
        CHECK(max_degree(pg) == 3);
    }

    TEST_CASE("sets wider than one word")
    {
        const auto big = cycle(150);
        CHECK(max_degree(big) == 2);
        CHECK(is_connected(big));
        auto cut = big.vertices();
        cut.erase(0);
        cut.erase(75);
        const auto comps = components(big, cut);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].first() == 1u);
        CHECK(comps[0].size() == 74);
        CHECK(comps[1].size() == 74);
        CHECK(edges_within(big, cut) == 146);
    }

    TEST_CASE("random graphs satisfy the degree, component and composition invariants")
    {
        std::mt19937_64 rng(20261017);
        for (int round = 0; round < 200; ++round) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 90)(rng);
            const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
            const auto g = random_graph(n, p, rng);

            std::vector<bool> member(n);
            VertexSet s(n);
            std::bernoulli_distribution half(0.5);
            for (Vertex v = 0; v < n; ++v)
                if (half(rng)) {
                    member[v] = true;
                    s.insert(v);
                }

            std::size_t degree_total = 0;
            for (Vertex v = 0; v < n; ++v) {
                CHECK(degree_in(g, v, s) == naive_degree_in(g, v, member));
                degree_total += degree_in(g, v, g.vertices());
            }
            CHECK(degree_total == 2 * g.size());

            // Components: disjoint cover of s, no edge between two of them,
            // each internally connected.
            const auto comps = components(g, s);
            VertexSet covered(n);
            std::vector<std::size_t> label(n, comps.size());
            for (std::size_t c = 0; c < comps.size(); ++c) {
                CHECK_FALSE(covered.intersects(comps[c]));
                covered |= comps[c];
                comps[c].for_each([&](Vertex v) { label[v] = c; });
                CHECK(is_connected(g, comps[c]));
                if (c > 0)
                    CHECK(*comps[c - 1].first() < *comps[c].first());
            }
            CHECK(covered == s);
            UnionFind uf(n);
            for (const auto& [u, v] : g.edges())
                if (member[u] && member[v]) {
                    CHECK(label[u] == label[v]);
                    uf.unite(u, v);
                }
            for (Vertex v = 0; v < n; ++v)
                if (member[v])
                    CHECK(uf.find(v) == uf.find(*comps[label[v]].first()));

            // G[S][T] = G[T] for T ⊆ S.
            const auto outer = induced_subgraph(g, s);
            VertexSet t_local(outer.graph.order());
            VertexSet t(n);
            for (Vertex i = 0; i < outer.graph.order(); ++i)
                if (half(rng)) {
                    t_local.insert(i);
                    t.insert(outer.original[i]);
                }
            const auto nested = induced_subgraph(outer.graph, t_local);
            const auto direct = induced_subgraph(g, t);
            CHECK(nested.graph.edges() == direct.graph.edges());
        }
    }
}
