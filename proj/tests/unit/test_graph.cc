/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <isolation/graph.hh>
#include <isolation/patterns.hh>

#include "enumerate.hh"
#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace isolation;

TEST_CASE("vertex sets")
{
    VertexSet s{ 3, 1, 7 };
    CHECK(s.size() == 3);
    CHECK(s.first() == 1);
    CHECK(s.max_index() == 7);
    CHECK(s.to_vector() == std::vector<int>{ 1, 3, 7 });
    CHECK(s.to_string() == "{1, 3, 7}");
    CHECK((s - VertexSet{ 3 }) == VertexSet{ 1, 7 });
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::range(0).empty());
    CHECK_THROWS_AS((VertexSet{ 64 }), GraphError);

    SUBCASE("lexicographic order on equal-size sets")
    {
        CHECK(VertexSet({ 0, 5 }).lex_less(VertexSet{ 1, 2 }));
        CHECK(VertexSet({ 1, 2 }).lex_less(VertexSet{ 1, 3 }));
        CHECK(! VertexSet({ 1, 3 }).lex_less(VertexSet{ 1, 3 }));
        CHECK(! VertexSet({ 2, 3 }).lex_less(VertexSet{ 1, 9 }));
    }
}

TEST_CASE("building graphs")
{
    auto g = Graph::from_edges(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 1, 0 } });
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(1, 0));
    CHECK(! g.adjacent(0, 2));
    CHECK(g.degree_sequence() == std::vector<int>{ 2, 2, 1, 1 });
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.closed_neighbourhood(1) == VertexSet{ 0, 1, 2 });

    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 0 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 3 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), GraphError);
    CHECK_NOTHROW(Graph::from_edges(64, {}));

    GraphBuilder b{64};
    CHECK_THROWS_AS(b.add_vertex(), GraphError);
}

TEST_CASE("induced subgraphs and components")
{
    // two triangles and an isolated vertex
    auto g = Graph::from_edges(7, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 4, 5 }, { 5, 6 }, { 4, 6 } });
    auto comps = component_sets(g, g.vertices());
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{ 0, 1, 2 });
    CHECK(comps[1] == VertexSet{ 3 });
    CHECK(comps[2] == VertexSet{ 4, 5, 6 });
    CHECK(! is_connected(g));
    CHECK(is_connected(Graph{}));

    auto d = delete_vertices(g, VertexSet{ 1, 3 });
    CHECK(d.graph.size() == 5);
    CHECK(d.to_parent == std::vector<int>{ 0, 2, 4, 5, 6 });
    CHECK(d.graph.adjacent(0, 1));
    CHECK(d.lift(VertexSet{ 1, 2 }) == VertexSet{ 2, 4 });
    CHECK(edge_count_within(g, VertexSet{ 0, 1, 4 }) == 1);
    CHECK(closed_neighbourhood(g, VertexSet{ 0, 3 }) == VertexSet{ 0, 1, 2, 3 });
}

TEST_CASE("disjoint union and relabelling")
{
    auto u = disjoint_union(catalog::k3(), catalog::path(3));
    CHECK(u.size() == 6);
    CHECK(u.edge_count() == 5);
    CHECK(u.adjacent(3, 4));
    CHECK(! u.adjacent(2, 3));

    auto r = relabel(catalog::path(3), { 2, 0, 1 });
    CHECK(r.adjacent(2, 0));
    CHECK(r.adjacent(0, 1));
    CHECK(! r.adjacent(2, 1));
    CHECK_THROWS_AS(relabel(catalog::path(3), { 0, 0, 1 }), GraphError);
}

TEST_CASE("isomorphism agrees with the permutation oracle")
{
    std::mt19937_64 rng{17};
    for (int trial = 0 ; trial < 400 ; ++trial) {
        int n = 1 + trial % 7;
        auto a = support::random_graph(rng, n, 0.45);
        Graph b;
        if (trial % 2) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            b = relabel(a, perm);
        }
        else
            b = support::random_graph(rng, n, 0.45);

        bool expected = oracle::isomorphic(a, b);
        CHECK(isomorphic(a, b) == expected);
        if (expected)
            CHECK(invariant_hash(a) == invariant_hash(b));
    }
}

TEST_CASE("isomorphism on regular graphs that colour refinement cannot split")
{
    // C6 and two triangles: both 2-regular
    auto c6 = catalog::cycle(6);
    auto two_triangles = disjoint_union(catalog::k3(), catalog::k3());
    CHECK(! isomorphic(c6, two_triangles));

    // prism and K3,3: both 3-regular on 6 vertices
    auto prism = Graph::from_edges(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 }, { 4, 5 }, { 3, 5 }, { 0, 3 }, { 1, 4 }, { 2, 5 } });
    auto k33 = Graph::from_edges(6, { { 0, 3 }, { 0, 4 }, { 0, 5 }, { 1, 3 }, { 1, 4 }, { 1, 5 }, { 2, 3 }, { 2, 4 }, { 2, 5 } });
    CHECK(! isomorphic(prism, k33));
    CHECK(isomorphic(k33, relabel(k33, { 5, 4, 3, 2, 1, 0 })));

    // large random relabelling of the G9 graphs
    std::mt19937_64 rng{5};
    for (int i = 1 ; i <= 6 ; ++i) {
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(isomorphic(catalog::g9(i), relabel(catalog::g9(i), perm)));
        for (int j = 1 ; j <= 6 ; ++j)
            CHECK(isomorphic(catalog::g9(i), catalog::g9(j)) == (i == j));
    }
}
