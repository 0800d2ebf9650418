#include "oracles.hpp"

#include "trifree/graph.hpp"

#include <doctest.h>

using namespace trifree;

TEST_SUITE("graph")
{
    TEST_CASE("builder rejects loops, duplicates and bad endpoints")
    {
        GraphBuilder b(4);
        b.add_edge(0, 1);
        CHECK_THROWS_AS(b.add_edge(1, 0), GraphError);
        CHECK_THROWS_AS(b.add_edge(2, 2), GraphError);
        CHECK_THROWS_AS(b.add_edge(0, 4), GraphError);
        CHECK_THROWS_AS(b.add_edge(-1, 2), GraphError);
        b.ensure_edge(1, 0);
        CHECK(b.build().edge_count() == 1);
    }

    TEST_CASE("edge list construction names the offending pair")
    {
        std::vector<Edge> dup{{0, 1}, {1, 0}};
        try {
            (void)Graph::from_edge_list(3, dup);
            FAIL("duplicate accepted");
        }
        catch (const GraphError &e) {
            CHECK(std::string(e.what()).find("1") != std::string::npos);
        }
        std::vector<Edge> edges{{2, 0}, {1, 2}};
        auto g = Graph::from_edge_list(3, edges);
        CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
        CHECK(g.degree(2) == 2);
        CHECK(g.min_degree() == 1);
        CHECK(g.max_degree() == 2);
    }

    TEST_CASE("adjacency is symmetric and matches the edge list")
    {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 20; ++t) {
            auto g = oracle::random_graph(rng, 1 + t * 4, 0.3);
            std::size_t count = 0;
            for (Vertex u = 0; u < g.order(); ++u) {
                CHECK_FALSE(g.adjacent(u, u));
                for (Vertex v = 0; v < g.order(); ++v) {
                    CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                    count += u < v && g.adjacent(u, v);
                }
                CHECK(g.neighbors(u).count() == g.degree(u));
            }
            CHECK(count == g.edge_count());
        }
    }

    TEST_CASE("induced, without and permuted agree with direct relabelling")
    {
        std::mt19937_64 rng(11);
        auto g = oracle::random_graph(rng, 12, 0.4);
        std::vector<Vertex> keep{3, 7, 1, 10};
        auto h = g.induced(keep);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(h.adjacent(i, j) == (i != j && g.adjacent(keep[i], keep[j])));
        std::vector<Vertex> removed{0, 5};
        auto w = g.without(removed);
        CHECK(w.order() == 10);
        CHECK(w.adjacent(0, 3) == g.adjacent(1, 4));
        auto perm = oracle::random_permutation(rng, 12);
        CHECK(g.permuted(Permutation(perm)) == oracle::relabel(g, perm));
    }

    TEST_CASE("permutations")
    {
        CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
        CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
        Permutation a({1, 2, 0});
        Permutation b({0, 2, 1});
        auto ab = a * b;
        CHECK(ab(1) == a(b(1)));
        CHECK((a * a.inverse()).is_identity());
        CHECK(Permutation::identity(4).is_identity());
        auto c5 = Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        CHECK(is_isomorphism(c5, c5, Permutation({1, 2, 3, 4, 0})));
        CHECK_FALSE(is_isomorphism(c5, c5, Permutation({1, 0, 2, 3, 4})));
    }

    TEST_CASE("vertex sets")
    {
        VertexSet s(130);
        CHECK(s.empty());
        CHECK(s.first() == -1);
        s.set(3);
        s.set(64);
        s.set(129);
        CHECK(s.count() == 3);
        CHECK(s.members() == std::vector<Vertex>{3, 64, 129});
        CHECK(s.next(3) == 64);
        CHECK(s.next(129) == -1);
        auto t = VertexSet::from(130, std::vector<Vertex>{3, 100});
        CHECK((s & t).members() == std::vector<Vertex>{3});
        CHECK((s | t).count() == 4);
        CHECK(t.intersects(s));
        auto u = s;
        u.subtract(t);
        CHECK(u.members() == std::vector<Vertex>{64, 129});
        CHECK(u.is_subset_of(s));
        CHECK_FALSE(s.is_subset_of(u));
        CHECK(VertexSet::full(70).count() == 70);
    }

    TEST_CASE("graph ordering compares order first")
    {
        auto small = GraphBuilder(2).build();
        GraphBuilder b(2);
        b.add_edge(0, 1);
        auto edge = b.build();
        CHECK(small != edge);
        CHECK((small < edge || edge < small));
        CHECK(GraphBuilder(1).build() < small);
    }
}
