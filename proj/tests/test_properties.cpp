#include "oracles.hpp"

#include "trifree/families.hpp"
#include "trifree/properties.hpp"
#include "trifree/search.hpp"
#include "trifree/twins.hpp"

#include <doctest.h>

using namespace trifree;

namespace {

auto coverage_at_most(const Graph &g, const WeightVector &w, int m) -> bool
{
    for (Vertex y = 0; y < g.order(); ++y) {
        int cover = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(y, v))
                cover += w.w[v];
        if (cover > m)
            return false;
    }
    return true;
}

auto all_ones(int n) -> WeightVector
{
    return WeightVector{std::vector<int>(n, 1)};
}

} // namespace

TEST_SUITE("properties")
{
    TEST_CASE("triangles")
    {
        GraphBuilder b(4);
        b.add_edge(1, 2);
        b.add_edge(2, 3);
        b.add_edge(1, 3);
        b.add_edge(0, 1);
        auto t = find_triangle(b.build());
        REQUIRE(t);
        CHECK(*t == Triangle{1, 2, 3});
        CHECK(is_triangle_free(cycle(5)));
        std::mt19937_64 rng(51);
        for (int i = 0; i < 50; ++i) {
            auto g = oracle::random_graph(rng, 8, 0.3);
            CHECK(is_triangle_free(g) == oracle::triangle_free(g));
        }
    }

    TEST_CASE("maximality")
    {
        CHECK(is_maximal_triangle_free(cycle(5)));
        auto r = check_maximal_triangle_free(cycle(6));
        CHECK_FALSE(r.holds);
        REQUIRE(r.open_pair);
        CHECK(*r.open_pair == Edge{0, 3});
        CHECK_FALSE(check_maximal_triangle_free(andrasfai({1})).open_pair);
        std::mt19937_64 rng(52);
        for (int i = 0; i < 100; ++i) {
            auto g = oracle::random_triangle_free(rng, 3 + i % 8, 200);
            CHECK(is_maximal_triangle_free(g) == oracle::maximal_triangle_free(g));
        }
        CHECK(is_maximal_triangle_free(fig41()));
        CHECK(is_maximal_triangle_free(petersen()));
    }

    TEST_CASE("independence number")
    {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 60; ++i) {
            auto g = oracle::random_graph(rng, 4 + i % 14, 0.3);
            auto r = independence_number(g);
            CHECK(r.alpha == oracle::alpha(g));
            CHECK(static_cast<int>(r.witness.size()) == r.alpha);
            for (auto a : r.witness)
                for (auto b : r.witness)
                    CHECK_FALSE(g.adjacent(a, b));
        }
        for (int m = 1; m <= 4; ++m)
            CHECK(independence_number(andrasfai({m + 1})).alpha == m + 1);
        CHECK(independence_number(fig41()).alpha == 4);
        CHECK(independence_number(blowup(haggkvist_spec())).alpha == 10);
    }

    TEST_CASE("weighted independent sets")
    {
        std::mt19937_64 rng(54);
        for (int i = 0; i < 40; ++i) {
            auto g = oracle::random_graph(rng, 6 + i % 8, 0.35);
            std::vector<int> w(g.order());
            for (auto &x : w)
                x = static_cast<int>(rng() % 5);
            auto set = max_weight_independent_set(g, w, VertexSet::full(g.order()));
            int total = 0;
            for (auto v : set)
                total += w[v];
            CHECK(total == oracle::max_weight_independent(g, w));
        }
    }

    TEST_CASE("D(k) agrees with multiset enumeration")
    {
        std::mt19937_64 rng(55);
        for (int i = 0; i < 40; ++i) {
            auto g = oracle::random_triangle_free(rng, 4 + i % 4, 60);
            int expected = oracle::d_failing_level(g, 3);
            for (bool quotient : {true, false}) {
                auto v = check_d(g, 3, {quotient});
                CHECK(v.holds == (expected == 0));
                if (!v.holds) {
                    CHECK(v.level == expected);
                    REQUIRE(v.witness);
                    CHECK(v.witness->total() == 3 * v.level);
                    CHECK(coverage_at_most(g, *v.witness, v.level));
                    CHECK(is_d_witness(g, *v.witness, v.level));
                }
            }
        }
        for (int n = 5; n <= 7; ++n)
            for (const auto &g : maximal_triangle_free_graphs(n))
                CHECK(check_d(g, 4).holds == (oracle::d_failing_level(g, 4) == 0));
    }

    TEST_CASE("Q(k) agrees with the sequence definition")
    {
        std::mt19937_64 rng(56);
        for (int i = 0; i < 30; ++i) {
            auto g = i % 2 ? oracle::random_triangle_free(rng, 4 + i % 3, 40) : oracle::random_graph(rng, 4 + i % 3, 0.5);
            int expected = oracle::q_failing_level(g, 3);
            auto v = check_q(g, 3);
            CHECK(v.holds == (expected == 0));
            if (!v.holds) {
                CHECK(v.level == expected);
                REQUIRE(v.witness);
                CHECK_FALSE(q_certificate(g, *v.witness, v.level));
            }
        }
        CHECK(check_q(andrasfai({1}), 1).holds);
    }

    TEST_CASE("Q certificates re-validate")
    {
        auto g = vega({2, 0, 0}).graph;
        WeightVector w{std::vector<int>(g.order(), 0)};
        w.w[0] = 3;
        w.w[5] = 3;
        auto c = q_certificate(g, w, 2);
        REQUIRE(c);
        CHECK(is_valid_q_certificate(g, w, 2, *c));
        auto bad = *c;
        bad.index_count = 0;
        CHECK_FALSE(is_valid_q_certificate(g, w, 2, bad));
    }

    TEST_CASE("named examples")
    {
        auto c6 = check_d(cycle(6), 2);
        CHECK_FALSE(c6.holds);
        CHECK(c6.level == 2);
        CHECK(*c6.witness == all_ones(6));
        CHECK(check_d(cycle(5), 4).holds);
        CHECK(check_q(vega({2, 0, 0}).graph, 4).holds);
        CHECK(in_class_d4(andrasfai({5})));
        CHECK_FALSE(in_class_d4(cycle(6)));
        CHECK_FALSE(in_class_d4(petersen()));

        auto f = fig41();
        CHECK_FALSE(check_d(f, 4).holds);
        CHECK(is_d_witness(f, all_ones(12), 4));
        CHECK_FALSE(q_certificate(f, all_ones(12), 4));
        CHECK_FALSE(check_q(f, 4).holds);
        CHECK_THROWS_AS(check_d(f, 0), PreconditionError);
        CHECK_THROWS_AS(check_q(f, 0), PreconditionError);
    }

    TEST_CASE("blow-up invariance and quotient agreement")
    {
        std::mt19937_64 rng(57);
        for (int i = 0; i < 30; ++i) {
            auto g = oracle::random_triangle_free(rng, 4 + i % 5, 50);
            std::vector<int> w(g.order());
            for (auto &x : w)
                x = 1 + static_cast<int>(rng() % 3);
            auto big = blowup({g, w});
            CHECK(check_d(g, 3).holds == check_d(big, 3).holds);
            auto q = quotient(big, twin_partition(big));
            CHECK(check_d(q, 3, {false}).holds == check_d(big, 3, {false}).holds);
        }
    }

    TEST_CASE("levels are monotone and the degree bound forces D(4)")
    {
        for (int n = 2; n <= 8; ++n)
            for (const auto &g : maximal_triangle_free_graphs(n)) {
                auto v = check_d(g, 4);
                for (int k = 1; k <= 4; ++k)
                    CHECK(check_d(g, k).holds == (v.holds || v.level > k));
                if (3 * g.min_degree() > g.order())
                    CHECK(v.holds);
            }
    }

    TEST_CASE("degree profiles")
    {
        auto p = degree_profile(vega({3, 0, 0}).graph);
        CHECK(std::count(p.degrees.begin(), p.degrees.end(), 6) == 4);
        CHECK(std::count(p.degrees.begin(), p.degrees.end(), 5) == 10);
        CHECK(std::count(p.degrees.begin(), p.degrees.end(), 4) == 2);
        CHECK(p.min == 4);
        CHECK(p.max == 6);
        auto h = degree_profile(blowup(haggkvist_spec()));
        CHECK(h.min == 10);
        CHECK(h.max == 10);
        CHECK(degree_profile(andrasfai({4})).min == 4);
    }

    TEST_CASE("coverage")
    {
        auto g = complete_bipartite(1, 3);
        WeightVector w{{0, 1, 1, 1}};
        auto c = max_coverage(g, w);
        CHECK(c.vertex == 0);
        CHECK(c.value == 3);
        CHECK_FALSE(is_d_witness(g, w, 1));
        CHECK(w.support() == std::vector<Vertex>{1, 2, 3});
    }
}
