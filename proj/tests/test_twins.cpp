#include "oracles.hpp"

#include "trifree/families.hpp"
#include "trifree/twins.hpp"

#include <doctest.h>

using namespace trifree;

namespace {

auto path(int n) -> Graph
{
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return b.build();
}

} // namespace

TEST_SUITE("twins")
{
    TEST_CASE("twin partition matches pairwise neighbourhood comparison")
    {
        std::mt19937_64 rng(41);
        for (int t = 0; t < 40; ++t) {
            auto base = oracle::random_graph(rng, 3 + t % 6, 0.4);
            std::vector<int> w(base.order());
            for (auto &x : w)
                x = 1 + static_cast<int>(rng() % 3);
            for (const auto &g : {base, blowup({base, w})}) {
                auto p = twin_partition(g);
                CHECK(p.class_of == oracle::twin_classes(g));
                for (int c = 0; c < p.size(); ++c)
                    for (auto v : p.classes[c])
                        CHECK(p.class_of[v] == c);
            }
        }
    }

    TEST_CASE("blow-up order, edge count and offsets")
    {
        auto c5 = cycle(5);
        BlowupSpec spec{c5, {1, 2, 3, 1, 2}};
        auto g = blowup(spec);
        CHECK(g.order() == 9);
        CHECK(spec.expanded_order() == 9);
        std::size_t expected = 0;
        for (const auto &e : c5.edges())
            expected += static_cast<std::size_t>(spec.weights[e.u]) * spec.weights[e.v];
        CHECK(g.edge_count() == expected);
        CHECK(blowup_offsets(spec) == std::vector<int>{0, 1, 3, 6, 7, 9});
        CHECK(g.adjacent(1, 3));
        CHECK_FALSE(g.adjacent(1, 2));
    }

    TEST_CASE("quotient of a twin-free base blow-up recovers the base")
    {
        std::mt19937_64 rng(42);
        for (int k = 1; k <= 5; ++k) {
            auto base = andrasfai({k});
            std::vector<int> w(base.order());
            for (auto &x : w)
                x = 1 + static_cast<int>(rng() % 3);
            auto g = oracle::relabel(blowup({base, w}), oracle::random_permutation(rng, blowup({base, w}).order()));
            auto p = twin_partition(g);
            auto q = quotient(g, p);
            CHECK(oracle::isomorphic(q, base));
            CHECK(is_twin_free(q));
        }
    }

    TEST_CASE("stale partitions are rejected")
    {
        auto g = complete_bipartite(2, 3);
        auto p = twin_partition(cycle(5));
        CHECK_THROWS_AS(quotient(g, p), ContractViolation);
        auto q = twin_partition(g);
        std::swap(q.classes[0], q.classes[1]);
        CHECK_THROWS_AS(quotient(g, q), ContractViolation);
    }

    TEST_CASE("H-twins follow the definition")
    {
        std::mt19937_64 rng(43);
        auto g = oracle::random_graph(rng, 10, 0.4);
        Embedding h{{0, 1, 2}};
        CHECK_THROWS(h_twins(g, h, 3));
        for (Vertex q : h.map) {
            auto twins = h_twins(g, h, q);
            for (Vertex r = 0; r < g.order(); ++r) {
                bool same = true;
                for (auto x : h.map)
                    same = same && g.adjacent(q, x) == g.adjacent(r, x);
                CHECK(twins.test(r) == same);
            }
        }
    }

    TEST_CASE("twin property holds on Andrasfai blow-ups and fails on a path")
    {
        auto g = blowup({andrasfai({3}), {1, 2, 1, 2, 1, 1, 2, 1}});
        CHECK(has_twin_property(g, andrasfai({3})).holds);
        // In the path 0-1-2-3 the copy 1-2 of an edge has twins 3 of 1 and 0 of 2, which are not adjacent.
        auto r = has_twin_property(path(4), path(2));
        CHECK_FALSE(r.holds);
        REQUIRE(r.counterexample);
        CHECK_FALSE(path(4).adjacent(r.counterexample->q_twin, r.counterexample->z_twin));
    }
}
