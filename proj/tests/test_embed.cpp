#include "oracles.hpp"

#include "trifree/embed.hpp"
#include "trifree/families.hpp"

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

TEST_SUITE("embed")
{
    TEST_CASE("induced copy counts match brute force")
    {
        std::mt19937_64 rng(31);
        std::vector<Graph> patterns{path(3), path(4), cycle(4), cycle(5), complete_bipartite(1, 3), empty_graph(2)};
        for (int t = 0; t < 25; ++t) {
            auto host = oracle::random_graph(rng, 6 + t % 4, 0.45);
            for (const auto &p : patterns)
                CHECK(count_induced(host, p) == oracle::count_induced(host, p));
        }
        CHECK(count_induced(petersen(), cycle(5)) == oracle::count_induced(petersen(), cycle(5)));
        CHECK(count_induced(petersen(), cycle(6)) == oracle::count_induced(petersen(), cycle(6)));
    }

    TEST_CASE("every reported embedding is induced and enumeration is deterministic")
    {
        auto host = vega({2, 0, 0}).graph;
        auto first = all_induced(host, cycle(6));
        CHECK_FALSE(first.empty());
        for (const auto &e : first)
            CHECK(is_induced_embedding(host, cycle(6), e));
        CHECK(all_induced(host, cycle(6)) == first);
        CHECK(find_induced(host, cycle(6)) == first.front());
    }

    TEST_CASE("visitor can stop early")
    {
        int seen = 0;
        for_each_induced(cycle(8), path(3), [&](const Embedding &) { return ++seen < 3; });
        CHECK(seen == 3);
    }

    TEST_CASE("non-induced or non-injective maps are rejected")
    {
        auto c4 = cycle(4);
        CHECK_FALSE(is_induced_embedding(c4, path(3), Embedding{{0, 1, 1}}));
        // The path onto a triangle keeps its edges but picks up a chord.
        std::vector<Edge> k3{{0, 1}, {1, 2}, {0, 2}};
        CHECK_FALSE(is_induced_embedding(Graph::from_edge_list(3, k3), path(3), Embedding{{0, 1, 2}}));
        CHECK(is_induced_embedding(c4, path(3), Embedding{{0, 1, 2}}));
        CHECK_FALSE(is_induced_embedding(c4, path(3), Embedding{{0, 1}}));
    }

    TEST_CASE("embedding helpers")
    {
        Embedding e{{4, 2, 7}};
        CHECK(e.contains(7));
        CHECK_FALSE(e.contains(3));
        CHECK(e.preimage(2) == 1);
        CHECK(e.preimage(5) == -1);
    }

    TEST_CASE("patterns larger than the host have no copies")
    {
        CHECK_FALSE(find_induced(cycle(5), cycle(6)));
        CHECK(count_induced(andrasfai({3}), andrasfai({4})) == 0);
    }
}
