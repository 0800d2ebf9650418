#include "oracles.hpp"

#include "trifree/canon.hpp"
#include "trifree/families.hpp"
#include "trifree/properties.hpp"
#include "trifree/search.hpp"

#include <doctest.h>

using namespace trifree;

TEST_SUITE("search")
{
    TEST_CASE("triangle-free class counts match labelled enumeration")
    {
        for (int n = 1; n <= 6; ++n)
            CHECK(static_cast<int>(triangle_free_graphs(n).size()) == oracle::triangle_free_class_count(n));
    }

    TEST_CASE("maximal triangle-free class counts match labelled enumeration")
    {
        for (int n = 2; n <= 7; ++n)
            CHECK(static_cast<int>(maximal_triangle_free_graphs(n).size()) ==
                  oracle::maximal_triangle_free_class_count(n));
    }

    TEST_CASE("enumeration output is canonical, sorted and duplicate-free")
    {
        auto graphs = triangle_free_graphs(8);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(oracle::triangle_free(graphs[i]));
            CHECK(canonical_form(graphs[i]).graph == graphs[i]);
            if (i > 0)
                CHECK(graphs[i - 1] < graphs[i]);
        }
        auto maximal = maximal_triangle_free_graphs(9);
        for (const auto &g : maximal)
            CHECK(oracle::maximal_triangle_free(g));
        // The maximal ones are exactly the maximal members of the full list.
        std::size_t count = 0;
        for (const auto &g : triangle_free_graphs(9))
            count += is_maximal_triangle_free(g);
        CHECK(count == maximal.size());
    }

    TEST_CASE("worker count does not change the result")
    {
        CHECK(triangle_free_graphs(8, {3, false}) == triangle_free_graphs(8));
        CHECK(maximal_triangle_free_graphs(10, {2, false}) == maximal_triangle_free_graphs(10));
    }

    TEST_CASE("resource guard")
    {
        CHECK_THROWS_AS(triangle_free_graphs(kEnumerationGuard + 1), ResourceGuardError);
        CHECK_THROWS_AS(maximal_triangle_free_graphs(1), PreconditionError);
        CHECK_THROWS_AS(search_extremal(kExtremalGuard + 1, 12), ResourceGuardError);
    }

    TEST_CASE("census invariants hold up to nine vertices")
    {
        for (int n = 2; n <= 9; ++n) {
            auto c = census(n);
            CHECK(c.failures.empty());
            CHECK(c.inconsistent.empty());
            for (const auto &row : c.rows) {
                CHECK(row.d4 == row.recognized.has_value());
                CHECK(row.q4 == row.d4);
                CHECK(failed_invariants(row).empty());
            }
        }
    }

    TEST_CASE("census rows describe their graph")
    {
        auto row = census_row(cycle(5));
        CHECK(row.order == 5);
        CHECK(row.d4);
        CHECK_FALSE(row.induced_c6);
        CHECK(row.min_degree == 2);
        REQUIRE(row.recognized);
        CHECK(*row.recognized == FamilyId{AndrasfaiId{2}});
        auto vrow = census_row(vega({2, 1, 1}).graph);
        CHECK(vrow.induced_c6);
        CHECK(vrow.contains_upsilon);
    }

    TEST_CASE("no D(3)-but-not-D(4) graph on at most nine vertices")
    {
        auto h = hunt_conjecture(9);
        CHECK(h.hits.empty());
        CHECK(h.examined[9] == maximal_triangle_free_graphs(9).size());
    }

    TEST_CASE("extremal search")
    {
        auto a = search_extremal(10, 5);
        CHECK(a.formula_value == 25);
        CHECK(a.best_found == 25);
        auto b = search_extremal(20, 8);
        CHECK(b.formula_value == 80);
        CHECK(b.best_found == 80);
        REQUIRE(b.witness);
        CHECK(b.witness->weights == std::vector<int>{4, 4, 4, 4, 4});
        CHECK(*b.witness_family == FamilyId{AndrasfaiId{2}});
        for (const auto &t : b.templates)
            if (t.witness)
                CHECK(t.edges <= 80);
    }

    TEST_CASE("best blow-ups satisfy their constraints")
    {
        for (auto [n, s] : std::vector<std::pair<int, int>>{{12, 5}, {14, 6}, {16, 7}}) {
            auto spec = best_blowup(andrasfai({2}), n, s);
            REQUIRE(spec);
            auto g = blowup(*spec);
            CHECK(g.order() == n);
            CHECK(oracle::alpha(g) <= s);
            CHECK(static_cast<std::int64_t>(g.edge_count()) == blowup_edge_count(*spec));
        }
        CHECK_FALSE(best_blowup(andrasfai({2}), 10, 3));
    }

    TEST_CASE("parallel_for covers every index and rethrows")
    {
        std::vector<int> hit(50, 0);
        parallel_for(50, 4, [&](int i) { hit[i] += 1; });
        CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
        CHECK_THROWS_AS(parallel_for(5, 2, [](int i) {
                            if (i == 3)
                                throw std::runtime_error("boom");
                        }),
                        std::runtime_error);
    }
}
