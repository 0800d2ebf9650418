#include "oracles.hpp"

#include "trifree/families.hpp"
#include "trifree/properties.hpp"
#include "trifree/recognition.hpp"

#include <doctest.h>

using namespace trifree;

namespace {

auto shuffled_blowup(std::mt19937_64 &rng, const Graph &base, int max_weight) -> std::pair<Graph, std::vector<int>>
{
    std::vector<int> w(base.order());
    for (auto &x : w)
        x = 1 + static_cast<int>(rng() % max_weight);
    auto g = blowup({base, w});
    return {oracle::relabel(g, oracle::random_permutation(rng, g.order())), w};
}

void check_round_trip(std::mt19937_64 &rng, const FamilyId &id)
{
    auto base = template_graph(id);
    auto [g, w] = shuffled_blowup(rng, base, 3);
    auto r = recognize(g);
    REQUIRE(r.recognized());
    // Vega(2,1,0) and Vega(2,0,1) are isomorphic, so either name may come back.
    CHECK(oracle::isomorphic(template_graph(r.certificate->family), base));
    CHECK(certify(g, *r.certificate));
    CHECK_FALSE(r.refutation);
    auto sorted_found = r.certificate->weights;
    std::sort(sorted_found.begin(), sorted_found.end());
    std::sort(w.begin(), w.end());
    CHECK(sorted_found == w);
}

} // namespace

TEST_SUITE("recognition")
{
    TEST_CASE("Andrasfai blow-ups round-trip")
    {
        std::mt19937_64 rng(61);
        for (int k = 1; k <= 6; ++k)
            for (int t = 0; t < 3; ++t)
                check_round_trip(rng, AndrasfaiId{k});
    }

    TEST_CASE("Vega blow-ups round-trip")
    {
        std::mt19937_64 rng(62);
        for (int i = 2; i <= 4; ++i)
            for (int mu = 0; mu <= 1; ++mu)
                for (int nu = 0; nu <= 1; ++nu)
                    check_round_trip(rng, VegaId{i, mu, nu});
    }

    TEST_CASE("Haggkvist graph is a Vega(2,1,1) blow-up")
    {
        auto g = blowup(haggkvist_spec());
        auto r = recognize(g);
        REQUIRE(r.recognized());
        CHECK(r.certificate->family == FamilyId{VegaId{2, 1, 1}});
        CHECK(certify(g, *r.certificate));
    }

    TEST_CASE("certify rejects wrong certificates")
    {
        auto g = blowup({andrasfai({2}), {1, 2, 1, 1, 1}});
        auto r = recognize(g);
        REQUIRE(r.recognized());
        auto c = *r.certificate;
        auto wrong_family = c;
        wrong_family.family = AndrasfaiId{3};
        CHECK_FALSE(certify(g, wrong_family));
        auto wrong_weights = c;
        wrong_weights.weights[0] += 1;
        CHECK_FALSE(certify(g, wrong_weights));
        auto short_map = c;
        short_map.class_map.pop_back();
        CHECK_FALSE(certify(g, short_map));
    }

    TEST_CASE("refutations")
    {
        auto c6 = recognize(cycle(6));
        REQUIRE(c6.refutation);
        CHECK(c6.refutation->kind == RefutationKind::NotMaximalTriangleFree);
        CHECK(c6.refutation->maximality.open_pair);
        CHECK(refutation_holds(cycle(6), *c6.refutation));

        GraphBuilder b(3);
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        b.add_edge(0, 2);
        auto k3 = recognize(b.build());
        REQUIRE(k3.refutation);
        CHECK(k3.refutation->maximality.triangle);

        for (const auto &g : {petersen(), fig41(), cayley_6k(2)}) {
            auto r = recognize(g);
            REQUIRE(r.refutation);
            CHECK(r.refutation->kind == RefutationKind::DFourFails);
            REQUIRE(r.refutation->witness);
            CHECK(is_d_witness(g, *r.refutation->witness, r.refutation->level));
            CHECK(refutation_holds(g, *r.refutation));
            CHECK_FALSE(refutation_holds(cycle(5), *r.refutation));
        }
        CHECK_THROWS_AS(recognize(empty_graph(1)), PreconditionError);
        CHECK(to_string(RefutationKind::DFourFails) == "d4-fails");
    }

    TEST_CASE("candidate families by quotient order")
    {
        auto c = candidate_families(14);
        REQUIRE_FALSE(c.empty());
        CHECK(is_andrasfai(c.front()));
        CHECK(c.front() == FamilyId{AndrasfaiId{5}});
        bool has_vega = false;
        for (const auto &f : c)
            has_vega = has_vega || f == FamilyId{VegaId{3, 1, 1}};
        CHECK(has_vega);
        for (const auto &f : candidate_families(13))
            CHECK_FALSE(is_andrasfai(f));
        CHECK(to_string(FamilyId{VegaId{2, 1, 1}}) == "Vega(2,1,1)");
    }
}
