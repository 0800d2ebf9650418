#include "oracles.hpp"

#include "trifree/families.hpp"
#include "trifree/io.hpp"
#include "trifree/report.hpp"

#include <doctest.h>

using namespace trifree;

namespace {

auto path3() -> Graph
{
    GraphBuilder b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    return b.build();
}

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("graph6 matches hand encodings")
    {
        // K2: one pair set -> 100000 -> 32+63 = '_'.
        CHECK(write_graph6(andrasfai({1})) == "A_");
        // P3 0-1-2: bits x01 x02 x12 = 1 0 1 -> 101000 -> 40+63 = 'g'.
        CHECK(write_graph6(path3()) == "Bg");
        // C5 0-1-2-3-4-0: 1010 0110 01 -> 101001 'h', 1001 00 'c'.
        CHECK(write_graph6(cycle(5)) == "Dhc");
        CHECK(read_graph6("Dhc") == cycle(5));
        CHECK(read_graph6(">>graph6<<A_\n") == andrasfai({1}));
        CHECK(write_graph6(empty_graph(1)) == "@");
    }

    TEST_CASE("graph6 multi-byte size field")
    {
        auto g = empty_graph(63);
        auto text = write_graph6(g);
        CHECK(text.substr(0, 4) == std::string{'~', '?', '?', '~'});
        CHECK(read_graph6(text) == g);
    }

    TEST_CASE("round trips on random graphs")
    {
        std::mt19937_64 rng(71);
        for (int t = 0; t < 200; ++t) {
            int n = 1 + static_cast<int>(rng() % 80);
            auto g = oracle::random_graph(rng, n, 0.2 + 0.6 * (t % 5) / 5.0);
            CHECK(read_graph6(write_graph6(g)) == g);
            CHECK(read_elist(write_elist(g)) == g);
            CHECK(read_graph(write_elist(g)) == g);
            CHECK(read_graph(write_graph6(g)) == g);
            CHECK(graph_from_json(graph_json(g)) == g);
        }
    }

    TEST_CASE("elist is tolerant of whitespace, comments and order")
    {
        auto g = read_elist("# a pentagon\n  p   tf 5\ne 3 4\n\ne 0 1 # first\n e 1 2\ne 4 0\n\te 2 3\n");
        CHECK(g == cycle(5));
        CHECK(write_elist(path3()) == "p tf 3\ne 0 1\ne 1 2\n");
    }

    TEST_CASE("elist errors")
    {
        CHECK_THROWS_AS(read_elist("e 0 1\n"), FormatError);
        CHECK_THROWS_AS(read_elist(""), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\ne 0 1\ne 1 0\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\ne 1 1\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\ne 0 3\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\ne 0 x\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\ne 0 1 2\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\nq 0 1\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 0\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p tf 3\np tf 3\n"), FormatError);
        CHECK_THROWS_AS(read_elist("p graph 3\n"), FormatError);
        try {
            read_elist("p tf 3\ne 0 1\ne 0 9\n");
        }
        catch (const FormatError &e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("graph6 errors")
    {
        CHECK_THROWS_AS(read_graph6(""), FormatError);
        CHECK_THROWS_AS(read_graph6("Dh"), FormatError);
        CHECK_THROWS_AS(read_graph6("Dhcc"), FormatError);
        CHECK_THROWS_AS(read_graph6("Dhd"), FormatError);
        CHECK_THROWS_AS(read_graph6("A_ A_"), FormatError);
        CHECK_THROWS_AS(read_graph6("?"), FormatError);
    }

    TEST_CASE("DOT export")
    {
        auto dot = write_dot(path3(), {"a", "b", "c"}, "P");
        CHECK(dot.find("graph P {") == 0);
        CHECK(dot.find("1 [label=\"b\"]") != std::string::npos);
        CHECK(dot.find("1 -- 2;") != std::string::npos);
        CHECK(write_dot(path3()).find("label") == std::string::npos);
    }

    TEST_CASE("JSON helpers keep a fixed key order")
    {
        auto j = graph_json(cycle(5));
        std::vector<std::string> keys;
        for (auto &[k, v] : j.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"order", "edges", "graph6"});
        CHECK(j.dump() == graph_json(cycle(5)).dump());
        CHECK_THROWS_AS(graph_from_json(Json::object()), FormatError);
    }
}
