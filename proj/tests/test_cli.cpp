#include "../tools/cli.hpp"

#include "trifree/families.hpp"
#include "trifree/io.hpp"
#include "trifree/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace trifree;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

auto invoke(std::vector<std::string> args, const std::string &stdin_text = "") -> Outcome
{
    args.insert(args.begin(), "trifree");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

auto json_of(const Outcome &o) -> Json
{
    return Json::parse(o.out);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("gen formats")
    {
        auto e = invoke({"gen", "andrasfai", "--k", "2"});
        CHECK(e.code == 0);
        CHECK(read_elist(e.out) == andrasfai({2}));
        auto g6 = invoke({"gen", "--format", "graph6", "graph-n"});
        CHECK(g6.code == 0);
        CHECK(read_graph6(g6.out) == graph_n());
        auto dot = invoke({"gen", "--format", "dot", "vega", "--i", "2", "--mu", "1", "--nu", "1"});
        CHECK(dot.code == 0);
        CHECK(dot.out.find("label=\"x\"") != std::string::npos);
        auto js = invoke({"gen", "--format", "json", "haggkvist"});
        CHECK(js.code == 0);
        CHECK(graph_from_json(json_of(js)).order() == 29);
        auto bl = invoke({"gen", "blowup", "--weights", "1,2,1,1,1"}, write_elist(cycle(5)));
        CHECK(bl.code == 0);
        CHECK(read_graph(bl.out) == blowup({cycle(5), {1, 2, 1, 1, 1}}));
    }

    TEST_CASE("check exit codes follow the verdict")
    {
        auto c5 = write_elist(cycle(5));
        auto ok = invoke({"check", "--d", "4"}, c5);
        CHECK(ok.code == 0);
        CHECK(json_of(ok)["holds"] == true);
        auto bad = invoke({"check", "--d", "4"}, write_elist(fig41()));
        CHECK(bad.code == 1);
        auto r = json_of(bad);
        CHECK(r["results"]["d"]["holds"] == false);
        CHECK(r["command"] == "check");
        CHECK(invoke({"check", "--tf", "--maximal"}, write_elist(cycle(6))).code == 1);
        CHECK(invoke({"check", "--alpha"}, c5).code == 0);
        CHECK(invoke({"check", "--q", "4", "--direct"}, c5).code == 0);
    }

    TEST_CASE("usage and input errors")
    {
        CHECK(invoke({}).code == 2);
        CHECK(invoke({"check"}, write_elist(cycle(5))).code == 2);
        CHECK(invoke({"bogus"}).code == 2);
        CHECK(invoke({"gen", "vega", "--i", "2", "--mu", "5"}).code == 2);
        CHECK(invoke({"paper-verify", "--check", "nope"}).code == 2);
        CHECK(invoke({"paper-verify", "--check", "c310", "--check", "cube_lemma", "--params", "{}"}).code == 2);
        CHECK(invoke({"check", "--tf"}, "p tf 3\ne 0 5\n").code == 3);
        CHECK(invoke({"check", "--tf", "--input", "/nonexistent/file"}).code == 3);
        CHECK(invoke({"gen", "vega", "--i", "1"}).code == 3);
        CHECK(invoke({"census", "--n", "13"}).code == 3);
        CHECK(invoke({"paper-verify", "--check", "c310", "--params", "{"}).code == 3);
        CHECK(invoke({"--help"}).code == 0);
        auto v = invoke({"--version"});
        CHECK(v.code == 0);
        CHECK(v.out.find("0.1.0") != std::string::npos);
    }

    TEST_CASE("reports are deterministic unless timing is requested")
    {
        auto a = invoke({"recognize"}, write_elist(blowup(haggkvist_spec())));
        auto b = invoke({"recognize"}, write_elist(blowup(haggkvist_spec())));
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(json_of(a)["result"]["certificate"]["family"]["name"] == "Vega(2,1,1)");
        CHECK_FALSE(json_of(a).contains("elapsed_seconds"));
        auto t = invoke({"--timing", "recognize"}, write_elist(cycle(5)));
        CHECK(json_of(t).contains("elapsed_seconds"));
        CHECK(invoke({"recognize"}, write_elist(petersen())).code == 1);
    }

    TEST_CASE("census, hunt and extremal")
    {
        auto c = invoke({"census", "--n", "6", "--assert"});
        CHECK(c.code == 0);
        CHECK(json_of(c)["invariants_hold"] == true);
        CHECK(invoke({"--jobs", "2", "hunt", "--max-n", "7"}).code == 0);
        auto e = invoke({"extremal", "--n", "10", "--s", "5", "--search"});
        CHECK(e.code == 0);
        auto j = json_of(e);
        CHECK(j["formula"] == 25);
        CHECK(j["search"]["best_found"] == 25);
        CHECK(invoke({"extremal", "--n", "10", "--s", "4"}).code == 0);
    }

    TEST_CASE("paper-verify runs a check with parameters")
    {
        auto r = invoke({"paper-verify", "--check", "edge_identity"});
        CHECK(r.code == 0);
        auto j = json_of(r);
        CHECK(j["passed"] == true);
        CHECK(j["reports"][0]["name"] == "edge_identity");
        auto failing = invoke({"paper-verify", "--check", "cube_lemma", "--params",
                               Json{{"graph6", write_graph6(cube())}, {"require_d4", false}}.dump()});
        CHECK(failing.code == 1);
        CHECK_FALSE(json_of(failing)["reports"][0]["counterexample"].is_null());
    }

    TEST_CASE("output file")
    {
        auto path = (std::filesystem::temp_directory_path() / "trifree_cli_test.g6").string();
        auto r = invoke({"-o", path, "gen", "--format", "graph6", "cube"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(read_graph6(read_file(path)) == cube());
        std::remove(path.c_str());
    }
}
