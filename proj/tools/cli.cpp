#include "cli.hpp"

#include "trifree/canon.hpp"
#include "trifree/families.hpp"
#include "trifree/io.hpp"
#include "trifree/properties.hpp"
#include "trifree/recognition.hpp"
#include "trifree/report.hpp"
#include "trifree/search.hpp"
#include "trifree/twins.hpp"
#include "trifree/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace trifree::cli {

namespace {

    constexpr const char *kVersion = "0.1.0";

    /// Raised for argument combinations CLI11 cannot express.
    class UsageError : public std::invalid_argument {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct Labeled {
        Graph graph;
        std::vector<std::string> labels;
    };

    auto expanded_labels(const BlowupSpec &spec, const std::vector<std::string> &base) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (std::size_t v = 0; v < spec.weights.size(); ++v)
            for (int c = 0; c < spec.weights[v]; ++c)
                out.push_back((base.empty() ? std::to_string(v) : base[v]) + "." + std::to_string(c));
        return out;
    }

    auto indexed(const std::string &prefix, int from, int count) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (int j = 0; j < count; ++j)
            out.push_back(prefix + std::to_string(from + j));
        return out;
    }

    auto concat(std::vector<std::string> a, const std::vector<std::string> &b) -> std::vector<std::string>
    {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    auto upsilon_labels() -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (Vertex v = 0; v < 11; ++v)
            out.push_back(UpsilonLabeling::name(v));
        return out;
    }

    auto parse_weights(const std::string &text) -> std::vector<int>
    {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                int value = std::stoi(item, &used);
                if (used != item.size())
                    throw std::invalid_argument(item);
                out.push_back(value);
            }
            catch (const std::exception &) {
                throw FormatError("weights must be comma-separated integers, got '" + item + "'");
            }
        }
        return out;
    }

    struct Session {
        Session(std::istream &i, std::ostream &o) : in(i), out(o) {}

        std::istream &in;
        std::ostream &out;
        int jobs = 1;
        bool timing = false;
        std::string output;
        std::string input = "-";
        std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

        auto read_input() -> Graph
        {
            if (input == "-") {
                std::stringstream ss;
                ss << in.rdbuf();
                return read_graph(ss.str());
            }
            return read_graph(read_file(input));
        }

        void emit_text(const std::string &text)
        {
            if (output.empty()) {
                out << text;
                return;
            }
            std::ofstream file(output, std::ios::binary);
            if (!file)
                throw FormatError("cannot write " + output);
            file << text;
        }

        auto report(const std::string &command) -> Json
        {
            Json j;
            j["command"] = command;
            j["tool_version"] = kVersion;
            return j;
        }

        void emit(Json j)
        {
            if (timing)
                j["elapsed_seconds"] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            emit_text(j.dump(2) + "\n");
        }
    };

    auto format_graph(const Labeled &g, const std::string &format, const std::string &name) -> std::string
    {
        if (format == "graph6")
            return write_graph6(g.graph) + "\n";
        if (format == "dot")
            return write_dot(g.graph, g.labels, name);
        if (format == "json")
            return graph_json(g.graph).dump(2) + "\n";
        return write_elist(g.graph);
    }

    auto triangle_json(const Graph &g) -> Json
    {
        Json j;
        auto t = find_triangle(g);
        j["holds"] = !t.has_value();
        j["triangle"] = t ? Json(*t) : Json(nullptr);
        return j;
    }

    auto maximal_json(const Graph &g) -> Json
    {
        auto m = check_maximal_triangle_free(g);
        Json j;
        j["holds"] = m.holds;
        j["triangle"] = m.triangle ? Json(*m.triangle) : Json(nullptr);
        j["open_pair"] = m.open_pair ? Json::array({m.open_pair->u, m.open_pair->v}) : Json(nullptr);
        return j;
    }

    auto dispatch(int argc, const char *const *argv, Session &s, std::ostream &err) -> int
    {
        CLI::App app{"Maximal triangle-free graphs: families, properties D(k)/Q(k), recognition and census", "trifree"};
        app.fallthrough();
        app.require_subcommand(1);
        app.set_version_flag("--version", kVersion);
        app.add_option("--jobs", s.jobs, "Worker threads for enumeration and verification")
            ->check(CLI::PositiveNumber);
        app.add_flag("--timing", s.timing, "Add elapsed time to reports");
        app.add_option("-o,--output", s.output, "Write the result to a file instead of stdout");

        // gen --------------------------------------------------------------
        auto *gen = app.add_subcommand("gen", "Construct a named graph");
        gen->require_subcommand(1);
        std::string format = "elist";
        gen->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"elist", "graph6", "dot", "json"}));
        int k = 1, vi = 2, mu = 0, nu = 0;
        auto *g_andrasfai = gen->add_subcommand("andrasfai", "Andrasfai graph");
        g_andrasfai->add_option("--k", k, "Parameter k >= 1")->required();
        auto *g_vega = gen->add_subcommand("vega", "Vega graph");
        g_vega->add_option("--i", vi, "Parameter i >= 2")->required();
        g_vega->add_option("--mu", mu, "0 or 1")->check(CLI::Range(0, 1));
        g_vega->add_option("--nu", nu, "0 or 1")->check(CLI::Range(0, 1));
        auto *g_myc = gen->add_subcommand("mycielski", "Mycielski-Grotzsch graph");
        auto *g_cube = gen->add_subcommand("cube", "K_{4,4} minus a perfect matching");
        auto *g_n = gen->add_subcommand("graph-n", "The nine-vertex graph N");
        auto *g_cayley = gen->add_subcommand("cayley", "Cayley graph on Z/6k");
        g_cayley->add_option("--k", k, "Parameter k >= 1")->required();
        auto *g_fig41 = gen->add_subcommand("fig41", "Twelve-vertex 4-regular graph failing D(4)");
        auto *g_hag = gen->add_subcommand("haggkvist", "Haggkvist blow-up of the Mycielski-Grotzsch graph");
        bool base_only = false;
        g_hag->add_flag("--base", base_only, "Emit the unexpanded base graph");
        auto *g_blowup = gen->add_subcommand("blowup", "Blow up an input graph");
        std::string weights_text;
        g_blowup->add_option("--weights", weights_text, "Comma-separated multiplicities")->required();
        g_blowup->add_option("--input", s.input, "Graph file (elist or graph6), '-' for stdin");

        // check ------------------------------------------------------------
        auto *check = app.add_subcommand("check", "Test properties of an input graph");
        bool want_tf = false, want_maximal = false, want_alpha = false, direct = false;
        std::optional<int> want_d, want_q;
        check->add_option("--input", s.input, "Graph file (elist or graph6), '-' for stdin");
        check->add_flag("--tf", want_tf, "Triangle-free");
        check->add_flag("--maximal", want_maximal, "Maximal triangle-free");
        check->add_flag("--alpha", want_alpha, "Report the independence number");
        check->add_option("--d", want_d, "Property D(K)")->check(CLI::PositiveNumber);
        check->add_option("--q", want_q, "Property Q(K)")->check(CLI::PositiveNumber);
        check->add_flag("--direct", direct, "Search the graph itself rather than its twin quotient");

        // recognize ----------------------------------------------------------
        auto *recog = app.add_subcommand("recognize", "Certify or refute a blow-up of an Andrasfai or Vega graph");
        recog->add_option("--input", s.input, "Graph file (elist or graph6), '-' for stdin");

        // census / hunt ------------------------------------------------------
        auto *cen = app.add_subcommand("census", "Classify every maximal triangle-free graph on n vertices");
        int n = 0;
        bool assert_invariants = false, allow_large = false;
        cen->add_option("--n", n, "Order")->required();
        cen->add_flag("--assert", assert_invariants, "Exit 1 when an invariant fails");
        cen->add_flag("--allow-large", allow_large, "Permit orders beyond the default guard");
        auto *hunt = app.add_subcommand("hunt", "Search for graphs with D(3) but not D(4)");
        int max_n = 0;
        hunt->add_option("--max-n", max_n, "Largest order")->required();
        hunt->add_flag("--allow-large", allow_large, "Permit orders beyond the default guard");

        // paper-verify -------------------------------------------------------
        auto *pv = app.add_subcommand("paper-verify", "Run registered instance checks");
        std::vector<std::string> check_list;
        std::string params_text;
        bool strict = false;
        pv->add_option("--check", check_list, "Check name or 'all'")->required();
        pv->add_option("--params", params_text, "JSON object of check parameters");
        pv->add_flag("--strict-automorphisms", strict, "Treat automorphism-group findings as failures");

        // extremal -----------------------------------------------------------
        auto *ext = app.add_subcommand("extremal", "Extremal edge count for order n and independence number s");
        std::int64_t en = 0, es = 0;
        bool do_search = false;
        ext->add_option("--n", en, "Order")->required();
        ext->add_option("--s", es, "Independence bound")->required();
        ext->add_flag("--search", do_search, "Search template blow-ups for the optimum");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e) {
            int code = app.exit(e, s.out, err);
            return code == 0 ? 0 : 2;
        }

        if (gen->parsed()) {
            Labeled g;
            std::string name = "G";
            if (g_andrasfai->parsed()) {
                g.graph = andrasfai({k});
                name = "andrasfai";
            }
            else if (g_vega->parsed()) {
                auto lv = vega({vi, mu, nu});
                g.graph = lv.graph;
                for (Vertex v = 0; v < g.graph.order(); ++v)
                    g.labels.push_back(lv.labels.name(v));
                name = "vega";
            }
            else if (g_myc->parsed()) {
                g = {mycielski_grotzsch().graph, upsilon_labels()};
                name = "mycielski";
            }
            else if (g_cube->parsed()) {
                g = {cube(), concat(indexed("a", 1, 4), indexed("b", 1, 4))};
                name = "cube";
            }
            else if (g_n->parsed()) {
                g = {graph_n(), concat(concat(indexed("a", 0, 3), indexed("b", 0, 3)), indexed("c", 0, 3))};
                name = "N";
            }
            else if (g_cayley->parsed()) {
                g.graph = cayley_6k(k);
                name = "cayley";
            }
            else if (g_fig41->parsed()) {
                g = {fig41(), concat(indexed("a", 1, 8), indexed("b", 1, 4))};
                name = "fig41";
            }
            else if (g_hag->parsed()) {
                auto spec = haggkvist_spec();
                g = base_only ? Labeled{spec.base, upsilon_labels()}
                              : Labeled{blowup(spec), expanded_labels(spec, upsilon_labels())};
                name = "haggkvist";
            }
            else {
                BlowupSpec spec{s.read_input(), parse_weights(weights_text)};
                g = {blowup(spec), expanded_labels(spec, {})};
                name = "blowup";
            }
            s.emit_text(format_graph(g, format, name));
            return 0;
        }

        if (check->parsed()) {
            if (!want_tf && !want_maximal && !want_alpha && !want_d && !want_q)
                throw UsageError("check needs at least one of --tf, --maximal, --alpha, --d, --q");
            auto g = s.read_input();
            auto r = s.report("check");
            r["input"] = graph_json(g);
            Json results = Json::object();
            bool holds = true;
            SearchOptions options{!direct};
            if (want_tf) {
                results["triangle_free"] = triangle_json(g);
                holds = holds && results["triangle_free"]["holds"].get<bool>();
            }
            if (want_maximal) {
                results["maximal_triangle_free"] = maximal_json(g);
                holds = holds && results["maximal_triangle_free"]["holds"].get<bool>();
            }
            if (want_alpha) {
                auto a = independence_number(g);
                results["alpha"] = {{"value", a.alpha}, {"witness", a.witness}};
            }
            if (want_d) {
                auto v = check_d(g, *want_d, options);
                auto j = d_verdict_json(v);
                j["k"] = *want_d;
                results["d"] = j;
                holds = holds && v.holds;
            }
            if (want_q) {
                auto v = check_q(g, *want_q, options);
                auto j = q_verdict_json(v);
                j["k"] = *want_q;
                results["q"] = j;
                holds = holds && v.holds;
            }
            r["results"] = results;
            r["holds"] = holds;
            s.emit(r);
            return holds ? 0 : 1;
        }

        if (recog->parsed()) {
            auto g = s.read_input();
            auto result = recognize(g);
            auto r = s.report("recognize");
            r["input"] = graph_json(g);
            r["result"] = recognition_json(result);
            s.emit(r);
            return result.recognized() ? 0 : 1;
        }

        if (cen->parsed()) {
            auto c = census(n, {s.jobs, allow_large});
            auto r = s.report("census");
            r["result"] = census_json(c);
            bool clean = c.failures.empty() && c.inconsistent.empty();
            r["invariants_hold"] = clean;
            s.emit(r);
            return assert_invariants && !clean ? 1 : 0;
        }

        if (hunt->parsed()) {
            auto h = hunt_conjecture(max_n, {s.jobs, allow_large});
            auto r = s.report("hunt");
            r["result"] = hunt_json(h);
            s.emit(r);
            return h.hits.empty() ? 0 : 1;
        }

        if (pv->parsed()) {
            auto names = check_list;
            if (std::find(names.begin(), names.end(), "all") != names.end()) {
                if (names.size() != 1)
                    throw UsageError("'all' cannot be combined with other check names");
                names = check_names();
            }
            Json params = Json::object();
            if (!params_text.empty()) {
                if (names.size() != 1)
                    throw UsageError("--params applies to a single check");
                try {
                    params = Json::parse(params_text);
                }
                catch (const Json::exception &e) {
                    throw FormatError(std::string("--params is not valid JSON: ") + e.what());
                }
            }
            CheckOptions options{s.jobs, strict};
            for (const auto &name : names) {
                auto known = check_names();
                if (std::find(known.begin(), known.end(), name) == known.end())
                    throw UnknownCheck("unknown check '" + name + "'");
            }
            std::vector<CheckReport> reports(names.size());
            parallel_for(static_cast<int>(names.size()), names.size() > 1 ? s.jobs : 1,
                         [&](int j) { reports[j] = run_check(names[j], params, options); });
            auto r = s.report("paper-verify");
            bool passed = true;
            r["reports"] = Json::array();
            for (const auto &rep : reports) {
                passed = passed && rep.passed;
                r["reports"].push_back(report_json(rep, s.timing));
            }
            r["passed"] = passed;
            s.emit(r);
            return passed ? 0 : 1;
        }

        if (ext->parsed()) {
            auto r = s.report("extremal");
            r["n"] = en;
            r["s"] = es;
            r["k"] = extremal_k(en, es);
            r["formula"] = extremal_formula(en, es);
            int code = 0;
            if (do_search) {
                auto result = search_extremal(static_cast<int>(en), static_cast<int>(es));
                r["search"] = extremal_json(result);
                code = result.best_found == result.formula_value ? 0 : 1;
            }
            s.emit(r);
            return code;
        }
        return 2;
    }

} // namespace

auto run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
    Session s(in, out);
    try {
        return dispatch(argc, argv, s, err);
    }
    catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const UnknownCheck &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace trifree::cli
