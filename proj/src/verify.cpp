#include "trifree/verify.hpp"

#include "trifree/canon.hpp"
#include "trifree/families.hpp"
#include "trifree/io.hpp"
#include "trifree/properties.hpp"
#include "trifree/recognition.hpp"
#include "trifree/search.hpp"
#include "trifree/twins.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace trifree {

auto ext_set(const Graph &g, const Embedding &copy, int index) -> ExtSet
{
    using L = UpsilonLabeling;
    if (copy.pattern_order() != 11)
        throw PreconditionError("ext_set needs an embedding of the Mycielski-Grotzsch graph");
    auto common = g.neighbors(copy.map[L::a(index - 1)]);
    common &= g.neighbors(copy.map[L::a(index + 1)]);
    common &= g.neighbors(copy.map[L::b(index)]);
    return {copy, ((index % 5) + 5) % 5, common};
}

auto is_small(const LabeledVega &vega, const VertexSet &t) -> bool
{
    const auto &g = vega.graph;
    const auto &lab = vega.labels;
    for (Vertex p = t.first(); p >= 0; p = t.next(p))
        for (Vertex q = t.next(p); q >= 0; q = t.next(q))
            if (g.adjacent(p, q))
                return false;
    bool outer = t.test(lab.x) || (lab.y && t.test(*lab.y));
    std::set<Colour> met;
    for (Vertex p = t.first(); p >= 0; p = t.next(p))
        if (lab.is_inner(p))
            met.insert(lab.colour_of_label(lab.inner_label(p)));
    return outer && met.size() == 2;
}

namespace {

    struct Context {
        std::string name;
        Json params;
        std::mt19937_64 rng;
        CheckOptions options;
        Json details = Json::object();
        std::optional<Json> counterexample;

        auto failed() const -> bool { return counterexample.has_value(); }

        /// Records the first failure only; rerun holds the parameters that
        /// reproduce it with this check.
        void fail(const std::string &reason, const Graph &g, Json rerun, Json extra = Json::object())
        {
            if (counterexample)
                return;
            Json c = Json::object();
            c["reason"] = reason;
            c["graph"] = graph_json(g);
            for (auto &[key, value] : extra.items())
                c[key] = value;
            c["rerun"] = {{"check", name}, {"params", std::move(rerun)}};
            counterexample = std::move(c);
        }

        template <class T>
        auto param(const char *key, T fallback) -> T
        {
            if (!params.contains(key))
                params[key] = fallback;
            return params.at(key).template get<T>();
        }

        auto has(const char *key) const -> bool { return params.contains(key); }

        auto uniform(int lo, int hi) -> int { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    };

    auto range(int lo, int hi) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }

    auto all_vega(int i_lo, int i_hi) -> std::vector<VegaId>
    {
        std::vector<VegaId> out;
        for (int i = i_lo; i <= i_hi; ++i)
            for (int mu = 0; mu <= 1; ++mu)
                for (int nu = 0; nu <= 1; ++nu)
                    out.push_back({i, mu, nu});
        return out;
    }

    auto vega_list(Context &ctx, const char *key, const std::vector<VegaId> &defaults) -> std::vector<VegaId>
    {
        std::vector<std::vector<int>> fallback;
        for (auto id : defaults)
            fallback.push_back({id.i, id.mu, id.nu});
        std::vector<VegaId> out;
        for (const auto &t : ctx.param(key, fallback)) {
            if (t.size() != 3)
                throw PreconditionError(std::string(key) + " entries must be [i, mu, nu]");
            out.push_back({t[0], t[1], t[2]});
        }
        return out;
    }

    auto id_json(const VegaId &id) -> Json { return Json::array({id.i, id.mu, id.nu}); }

    auto random_weights(Context &ctx, int n, int max_weight) -> std::vector<int>
    {
        std::vector<int> w(n);
        for (auto &x : w)
            x = ctx.uniform(1, max_weight);
        return w;
    }

    struct Member {
        std::string label;
        Graph graph;
    };

    /// Andrasfai graphs, Vega graphs and seeded random blow-ups of them; a
    /// single graph when the parameters carry graph6.
    auto catalog(Context &ctx) -> std::vector<Member>
    {
        if (ctx.has("graph6"))
            return {{"input", read_graph6(ctx.params.at("graph6").get<std::string>())}};
        int k_max = ctx.param("k_max", 6);
        int i_max = ctx.param("i_max", 4);
        int count = ctx.param("blowups", 30);
        int max_weight = ctx.param("max_weight", 3);
        if (max_weight < 1 || count < 0)
            throw PreconditionError("blowups must be non-negative and max_weight positive");
        std::vector<Member> templates;
        for (int k = 1; k <= k_max; ++k)
            templates.push_back({to_string(AndrasfaiId{k}), andrasfai({k})});
        for (auto id : all_vega(2, i_max))
            templates.push_back({to_string(id), vega(id).graph});
        auto members = templates;
        for (int b = 0; b < count; ++b) {
            const auto &t = templates[ctx.uniform(0, static_cast<int>(templates.size()) - 1)];
            BlowupSpec spec{t.graph, random_weights(ctx, t.graph.order(), max_weight)};
            std::string label = "blowup of " + t.label + " [";
            for (std::size_t v = 0; v < spec.weights.size(); ++v)
                label += (v ? "," : "") + std::to_string(spec.weights[v]);
            members.push_back({label + "]", blowup(spec)});
        }
        return members;
    }

    /// Runs visit on the catalog members in the class D(4) (all of them when
    /// require_d4 is false) and fills the usual counters.
    void for_each_member(Context &ctx, const std::function<void(const Member &)> &visit)
    {
        bool require = ctx.param("require_d4", true);
        int examined = 0;
        int skipped = 0;
        for (const auto &m : catalog(ctx)) {
            if (require && !in_class_d4(m.graph)) {
                ++skipped;
                continue;
            }
            ++examined;
            visit(m);
            if (ctx.failed())
                break;
        }
        ctx.details["members_examined"] = examined;
        ctx.details["members_skipped_not_d4"] = skipped;
    }

    auto graph_rerun(Context &ctx, const Graph &g) -> Json
    {
        return {{"graph6", write_graph6(g)}, {"require_d4", ctx.params.value("require_d4", true)}};
    }

    // ----------------------------------------------------------------------

    void check_c310(Context &ctx)
    {
        Json per_i = Json::array();
        for (int i : ctx.param("i", range(2, 4))) {
            auto full = vega({i, 0, 0});
            auto target = vega({i, 1, 1}).graph;
            const auto &g = full.graph;
            auto target_degrees = degree_profile(target).degrees;
            std::sort(target_degrees.begin(), target_degrees.end());
            std::set<std::pair<Vertex, Vertex>> pairs;
            for (Vertex q = 0; q < g.order(); ++q)
                for (Vertex z = q + 1; z < g.order(); ++z) {
                    std::vector<Vertex> removed{q, z};
                    auto h = g.without(removed);
                    if (h.edge_count() != target.edge_count())
                        continue;
                    auto degrees = degree_profile(h).degrees;
                    std::sort(degrees.begin(), degrees.end());
                    if (degrees != target_degrees || !isomorphic(h, target))
                        continue;
                    pairs.insert({q, z});
                    if (g.adjacent(q, z))
                        ctx.fail("deleting an edge yields the (1,1) Vega graph", g, {{"i", {i}}},
                                 {{"pair", {full.labels.name(q), full.labels.name(z)}}});
                }
            bool closed = true;
            for (const auto &gen : automorphism_group(g).generators)
                for (auto [q, z] : pairs) {
                    Vertex lo = std::min(gen(q), gen(z)), hi = std::max(gen(q), gen(z));
                    if (!pairs.count({lo, hi}))
                        closed = false;
                }
            Vertex y = *full.labels.y, last = *full.labels.inner_vertex(2 * i - 1);
            bool has_defining = pairs.count({std::min(y, last), std::max(y, last)}) > 0;
            if (!closed)
                ctx.fail("pair set is not closed under automorphisms", g, {{"i", {i}}});
            if (!has_defining)
                ctx.fail("the defining deletion {y, 2i-1} is missing", g, {{"i", {i}}});
            Json names = Json::array();
            for (auto [q, z] : pairs)
                names.push_back({full.labels.name(q), full.labels.name(z)});
            per_i.push_back({{"i", i}, {"pairs", names}, {"closed_under_automorphisms", closed}});
        }
        ctx.details["instances"] = per_i;
    }

    void check_degree_table(Context &ctx)
    {
        Json per_i = Json::array();
        for (int i : ctx.param("i", range(2, 6))) {
            auto lv = vega({i, 0, 0});
            const auto &lab = lv.labels;
            auto expected = [&](Vertex v) {
                auto name = lab.name(v);
                if (name == "a" || name == "b" || name == "u" || name == "v")
                    return i + 3;
                if (name == "x" || name == "y")
                    return 4;
                return i + 2;
            };
            for (Vertex v = 0; v < lv.graph.order(); ++v)
                if (lv.graph.degree(v) != expected(v))
                    ctx.fail("degree of " + lab.name(v) + " is " + std::to_string(lv.graph.degree(v)) + ", expected " +
                                 std::to_string(expected(v)),
                             lv.graph, {{"i", {i}}});
            per_i.push_back({{"i", i},
                             {"outer_degree", i + 3},
                             {"inner_degree", i + 2},
                             {"xy_degree", 4}});
        }
        ctx.details["instances"] = per_i;
    }

    void check_edge_identity(Context &ctx)
    {
        Json values = Json::array();
        for (int i : ctx.param("i", range(2, 6))) {
            auto full = vega({i, 0, 0}).graph;
            auto reduced = vega({i, 1, 1}).graph;
            auto diff = static_cast<int>(full.edge_count()) - static_cast<int>(reduced.edge_count());
            values.push_back(diff);
            if (diff != i + 6)
                ctx.fail("edge difference " + std::to_string(diff) + " differs from i+6", full, {{"i", {i}}});
        }
        ctx.details["values"] = values;
    }

    void check_cube_lemma(Context &ctx)
    {
        auto q = cube();
        for_each_member(ctx, [&](const Member &m) {
            if (auto e = find_induced(m.graph, q))
                ctx.fail("induced cube in " + m.label, m.graph, graph_rerun(ctx, m.graph), {{"embedding", e->map}});
        });
    }

    void check_graph_n_lemma(Context &ctx)
    {
        // N plus any set of c-c edges that keeps it triangle-free: every
        // labelled copy of N as a subgraph of a triangle-free graph is an
        // induced copy of exactly one of these.
        auto base = graph_n();
        std::vector<Graph> variants;
        const std::array<Edge, 3> cc{Edge{6, 7}, Edge{6, 8}, Edge{7, 8}};
        for (int mask = 0; mask < 8; ++mask) {
            if (mask == 7)
                continue;
            auto edges = base.edges();
            for (int t = 0; t < 3; ++t)
                if (mask >> t & 1)
                    edges.push_back(cc[t]);
            variants.push_back(Graph::from_edge_list(9, edges));
        }
        std::size_t copies = 0;
        for_each_member(ctx, [&](const Member &m) {
            const auto &g = m.graph;
            for (const auto &variant : variants)
                for_each_induced(g, variant, [&](const Embedding &e) {
                    ++copies;
                    for (int i = 0; i < 3; ++i) {
                        Vertex a = e.map[i], b = e.map[3 + i];
                        Vertex c1 = e.map[6 + (i + 2) % 3], c2 = e.map[6 + (i + 1) % 3];
                        if (g.adjacent(c1, c2))
                            continue;
                        auto common = g.neighbors(a) & g.neighbors(b);
                        common &= g.neighbors(c1);
                        common &= g.neighbors(c2);
                        if (common.empty()) {
                            ctx.fail("copy of N in " + m.label + " violates the conclusion at index " +
                                         std::to_string(i),
                                     g, graph_rerun(ctx, g), {{"embedding", e.map}, {"index", i}});
                            return false;
                        }
                    }
                    return true;
                });
        });
        ctx.details["copies_examined"] = copies;
    }

    void check_beautiful(Context &ctx)
    {
        using L = UpsilonLabeling;
        auto ups = mycielski_grotzsch().graph;
        std::size_t copies = 0;
        std::size_t nonempty_ext = 0;
        std::size_t reliable = 0;
        for_each_member(ctx, [&](const Member &m) {
            const auto &g = m.graph;
            for_each_induced(g, ups, [&](const Embedding &e) {
                ++copies;
                for (int i = 0; i < 5; ++i) {
                    auto common = g.neighbors(e.map[L::a(i - 1)]) & g.neighbors(e.map[L::a(i + 1)]);
                    auto around = g.neighbors(e.map[L::a(i)]);
                    if (!common.is_subset_of(around)) {
                        auto bad = common;
                        bad.subtract(around);
                        ctx.fail("vertex adjacent to a_{i-1}, a_{i+1} but not a_i in " + m.label, g,
                                 graph_rerun(ctx, g), {{"embedding", e.map}, {"index", i}, {"q", bad.first()}});
                        return false;
                    }
                    auto ext = ext_set(g, e, i);
                    if (ext.vertices.empty())
                        ++reliable;
                    else
                        ++nonempty_ext;
                    if (!ext.vertices.is_subset_of(around)) {
                        ctx.fail("Ext set not inside N(a_i) in " + m.label, g, graph_rerun(ctx, g),
                                 {{"embedding", e.map}, {"index", i}});
                        return false;
                    }
                }
                return true;
            });
        });
        ctx.details["copies_examined"] = copies;
        ctx.details["reliable_pairs"] = reliable;
        ctx.details["nonempty_ext_pairs"] = nonempty_ext;
    }

    void check_indep_classification(Context &ctx)
    {
        Json per_id = Json::array();
        for (auto id : vega_list(ctx, "ids", all_vega(2, 4))) {
            auto lv = vega(id);
            const auto &g = lv.graph;
            const auto &lab = lv.labels;
            const int n = g.order();
            auto set_of = [&](std::initializer_list<Vertex> vs) {
                std::uint64_t m = 0;
                for (auto v : vs)
                    m |= std::uint64_t{1} << v;
                return m;
            };
            auto colour_mask = [&](Colour c) {
                std::uint64_t m = 0;
                for (auto v : lab.colour_class(c))
                    m |= std::uint64_t{1} << v;
                return m;
            };
            const auto red = colour_mask(Colour::Red), green = colour_mask(Colour::Green),
                       blue = colour_mask(Colour::Blue);
            std::vector<std::uint64_t> nbr(n);
            for (Vertex v = 0; v < n; ++v)
                for (Vertex w = 0; w < n; ++w)
                    if (g.adjacent(v, w))
                        nbr[v] |= std::uint64_t{1} << w;
            auto between = [](std::uint64_t lo, std::uint64_t t, std::uint64_t hi) {
                return (lo & ~t) == 0 && (t & ~hi) == 0;
            };
            const std::uint64_t outer = set_of({lab.x}) | (lab.y ? set_of({*lab.y}) : 0);
            std::array<std::size_t, 6> hits{};
            std::size_t total = 0;
            auto classify = [&](std::uint64_t t) -> bool {
                int colours = ((t & red) != 0) + ((t & green) != 0) + ((t & blue) != 0);
                if (colours == 3)
                    return false;
                std::array<bool, 6> c{};
                c[0] = std::any_of(nbr.begin(), nbr.end(), [&](std::uint64_t m) { return (t & ~m) == 0; });
                c[1] = id.mu == 1 && between(set_of({lab.u, lab.v, lab.w}), t, set_of({lab.u, lab.v, lab.w, lab.x}));
                if (id.nu == 1)
                    c[2] = between(set_of({lab.b, lab.v, *lab.inner_vertex(id.i - 1)}), t, set_of({lab.b, lab.v}) | red);
                c[3] = between(set_of({lab.c, lab.w, *lab.inner_vertex(0)}), t, set_of({lab.c, lab.w}) | red);
                if (id.nu == 0)
                    c[4] = between(set_of({lab.c, lab.w, *lab.inner_vertex(2 * id.i - 1)}), t,
                                   set_of({lab.c, lab.w}) | green);
                c[5] = (t & outer) != 0 && colours == 2;
                bool any = false;
                for (int k = 0; k < 6; ++k)
                    if (c[k]) {
                        ++hits[k];
                        any = true;
                    }
                return any;
            };
            std::function<void(Vertex, std::uint64_t, std::uint64_t)> grow = [&](Vertex from, std::uint64_t t,
                                                                               std::uint64_t blocked) {
                ++total;
                if (!classify(t)) {
                    std::vector<std::string> names;
                    for (Vertex v = 0; v < n; ++v)
                        if (t >> v & 1)
                            names.push_back(lab.name(v));
                    ctx.fail("independent set fits none of the six cases", g, {{"ids", {id_json(id)}}},
                             {{"set", names}});
                    return;
                }
                for (Vertex v = from; v < n && !ctx.failed(); ++v)
                    if (!(blocked >> v & 1))
                        grow(v + 1, t | std::uint64_t{1} << v, blocked | nbr[v] | std::uint64_t{1} << v);
            };
            grow(0, 0, 0);
            per_id.push_back({{"id", id_json(id)},
                              {"independent_sets", total},
                              {"case_counts", {{"a", hits[0]}, {"b", hits[1]}, {"c", hits[2]}, {"d", hits[3]},
                                               {"e", hits[4]}, {"f", hits[5]}}}});
            if (ctx.failed())
                break;
        }
        ctx.details["instances"] = per_id;
    }

    void check_no_small_neighborhood(Context &ctx)
    {
        int count = ctx.param("blowups", 10);
        int max_weight = ctx.param("max_weight", 3);
        std::size_t vertices = 0;
        for (auto id : vega_list(ctx, "ids", all_vega(2, 4))) {
            auto lv = vega(id);
            const int t = lv.graph.order();
            for (int b = 0; b <= count && !ctx.failed(); ++b) {
                // b = 0 is the template itself.
                BlowupSpec spec{lv.graph, b == 0 ? std::vector<int>(t, 1) : random_weights(ctx, t, max_weight)};
                auto g = blowup(spec);
                auto offsets = blowup_offsets(spec);
                for (Vertex q = 0; q < g.order(); ++q) {
                    ++vertices;
                    VertexSet trace(t);
                    for (Vertex p = 0; p < t; ++p)
                        if (g.adjacent(q, offsets[p]))
                            trace.set(p);
                    if (is_small(lv, trace)) {
                        ctx.fail("neighbourhood trace on the template copy is small", g,
                                 {{"ids", {id_json(id)}}, {"weights", spec.weights}},
                                 {{"weights", spec.weights}, {"q", q}});
                        break;
                    }
                }
            }
            if (ctx.failed())
                break;
        }
        ctx.details["vertices_examined"] = vertices;
    }

    void check_aux_embeddings(Context &ctx)
    {
        auto ups = mycielski_grotzsch().graph;
        Json per_id = Json::array();
        for (auto id : vega_list(ctx, "ids", all_vega(2, 5))) {
            auto lv = vega(id);
            auto paths = aux_paths(id);
            int pi_paths = 0;
            for (const auto &path : paths) {
                if (path.pi_index >= 0)
                    ++pi_paths;
                std::optional<Embedding> e;
                try {
                    e = upsilon_of_path(id, path);
                }
                catch (const std::logic_error &) {
                }
                bool ok = e && is_induced_embedding(lv.graph, ups, *e) && isomorphic(lv.graph.induced(e->map), ups);
                if (!ok) {
                    std::vector<std::string> names;
                    for (auto v : path.p)
                        names.push_back(lv.labels.name(v));
                    ctx.fail("auxiliary path does not give an induced Mycielski-Grotzsch copy", lv.graph,
                             {{"ids", {id_json(id)}}}, {{"path", names}});
                    break;
                }
            }
            per_id.push_back({{"id", id_json(id)}, {"paths", paths.size()}, {"pi_paths", pi_paths}});
            if (ctx.failed())
                break;
        }
        ctx.details["instances"] = per_id;
    }

    struct TwinAttachOutcome {
        std::size_t copies = 0;
        std::optional<std::string> failure;
        Json where;
    };

    /// Twin property for every edge of t and attachment of every vertex, over
    /// every induced copy of t in g.
    auto twin_attach(const Graph &g, const Graph &t) -> TwinAttachOutcome
    {
        TwinAttachOutcome out;
        const int n = g.order();
        const auto t_edges = t.edges();
        std::vector<std::uint64_t> sig(n);
        for_each_induced(g, t, [&](const Embedding &e) {
            ++out.copies;
            for (Vertex v = 0; v < n; ++v) {
                std::uint64_t s = 0;
                for (int p = 0; p < t.order(); ++p)
                    if (g.adjacent(v, e.map[p]))
                        s |= std::uint64_t{1} << p;
                sig[v] = s;
            }
            for (Vertex v = 0; v < n; ++v) {
                bool attached = false;
                for (int p = 0; p < t.order() && !attached; ++p)
                    attached = sig[v] == sig[e.map[p]];
                if (!attached) {
                    out.failure = "vertex is not a twin of any copy vertex";
                    out.where = {{"embedding", e.map}, {"vertex", v}};
                    return false;
                }
            }
            for (const auto &edge : t_edges) {
                auto su = sig[e.map[edge.u]], sv = sig[e.map[edge.v]];
                for (Vertex q = 0; q < n; ++q) {
                    if (sig[q] != su)
                        continue;
                    for (Vertex z = 0; z < n; ++z)
                        if (sig[z] == sv && !g.adjacent(q, z)) {
                            out.failure = "twins of an edge's ends are not adjacent";
                            out.where = {{"embedding", e.map}, {"q", q}, {"z", z}};
                            return false;
                        }
                }
            }
            return true;
        });
        return out;
    }

    void run_twin_attach(Context &ctx, const std::string &label, const Graph &t, const std::vector<Graph> &forbidden,
                         Json rerun_base, int count, int max_weight, Json &per_template)
    {
        std::vector<Graph> graphs;
        if (ctx.has("graph6")) {
            graphs.push_back(read_graph6(ctx.params.at("graph6").get<std::string>()));
        }
        else {
            for (int b = 0; b < count; ++b)
                graphs.push_back(blowup({t, random_weights(ctx, t.order(), max_weight)}));
        }
        std::size_t copies = 0;
        int examined = 0;
        for (const auto &g : graphs) {
            auto rerun = rerun_base;
            rerun["graph6"] = write_graph6(g);
            bool excluded = false;
            for (const auto &f : forbidden)
                if (f.order() <= g.order() && find_induced(g, f))
                    excluded = true;
            if (excluded || !in_class_d4(g)) {
                ctx.fail("instance outside the hypotheses", g, rerun);
                return;
            }
            ++examined;
            auto outcome = twin_attach(g, t);
            copies += outcome.copies;
            if (outcome.copies == 0)
                ctx.fail("no induced copy of " + label, g, rerun);
            else if (outcome.failure)
                ctx.fail(*outcome.failure, g, rerun, outcome.where);
            if (ctx.failed())
                break;
        }
        per_template.push_back({{"template", label}, {"instances", examined}, {"copies_examined", copies}});
    }

    void check_gamma_twin_attach(Context &ctx)
    {
        int count = ctx.param("blowups", 4);
        Json per = Json::array();
        for (int k : ctx.param("k", range(1, 4))) {
            int max_weight = k <= 2 ? 3 : 2;
            run_twin_attach(ctx, to_string(AndrasfaiId{k}), andrasfai({k}), {andrasfai({k + 1})}, {{"k", {k}}}, count,
                            max_weight, per);
            if (ctx.failed())
                break;
        }
        ctx.details["templates"] = per;
    }

    void check_vega_twin_attach(Context &ctx)
    {
        int count = ctx.param("blowups", 3);
        Json per = Json::array();
        for (auto id : vega_list(ctx, "ids", all_vega(2, 3))) {
            auto t = vega(id).graph;
            std::vector<Graph> larger;
            for (auto other : all_vega(2, id.i + 1))
                if (other.order() > id.order() && other.order() <= 2 * id.order())
                    larger.push_back(vega(other).graph);
            run_twin_attach(ctx, to_string(id), t, larger, {{"ids", {id_json(id)}}}, count, 2, per);
            if (ctx.failed())
                break;
        }
        ctx.details["templates"] = per;
    }

    auto group_closure(const std::vector<Permutation> &gens, int n) -> std::size_t
    {
        std::set<std::vector<Vertex>> seen{Permutation::identity(n).map()};
        std::vector<Permutation> frontier{Permutation::identity(n)};
        while (!frontier.empty()) {
            auto p = frontier.back();
            frontier.pop_back();
            for (const auto &g : gens) {
                auto q = g * p;
                if (seen.insert(q.map()).second)
                    frontier.push_back(q);
            }
        }
        return seen.size();
    }

    void check_automorphisms(Context &ctx)
    {
        const std::map<VegaId, std::uint64_t> stated{{{2, 0, 0}, 8}, {{2, 1, 1}, 10}, {{3, 0, 0}, 4},
                                                     {{3, 0, 1}, 4}, {{3, 1, 0}, 2}, {{3, 1, 1}, 2}};
        bool strict = ctx.param("strict", ctx.options.strict_automorphisms);
        Json per_id = Json::array();
        Json findings = Json::array();
        for (auto id : vega_list(ctx, "ids", all_vega(2, 4))) {
            auto g = vega(id).graph;
            std::vector<NamedMap> maps;
            try {
                maps = named_maps(id);
            }
            catch (const std::logic_error &e) {
                ctx.fail(std::string("named map failed validation: ") + e.what(), g, {{"ids", {id_json(id)}}});
                break;
            }
            std::vector<Permutation> autos;
            Json names = Json::array();
            for (const auto &m : maps) {
                auto target = vega(m.target).graph;
                if (!is_isomorphism(g, target, m.perm)) {
                    ctx.fail(m.name + " is not an isomorphism", g, {{"ids", {id_json(id)}}});
                    break;
                }
                names.push_back(m.name);
                if (m.target == id)
                    autos.push_back(m.perm);
            }
            auto order = automorphism_order(g);
            auto generated = group_closure(autos, g.order());
            if (auto it = stated.find(id); it != stated.end() && it->second != order)
                ctx.fail("automorphism group order " + std::to_string(order) + ", expected " +
                             std::to_string(it->second),
                         g, {{"ids", {id_json(id)}}});
            if (generated != order) {
                findings.push_back({{"id", id_json(id)}, {"generated_order", generated}, {"group_order", order}});
                if (strict)
                    ctx.fail("named automorphisms generate a proper subgroup", g,
                             {{"ids", {id_json(id)}}, {"strict", true}},
                             {{"generated_order", generated}, {"group_order", order}});
            }
            per_id.push_back({{"id", id_json(id)},
                              {"order", order},
                              {"named_maps", names},
                              {"generated_order", generated}});
            if (ctx.failed())
                break;
        }
        ctx.details["instances"] = per_id;
        ctx.details["findings"] = findings;
    }

    void check_cayley_d2(Context &ctx)
    {
        Json per_k = Json::array();
        auto hexagon = cycle(6);
        for (int k : ctx.param("k", range(1, 4))) {
            auto g = cayley_6k(k);
            auto verdict = check_d(g, 2);
            bool witnessed = !verdict.holds && verdict.witness && is_d_witness(g, *verdict.witness, verdict.level);
            if (!witnessed) {
                ctx.fail("D(2) not refuted", g, {{"k", {k}}});
                break;
            }
            std::optional<Embedding> found;
            for_each_induced(g, hexagon, [&](const Embedding &e) {
                WeightVector w{std::vector<int>(g.order(), 0)};
                for (auto v : e.map)
                    w.w[v] = 1;
                if (is_d_witness(g, w, 2)) {
                    found = e;
                    return false;
                }
                return true;
            });
            if (!found) {
                ctx.fail("no induced hexagon without a vertex seeing three of it", g, {{"k", {k}}});
                break;
            }
            std::vector<Vertex> listed{0, 2 * k, 3 * k, 4 * k, 5 * k};
            bool closed_walk = true;
            for (std::size_t j = 0; j < listed.size(); ++j)
                closed_walk = closed_walk && g.adjacent(listed[j], listed[(j + 1) % listed.size()]);
            per_k.push_back({{"k", k},
                             {"failing_level", verdict.level},
                             {"witness", weights_json(*verdict.witness)},
                             {"hexagon", found->map},
                             {"listed_cycle", listed},
                             {"listed_cycle_is_closed_walk", closed_walk}});
        }
        ctx.details["instances"] = per_k;
    }

    void check_kappa_blowup(Context &ctx)
    {
        Json per = Json::array();
        for (auto id : vega_list(ctx, "ids", {VegaId{2, 1, 1}})) {
            auto t = vega(id).graph;
            int kappa = 9 * id.i - (6 + id.mu + id.nu);
            int n = 3 * kappa - 1;
            std::optional<BlowupSpec> spec;
            if (id == VegaId{2, 1, 1}) {
                // Carry the Haggkvist weights over to the Vega labelling.
                auto hag = haggkvist_spec();
                if (auto p = isomorphic(hag.base, t)) {
                    std::vector<int> w(t.order());
                    for (Vertex v = 0; v < t.order(); ++v)
                        w[(*p)(v)] = hag.weights[v];
                    spec = BlowupSpec{t, w};
                }
            }
            else if (n <= kExtremalGuard) {
                spec = best_blowup(t, n, kappa);
            }
            if (!spec) {
                ctx.fail("no blow-up on 3*kappa-1 vertices found", t, {{"ids", {id_json(id)}}});
                break;
            }
            auto g = blowup(*spec);
            int alpha = independence_number(g).alpha;
            auto rec = recognize(g);
            bool recognized = rec.certificate && rec.certificate->family == FamilyId{id} && certify(g, *rec.certificate);
            per.push_back({{"id", id_json(id)},
                           {"kappa", kappa},
                           {"order", g.order()},
                           {"alpha", alpha},
                           {"weights", spec->weights},
                           {"min_degree", g.min_degree()},
                           {"recognized", recognized}});
            if (g.order() != n || alpha != kappa || !recognized)
                ctx.fail("blow-up does not meet order 3*kappa-1 with alpha = kappa", g, {{"ids", {id_json(id)}}});
            if (ctx.failed())
                break;
        }
        ctx.details["instances"] = per;
    }

    auto andrasfai_blowup(const Graph &g) -> std::optional<int>
    {
        auto omega = quotient(g, twin_partition(g));
        if ((omega.order() + 1) % 3 != 0)
            return std::nullopt;
        int k = (omega.order() + 1) / 3;
        if (isomorphic(omega, andrasfai({k})))
            return k;
        return std::nullopt;
    }

    void check_hexagon_prop(Context &ctx)
    {
        auto hexagon = cycle(6);
        std::vector<Graph> graphs;
        if (ctx.has("graph6")) {
            graphs.push_back(read_graph6(ctx.params.at("graph6").get<std::string>()));
        }
        else {
            int max_n = ctx.param("max_n", 10);
            for (int n = 2; n <= max_n; ++n) {
                auto batch = maximal_triangle_free_graphs(n, {ctx.options.jobs, false});
                graphs.insert(graphs.end(), batch.begin(), batch.end());
            }
        }
        std::size_t hexagon_free = 0, andrasfai_count = 0;
        for (const auto &g : graphs) {
            if (!is_maximal_triangle_free(g) || g.order() < 2) {
                ctx.fail("input is not maximal triangle-free", g, {{"graph6", write_graph6(g)}});
                break;
            }
            bool no_hexagon = !find_induced(g, hexagon);
            bool is_blowup = andrasfai_blowup(g).has_value();
            hexagon_free += no_hexagon;
            andrasfai_count += is_blowup;
            if (no_hexagon != is_blowup) {
                ctx.fail(no_hexagon ? "hexagon-free but not an Andrasfai blow-up" : "Andrasfai blow-up with a hexagon",
                         g, {{"graph6", write_graph6(g)}});
                break;
            }
        }
        ctx.details["graphs_examined"] = graphs.size();
        ctx.details["hexagon_free"] = hexagon_free;
        ctx.details["andrasfai_blowups"] = andrasfai_count;
    }

    using CheckFn = void (*)(Context &);

    auto registry() -> const std::vector<std::pair<std::string, CheckFn>> &
    {
        static const std::vector<std::pair<std::string, CheckFn>> checks{
            {"c310", check_c310},
            {"degree_table", check_degree_table},
            {"edge_identity", check_edge_identity},
            {"cube_lemma", check_cube_lemma},
            {"graph_n_lemma", check_graph_n_lemma},
            {"beautiful", check_beautiful},
            {"indep_classification", check_indep_classification},
            {"no_small_neighborhood", check_no_small_neighborhood},
            {"aux_embeddings", check_aux_embeddings},
            {"gamma_twin_attach", check_gamma_twin_attach},
            {"vega_twin_attach", check_vega_twin_attach},
            {"automorphisms", check_automorphisms},
            {"cayley_d2", check_cayley_d2},
            {"kappa_blowup", check_kappa_blowup},
            {"hexagon_prop", check_hexagon_prop},
        };
        return checks;
    }

} // namespace

auto check_names() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto &[name, fn] : registry())
        out.push_back(name);
    return out;
}

auto default_seed(const std::string &name) -> std::uint64_t
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

auto run_check(const std::string &name, const Json &params, const CheckOptions &options) -> CheckReport
{
    const auto &checks = registry();
    auto it = std::find_if(checks.begin(), checks.end(), [&](const auto &entry) { return entry.first == name; });
    if (it == checks.end())
        throw UnknownCheck("unknown check '" + name + "'");
    if (!params.is_null() && !params.is_object())
        throw PreconditionError("check parameters must be a JSON object");
    auto start = std::chrono::steady_clock::now();
    Context ctx;
    ctx.name = name;
    ctx.params = params.is_object() ? params : Json::object();
    ctx.options = options;
    std::uint64_t seed = ctx.params.contains("seed") ? ctx.params.at("seed").get<std::uint64_t>() : default_seed(name);
    ctx.rng.seed(seed);
    try {
        it->second(ctx);
    }
    catch (const Json::exception &e) {
        throw PreconditionError(std::string("bad parameter: ") + e.what());
    }
    CheckReport r;
    r.name = name;
    r.parameters = ctx.params;
    r.seed = seed;
    r.passed = !ctx.failed();
    r.details = std::move(ctx.details);
    if (ctx.counterexample) {
        auto rerun = (*ctx.counterexample)["rerun"]["params"];
        rerun["seed"] = seed;
        (*ctx.counterexample)["rerun"]["params"] = rerun;
    }
    r.counterexample = std::move(ctx.counterexample);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

auto report_json(const CheckReport &r, bool with_timing) -> Json
{
    Json j = Json::object();
    j["name"] = r.name;
    j["parameters"] = r.parameters;
    j["seed"] = r.seed;
    j["passed"] = r.passed;
    j["details"] = r.details;
    j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
    if (with_timing)
        j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

} // namespace trifree
