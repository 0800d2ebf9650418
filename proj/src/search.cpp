#include "trifree/search.hpp"

#include "trifree/canon.hpp"
#include "trifree/embed.hpp"
#include "trifree/families.hpp"
#include "trifree/properties.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace trifree {

void parallel_for(int count, int jobs, const std::function<void(int)> &fn)
{
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j)
        workers.emplace_back([&, j] {
            try {
                for (int i = next++; i < count; i = next++)
                    fn(i);
            }
            catch (...) {
                errors[j] = std::current_exception();
                next = count;
            }
        });
    for (auto &t : workers)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

namespace {

    // Orderly generation of triangle-free graphs: a child adds one vertex
    // joined to an independent set of its parent. A child is kept iff the new
    // vertex lies in the automorphism orbit of the canonical deletion vertex,
    // which is the vertex at canonical position 0 under degree colouring (so
    // always of minimum degree). Isomorphic siblings are merged per parent.
    class Augmenter {
    public:
        Augmenter(int target, bool maximal_only, std::function<void(const Graph &)> emit)
            : target_(target), maximal_only_(maximal_only), emit_(std::move(emit))
        {
        }

        void expand(const Graph &g)
        {
            if (g.order() == target_) {
                emit_(g);
                return;
            }
            for (auto &child : children(g))
                expand(child);
        }

        auto children(const Graph &g) -> std::vector<Graph>
        {
            const int n = g.order();
            const bool last = n + 1 == target_;
            const bool dominating_only = last && maximal_only_ && n > 0;
            std::vector<Graph> out;
            std::set<Graph> seen;
            std::vector<Vertex> chosen;
            VertexSet candidates = VertexSet::full(n);
            auto visit = [&](const std::vector<Vertex> &s) {
                GraphBuilder b(n + 1);
                for (const auto &e : g.edges())
                    b.add_edge(e.u, e.v);
                for (auto v : s)
                    b.add_edge(v, n);
                auto h = b.build();
                if (last && maximal_only_ && !is_maximal_triangle_free(h))
                    return;
                std::vector<int> degrees(n + 1);
                int min_degree = n + 1;
                for (Vertex v = 0; v <= n; ++v) {
                    degrees[v] = h.degree(v);
                    min_degree = std::min(min_degree, degrees[v]);
                }
                if (degrees[n] != min_degree)
                    return;
                AutomorphismGroup group;
                auto cf = canonical_form_with_group(h, degrees, group);
                Vertex deletion = cf.labeling.inverse()(0);
                if (group.orbit[n] != group.orbit[deletion])
                    return;
                if (!seen.insert(cf.graph).second)
                    return;
                out.push_back(std::move(h));
            };
            independent_sets(g, candidates, 0, chosen, dominating_only, visit);
            return out;
        }

    private:
        template <typename Visit>
        void independent_sets(const Graph &g, const VertexSet &allowed, Vertex from, std::vector<Vertex> &chosen,
                              bool dominating_only, Visit &visit)
        {
            Vertex v = allowed.next(from - 1);
            if (v < 0) {
                if (dominating_only) {
                    // Every vertex outside the set needs a neighbour inside it.
                    VertexSet covered = VertexSet::from(g.order(), chosen);
                    for (auto c : chosen)
                        covered |= g.neighbors(c);
                    if (covered.count() != g.order())
                        return;
                }
                visit(chosen);
                return;
            }
            VertexSet with = allowed;
            with.subtract(g.neighbors(v));
            with.reset(v);
            chosen.push_back(v);
            independent_sets(g, with, v + 1, chosen, dominating_only, visit);
            chosen.pop_back();
            VertexSet without = allowed;
            without.reset(v);
            independent_sets(g, without, v + 1, chosen, dominating_only, visit);
        }

        int target_;
        bool maximal_only_;
        std::function<void(const Graph &)> emit_;
    };

    auto enumerate(int n, bool maximal_only, EnumerationOptions options) -> std::vector<Graph>
    {
        if (n < 1)
            throw PreconditionError("order must be at least 1");
        if (n > kEnumerationGuard && !options.allow_large)
            throw ResourceGuardError("enumeration beyond " + std::to_string(kEnumerationGuard) +
                                     " vertices needs an explicit override");
        Graph k1 = GraphBuilder(1).build();
        if (n == 1)
            return {k1};

        // Collect the roots of independent subtrees sequentially, then expand
        // them in parallel. Canonical augmentation keeps subtrees disjoint up to
        // isomorphism, so the merge only concatenates and sorts.
        int split = std::min(n - 1, std::max(1, n - 4));
        std::vector<Graph> roots;
        Augmenter collector(split, false, [&](const Graph &g) { roots.push_back(g); });
        collector.expand(k1);

        std::vector<std::vector<Graph>> found(roots.size());
        parallel_for(static_cast<int>(roots.size()), options.jobs, [&](int r) {
            Augmenter worker(n, maximal_only, [&](const Graph &g) {
                if (!maximal_only || is_maximal_triangle_free(g))
                    found[r].push_back(canonical_form(g).graph);
            });
            worker.expand(roots[r]);
        });
        std::vector<Graph> all;
        for (auto &part : found)
            for (auto &g : part)
                all.push_back(std::move(g));
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }

} // namespace

auto triangle_free_graphs(int n, EnumerationOptions options) -> std::vector<Graph>
{
    return enumerate(n, false, options);
}

auto maximal_triangle_free_graphs(int n, EnumerationOptions options) -> std::vector<Graph>
{
    if (n < 2)
        throw PreconditionError("maximal triangle-free enumeration needs at least two vertices");
    return enumerate(n, true, options);
}

// Census

auto census_row(const Graph &g) -> CensusRow
{
    CensusRow row;
    row.graph = g;
    row.order = g.order();
    row.min_degree = g.min_degree();
    auto d = check_d(g, 4);
    int failing = d.holds ? 5 : d.level;
    row.d2 = failing > 2;
    row.d3 = failing > 3;
    row.d4 = failing > 4;
    row.q4 = check_q(g, 4).holds;
    auto rec = recognize(g);
    if (rec.certificate)
        row.recognized = rec.certificate->family;
    row.induced_c6 = find_induced(g, cycle(6)).has_value();
    row.contains_upsilon = find_induced(g, mycielski_grotzsch().graph).has_value();
    return row;
}

auto failed_invariants(const CensusRow &row) -> std::vector<std::string>
{
    std::vector<std::string> out;
    bool rec = row.recognized.has_value();
    if (row.d4 != rec)
        out.emplace_back("D(4) holds iff the graph is a blow-up of an Andrasfai or Vega graph");
    if (row.q4 != rec)
        out.emplace_back("Q(4) holds iff the graph is a blow-up of an Andrasfai or Vega graph");
    if (!row.induced_c6 != (rec && is_andrasfai(*row.recognized)))
        out.emplace_back("no induced hexagon iff the graph is a blow-up of an Andrasfai graph");
    if (row.d3 && row.induced_c6 && !row.contains_upsilon)
        out.emplace_back("D(3) and an induced hexagon imply an induced Mycielski-Grotzsch graph");
    return out;
}

auto census(int n, EnumerationOptions options) -> CensusResult
{
    CensusResult result;
    result.n = n;
    auto graphs = maximal_triangle_free_graphs(n, options);
    result.rows.resize(graphs.size());
    std::vector<bool> inconsistent(graphs.size(), false);
    parallel_for(static_cast<int>(graphs.size()), options.jobs, [&](int i) {
        result.rows[i] = census_row(graphs[i]);
        auto rec = recognize(graphs[i]);
        inconsistent[i] = rec.refutation && rec.refutation->kind == RefutationKind::Inconsistent;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (auto &inv : failed_invariants(result.rows[i]))
            result.failures.push_back({graphs[i], inv});
        if (inconsistent[i])
            result.inconsistent.push_back(graphs[i]);
    }
    return result;
}

auto hunt_conjecture(int max_n, EnumerationOptions options) -> HuntResult
{
    HuntResult result;
    result.max_n = max_n;
    result.examined.assign(std::max(0, max_n) + 1, 0);
    for (int n = 2; n <= max_n; ++n) {
        auto graphs = maximal_triangle_free_graphs(n, options);
        result.examined[n] = graphs.size();
        std::vector<char> hit(graphs.size(), 0);
        parallel_for(static_cast<int>(graphs.size()), options.jobs, [&](int i) {
            auto d = check_d(graphs[i], 4);
            // Re-validate directly on the graph rather than its quotient.
            if (!d.holds && d.level == 4) {
                bool d3 = check_d(graphs[i], 3, {.use_quotient = false}).holds;
                bool d4_fails = is_d_witness(graphs[i], *d.witness, 4);
                hit[i] = d3 && d4_fails;
            }
        });
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (hit[i])
                result.hits.push_back(graphs[i]);
    }
    return result;
}

// Extremal search

auto blowup_edge_count(const BlowupSpec &spec) -> std::int64_t
{
    std::int64_t e = 0;
    for (const auto &edge : spec.base.edges())
        e += static_cast<std::int64_t>(spec.weights[edge.u]) * spec.weights[edge.v];
    return e;
}

namespace {

    void maximal_independent_sets(const Graph &g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet> &out)
    {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        // Bron-Kerbosch on the complement: candidates must be non-adjacent to r.
        for (Vertex v = p.first(); v >= 0; v = p.next(v)) {
            VertexSet r2 = r;
            r2.set(v);
            VertexSet p2 = p;
            p2.subtract(g.neighbors(v));
            p2.reset(v);
            VertexSet x2 = x;
            x2.subtract(g.neighbors(v));
            x2.reset(v);
            maximal_independent_sets(g, r2, p2, x2, out);
            p.reset(v);
            x.set(v);
        }
    }

    class BlowupSearch {
    public:
        BlowupSearch(const Graph &t, int n, int s) : t_(t), n_(n), s_(s), w_(t.order(), 0)
        {
            std::vector<VertexSet> mis;
            maximal_independent_sets(t, VertexSet(t.order()), VertexSet::full(t.order()), VertexSet(t.order()), mis);
            sets_.resize(t.order());
            for (std::size_t k = 0; k < mis.size(); ++k)
                mis[k].for_each([&](Vertex v) { sets_[v].push_back(static_cast<int>(k)); });
            load_.assign(mis.size(), 0);
            for (Vertex v = 0; v < t.order(); ++v)
                nbrs_.push_back(t.neighbors(v).members());
        }

        auto run() -> std::optional<BlowupSpec>
        {
            if (t_.order() > n_)
                return std::nullopt;
            extend(0, n_, 0);
            if (best_edges_ < 0)
                return std::nullopt;
            return BlowupSpec{t_, best_};
        }

    private:
        auto cap(Vertex v) const -> int
        {
            int c = s_;
            for (auto k : sets_[v])
                c = std::min(c, s_ - load_[k]);
            return c;
        }

        void extend(Vertex v, int remaining, std::int64_t edges)
        {
            const int t = t_.order();
            if (v == t) {
                if (remaining == 0 && edges > best_edges_) {
                    best_edges_ = edges;
                    best_ = w_;
                }
                return;
            }
            int left = t - v;
            if (remaining < left)
                return;
            long long room = 0;
            for (Vertex u = v; u < t; ++u) {
                int c = cap(u);
                if (c < 1)
                    return;
                room += c;
            }
            if (room < remaining)
                return;
            int top = std::min(cap(v), remaining - (left - 1));
            int gained_per_unit = 0;
            for (auto u : nbrs_[v])
                if (u < v)
                    gained_per_unit += w_[u];
            for (int x = 1; x <= top; ++x) {
                w_[v] = x;
                for (auto k : sets_[v])
                    load_[k] += x;
                extend(v + 1, remaining - x, edges + static_cast<std::int64_t>(x) * gained_per_unit);
                for (auto k : sets_[v])
                    load_[k] -= x;
            }
            w_[v] = 0;
        }

        const Graph &t_;
        int n_;
        int s_;
        std::vector<int> w_;
        std::vector<std::vector<int>> sets_;
        std::vector<int> load_;
        std::vector<std::vector<Vertex>> nbrs_;
        std::int64_t best_edges_ = -1;
        std::vector<int> best_;
    };

} // namespace

auto best_blowup(const Graph &t, int n, int s) -> std::optional<BlowupSpec>
{
    if (!is_triangle_free(t))
        throw PreconditionError("blow-up templates must be triangle-free");
    return BlowupSearch(t, n, s).run();
}

auto search_extremal(int n, int s) -> ExtremalResult
{
    ExtremalResult r;
    r.n = n;
    r.s = s;
    r.formula_value = extremal_formula(n, s);
    r.k = extremal_k(n, s);
    if (n > kExtremalGuard)
        throw ResourceGuardError("extremal search is limited to " + std::to_string(kExtremalGuard) + " vertices");

    std::vector<FamilyId> families;
    for (auto k : {r.k, r.k - 1, r.k + 1})
        if (k >= 1 && 3 * k - 1 <= n)
            families.emplace_back(AndrasfaiId{static_cast<int>(k)});
    for (int i = 2; 3 * i + 5 <= n; ++i)
        for (int mu = 0; mu <= 1; ++mu)
            for (int nu = 0; nu <= 1; ++nu)
                if (VegaId{i, mu, nu}.order() <= n)
                    families.emplace_back(VegaId{i, mu, nu});

    for (const auto &family : families) {
        TemplateBest t{family, best_blowup(template_graph(family), n, s), -1};
        if (t.witness)
            t.edges = blowup_edge_count(*t.witness);
        if (t.edges > r.best_found) {
            r.best_found = t.edges;
            r.witness = t.witness;
            r.witness_family = family;
        }
        r.templates.push_back(std::move(t));
    }
    return r;
}

} // namespace trifree
