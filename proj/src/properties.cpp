#include "trifree/properties.hpp"

#include "trifree/twins.hpp"

#include <algorithm>
#include <numeric>

namespace trifree {

namespace {

    auto rows_intersect(const Graph &g, Vertex u, Vertex v) -> bool
    {
        auto a = g.row(u);
        auto b = g.row(v);
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & b[w])
                return true;
        return false;
    }

} // namespace

auto find_triangle(const Graph &g) -> std::optional<Triangle>
{
    const int words = g.words_per_row();
    for (Vertex u = 0; u < g.order(); ++u) {
        auto ru = g.row(u);
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v))
                continue;
            auto rv = g.row(v);
            for (int w = (v + 1) >> 6; w < words; ++w) {
                auto bits = ru[w] & rv[w];
                if (w == (v + 1) >> 6 && ((v + 1) & 63) != 0)
                    bits &= ~std::uint64_t{0} << ((v + 1) & 63);
                if (bits)
                    return Triangle{u, v, w * 64 + std::countr_zero(bits)};
            }
        }
    }
    return std::nullopt;
}

auto is_triangle_free(const Graph &g) -> bool
{
    return !find_triangle(g);
}

auto check_maximal_triangle_free(const Graph &g) -> MaximalityReport
{
    MaximalityReport r;
    r.triangle = find_triangle(g);
    if (r.triangle)
        return r;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !rows_intersect(g, u, v)) {
                r.open_pair = Edge{u, v};
                return r;
            }
    r.holds = true;
    return r;
}

auto is_maximal_triangle_free(const Graph &g) -> bool
{
    return check_maximal_triangle_free(g).holds;
}

// Independent sets

namespace {

    class WeightedIndependentSearch {
    public:
        WeightedIndependentSearch(const Graph &g, std::span<const int> weights) : g_(g), weights_(weights) {}

        auto run(const VertexSet &within) -> std::vector<Vertex>
        {
            std::vector<Vertex> chosen;
            best_weight_ = -1;
            search(within, chosen, 0);
            return best_;
        }

    private:
        // Greedy clique cover: every independent set takes at most one vertex
        // per clique, so the sum of clique maxima bounds the achievable weight.
        auto cover_bound(const VertexSet &cand) const -> long long
        {
            long long bound = 0;
            VertexSet left = cand;
            for (Vertex v = left.first(); v >= 0; v = left.first()) {
                VertexSet common = g_.neighbors(v) & left;
                int heaviest = weights_[v];
                left.reset(v);
                for (Vertex u = common.first(); u >= 0; u = common.next(u)) {
                    if (!common.test(u))
                        continue;
                    heaviest = std::max(heaviest, weights_[u]);
                    left.reset(u);
                    common &= g_.neighbors(u);
                }
                bound += heaviest;
            }
            return bound;
        }

        void search(const VertexSet &cand, std::vector<Vertex> &chosen, long long weight)
        {
            if (cand.empty()) {
                if (weight > best_weight_) {
                    best_weight_ = weight;
                    best_ = chosen;
                }
                return;
            }
            if (weight + cover_bound(cand) <= best_weight_)
                return;
            Vertex pivot = -1;
            int pivot_degree = -1;
            cand.for_each([&](Vertex v) {
                int d = (g_.neighbors(v) & cand).count();
                if (d > pivot_degree) {
                    pivot = v;
                    pivot_degree = d;
                }
            });
            if (pivot_degree == 0) {
                auto all = chosen;
                long long total = weight;
                cand.for_each([&](Vertex v) {
                    all.push_back(v);
                    total += weights_[v];
                });
                if (total > best_weight_) {
                    best_weight_ = total;
                    best_ = std::move(all);
                }
                return;
            }
            VertexSet with = cand;
            with.subtract(g_.neighbors(pivot));
            with.reset(pivot);
            chosen.push_back(pivot);
            search(with, chosen, weight + weights_[pivot]);
            chosen.pop_back();
            VertexSet without = cand;
            without.reset(pivot);
            search(without, chosen, weight);
        }

        const Graph &g_;
        std::span<const int> weights_;
        long long best_weight_ = -1;
        std::vector<Vertex> best_;
    };

    auto weight_of(std::span<const int> w, std::span<const Vertex> vs) -> long long
    {
        long long total = 0;
        for (auto v : vs)
            total += w[v];
        return total;
    }

} // namespace

auto max_weight_independent_set(const Graph &g, std::span<const int> weights, const VertexSet &within)
    -> std::vector<Vertex>
{
    if (static_cast<int>(weights.size()) != g.order() || within.size() != g.order())
        throw PreconditionError("weights and vertex set must match the graph order");
    auto set = WeightedIndependentSearch(g, weights).run(within);
    std::sort(set.begin(), set.end());
    return set;
}

auto independence_number(const Graph &g) -> IndependenceResult
{
    auto tp = twin_partition(g);
    auto q = quotient(g, tp);
    auto sizes = tp.class_sizes();
    auto classes = max_weight_independent_set(q, sizes, VertexSet::full(q.order()));
    IndependenceResult r;
    for (auto c : classes)
        for (auto v : tp.classes[c])
            r.witness.push_back(v);
    std::sort(r.witness.begin(), r.witness.end());
    r.alpha = static_cast<int>(r.witness.size());
    return r;
}

// Weightings

auto WeightVector::total() const -> int
{
    return std::accumulate(w.begin(), w.end(), 0);
}

auto WeightVector::support() const -> std::vector<Vertex>
{
    std::vector<Vertex> s;
    for (Vertex v = 0; v < static_cast<int>(w.size()); ++v)
        if (w[v] > 0)
            s.push_back(v);
    return s;
}

auto max_coverage(const Graph &g, const WeightVector &w) -> Coverage
{
    if (static_cast<int>(w.w.size()) != g.order())
        throw PreconditionError("weighting does not match the graph order");
    Coverage best;
    for (Vertex y = 0; y < g.order(); ++y) {
        int c = 0;
        g.neighbors(y).for_each([&](Vertex v) { c += w.w[v]; });
        if (best.vertex < 0 || c > best.value)
            best = {y, c};
    }
    return best;
}

auto is_d_witness(const Graph &g, const WeightVector &w, int m) -> bool
{
    if (static_cast<int>(w.w.size()) != g.order() || w.total() != 3 * m)
        return false;
    if (std::any_of(w.w.begin(), w.w.end(), [](int x) { return x < 0; }))
        return false;
    return max_coverage(g, w).value <= m;
}

namespace {

    // Depth-first enumeration of weightings with total 3m, assigning vertices
    // in index order. A branch dies as soon as some coverage exceeds m, when
    // the remaining weight cannot be placed without exceeding it, or when the
    // degree-weighted sum already exceeds n*m (the coverages sum to exactly
    // Σ w(v) d(v)).
    class DWitnessSearch {
    public:
        DWitnessSearch(const Graph &g, int m, const std::function<bool(const WeightVector &)> &visit)
            : g_(g), m_(m), n_(g.order()), visit_(visit), cov_(n_, 0), w_(n_, 0), suffix_min_degree_(n_ + 1, 0)
        {
            for (Vertex v = 0; v < n_; ++v) {
                nbrs_.push_back(g.neighbors(v).members());
                degree_.push_back(static_cast<int>(nbrs_.back().size()));
            }
            for (Vertex v = n_ - 1; v >= 0; --v)
                suffix_min_degree_[v] = v == n_ - 1 ? degree_[v] : std::min(degree_[v], suffix_min_degree_[v + 1]);
        }

        void run() { extend(0, 3 * m_, 0); }

    private:
        auto cap(Vertex v, int remaining) const -> int
        {
            int c = remaining;
            for (auto y : nbrs_[v])
                c = std::min(c, m_ - cov_[y]);
            return c;
        }

        auto extend(Vertex v, int remaining, long long degree_sum) -> bool
        {
            if (remaining == 0)
                return visit_(WeightVector{w_});
            if (v == n_)
                return true;
            if (degree_sum + static_cast<long long>(remaining) * suffix_min_degree_[v] > static_cast<long long>(n_) * m_)
                return true;
            long long room = 0;
            for (Vertex u = v; u < n_ && room < remaining; ++u)
                room += cap(u, remaining);
            if (room < remaining)
                return true;
            for (int x = cap(v, remaining); x >= 0; --x) {
                w_[v] = x;
                for (auto y : nbrs_[v])
                    cov_[y] += x;
                bool go_on = extend(v + 1, remaining - x, degree_sum + static_cast<long long>(x) * degree_[v]);
                for (auto y : nbrs_[v])
                    cov_[y] -= x;
                w_[v] = 0;
                if (!go_on)
                    return false;
            }
            return true;
        }

        const Graph &g_;
        int m_;
        int n_;
        const std::function<bool(const WeightVector &)> &visit_;
        std::vector<std::vector<Vertex>> nbrs_;
        std::vector<int> degree_;
        std::vector<int> cov_;
        std::vector<int> w_;
        std::vector<int> suffix_min_degree_;
    };

    // Enumeration for Q(m) on graphs with triangles: a branch dies once the
    // partial weighting already has a certificate (adding weight keeps it).
    class QWitnessSearch {
    public:
        QWitnessSearch(const Graph &g, int m) : g_(g), m_(m), n_(g.order()), w_(n_, 0) {}

        auto run() -> std::optional<WeightVector>
        {
            extend(0, 3 * m_);
            return found_;
        }

    private:
        auto certified_by(Vertex v) const -> bool
        {
            WeightVector w{w_};
            auto supp = VertexSet::from(n_, w.support());
            if (weight_of(w_, max_weight_independent_set(g_, w_, supp)) >= m_ + 2)
                return true;
            bool hit = false;
            g_.neighbors(v).for_each([&](Vertex y) {
                if (!hit && weight_of(w_, max_weight_independent_set(g_, w_, g_.neighbors(y) & supp)) >= m_ + 1)
                    hit = true;
            });
            return hit;
        }

        auto extend(Vertex v, int remaining) -> bool
        {
            if (remaining == 0) {
                found_ = WeightVector{w_};
                return false;
            }
            if (v == n_)
                return true;
            int top = std::min(remaining, g_.degree(v) > 0 ? m_ : m_ + 1);
            for (int x = top; x >= 0; --x) {
                w_[v] = x;
                if (x == 0 || !certified_by(v))
                    if (!extend(v + 1, remaining - x))
                        return false;
                w_[v] = 0;
            }
            return true;
        }

        const Graph &g_;
        int m_;
        int n_;
        std::vector<int> w_;
        std::optional<WeightVector> found_;
    };

    auto lift(const TwinPartition &tp, const WeightVector &on_quotient, int n) -> WeightVector
    {
        WeightVector w{std::vector<int>(n, 0)};
        for (int c = 0; c < tp.size(); ++c)
            w.w[tp.representative(c)] = on_quotient.w[c];
        return w;
    }

    template <typename Find>
    auto run_levels(const Graph &g, int k, SearchOptions options, Find find)
        -> std::pair<int, std::optional<WeightVector>>
    {
        if (k < 1)
            throw PreconditionError("level k must be at least 1");
        std::optional<TwinPartition> tp;
        Graph q;
        if (options.use_quotient) {
            tp = twin_partition(g);
            q = quotient(g, *tp);
        }
        for (int m = 1; m <= k; ++m) {
            auto w = options.use_quotient ? find(q, m) : find(g, m);
            if (w)
                return {m, options.use_quotient ? lift(*tp, *w, g.order()) : *w};
        }
        return {k, std::nullopt};
    }

} // namespace

void for_each_d_witness(const Graph &g, int m, const std::function<bool(const WeightVector &)> &visit)
{
    if (m < 1)
        throw PreconditionError("level m must be at least 1");
    DWitnessSearch(g, m, visit).run();
}

auto find_d_witness(const Graph &g, int m) -> std::optional<WeightVector>
{
    std::optional<WeightVector> found;
    for_each_d_witness(g, m, [&](const WeightVector &w) {
        found = w;
        return false;
    });
    return found;
}

auto check_d(const Graph &g, int k, SearchOptions options) -> DVerdict
{
    auto [level, witness] = run_levels(g, k, options, [](const Graph &h, int m) { return find_d_witness(h, m); });
    return {!witness, level, witness};
}

auto q_certificate(const Graph &g, const WeightVector &w, int m) -> std::optional<QCertificate>
{
    if (static_cast<int>(w.w.size()) != g.order())
        throw PreconditionError("weighting does not match the graph order");
    auto supp = VertexSet::from(g.order(), w.support());
    auto best = max_weight_independent_set(g, w.w, supp);
    if (weight_of(w.w, best) >= m + 2)
        return QCertificate{best, static_cast<int>(weight_of(w.w, best)), std::nullopt};
    for (Vertex y = 0; y < g.order(); ++y) {
        auto u = max_weight_independent_set(g, w.w, g.neighbors(y) & supp);
        if (weight_of(w.w, u) < m + 1)
            continue;
        // Keep a shortest prefix of weight at least m+1; it has at most m+1 members.
        std::vector<Vertex> prefix;
        long long acc = 0;
        for (auto v : u) {
            if (acc >= m + 1)
                break;
            prefix.push_back(v);
            acc += w.w[v];
        }
        return QCertificate{prefix, m + 1, y};
    }
    return std::nullopt;
}

auto is_valid_q_certificate(const Graph &g, const WeightVector &w, int m, const QCertificate &c) -> bool
{
    const auto &u = c.independent;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= g.order() || w.w[u[i]] <= 0)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (u[i] == u[j] || g.adjacent(u[i], u[j]))
                return false;
    }
    if (c.index_count < static_cast<int>(u.size()) || c.index_count > weight_of(w.w, u))
        return false;
    if (c.index_count >= m + 2)
        return true;
    if (c.index_count != m + 1 || !c.common_neighbour)
        return false;
    auto y = *c.common_neighbour;
    return y >= 0 && y < g.order() && std::all_of(u.begin(), u.end(), [&](Vertex v) { return g.adjacent(y, v); });
}

auto find_q_witness(const Graph &g, int m) -> std::optional<WeightVector>
{
    if (m < 1)
        throw PreconditionError("level m must be at least 1");
    if (!is_triangle_free(g))
        return QWitnessSearch(g, m).run();
    // Neighbourhoods are independent here, so a Q-witness is exactly a
    // D-witness whose support carries no independent set of weight m+2.
    std::optional<WeightVector> found;
    for_each_d_witness(g, m, [&](const WeightVector &w) {
        auto supp = VertexSet::from(g.order(), w.support());
        if (weight_of(w.w, max_weight_independent_set(g, w.w, supp)) <= m + 1) {
            found = w;
            return false;
        }
        return true;
    });
    return found;
}

auto check_q(const Graph &g, int k, SearchOptions options) -> QVerdict
{
    auto [level, witness] = run_levels(g, k, options, [](const Graph &h, int m) { return find_q_witness(h, m); });
    return {!witness, level, witness};
}

auto in_class_d4(const Graph &g) -> bool
{
    return is_maximal_triangle_free(g) && check_d(g, 4).holds;
}

auto degree_profile(const Graph &g) -> DegreeProfile
{
    DegreeProfile p;
    for (Vertex v = 0; v < g.order(); ++v)
        p.degrees.push_back(g.degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    if (!p.degrees.empty()) {
        p.min = p.degrees.front();
        p.max = p.degrees.back();
    }
    return p;
}

} // namespace trifree
