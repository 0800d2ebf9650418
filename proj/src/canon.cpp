#include "trifree/canon.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace trifree {

namespace {

    constexpr int kNoJump = INT_MAX;

    // Ordered partition of the vertex set. Cells are contiguous ranges of lab;
    // start[p] is the first position of the cell holding position p and
    // end[s] is one past the last position of the cell starting at s.
    struct Partition {
        std::vector<Vertex> lab;
        std::vector<int> start;
        std::vector<int> end;
        int cells = 0;

        auto discrete(int n) const -> bool { return cells == n; }
    };

    class Canonizer {
    public:
        Canonizer(const Graph &g, std::span<const int> colours) : g_(g), n_(g.order()), words_(g.words_per_row())
        {
            if (!colours.empty() && static_cast<int>(colours.size()) != n_)
                throw PreconditionError("colour vector size does not match graph order");
            colours_.assign(colours.begin(), colours.end());
            if (colours_.empty())
                colours_.assign(n_, 0);
        }

        void run()
        {
            if (n_ == 0)
                return;
            Partition p = initial_partition();
            std::deque<int> queue;
            std::vector<bool> queued(n_, false);
            for (int s = 0; s < n_; s = p.end[s]) {
                queue.push_back(s);
                queued[s] = true;
            }
            refine(p, queue, queued);
            std::vector<Vertex> path;
            search(p, 0, path, true);
        }

        auto labeling() const -> Permutation
        {
            std::vector<Vertex> pos(n_);
            for (int i = 0; i < n_; ++i)
                pos[best_lab_[i]] = i;
            return Permutation(std::move(pos));
        }

        auto group() const -> AutomorphismGroup
        {
            AutomorphismGroup grp;
            for (const auto &gen : generators_)
                grp.generators.emplace_back(gen);
            grp.order = overflow_ ? std::numeric_limits<std::uint64_t>::max() : order_;
            grp.orbit = orbits_of(generators_.size(), {});
            return grp;
        }

        auto overflowed() const -> bool { return overflow_; }

    private:
        auto initial_partition() const -> Partition
        {
            Partition p;
            p.lab.resize(n_);
            std::iota(p.lab.begin(), p.lab.end(), 0);
            std::stable_sort(p.lab.begin(), p.lab.end(), [&](Vertex a, Vertex b) { return colours_[a] < colours_[b]; });
            p.start.assign(n_, 0);
            p.end.assign(n_, 0);
            int s = 0;
            for (int i = 1; i <= n_; ++i) {
                if (i == n_ || colours_[p.lab[i]] != colours_[p.lab[s]]) {
                    for (int k = s; k < i; ++k)
                        p.start[k] = s;
                    p.end[s] = i;
                    ++p.cells;
                    s = i;
                }
            }
            return p;
        }

        auto count_into(Vertex v, const std::vector<std::uint64_t> &mask) const -> int
        {
            auto r = g_.row(v);
            int c = 0;
            for (int w = 0; w < words_; ++w)
                c += std::popcount(r[w] & mask[w]);
            return c;
        }

        // Equitable refinement driven by a FIFO of splitter cells.
        void refine(Partition &p, std::deque<int> &queue, std::vector<bool> &queued)
        {
            std::vector<std::uint64_t> mask(words_);
            std::vector<std::pair<int, Vertex>> keyed;
            while (!queue.empty() && !p.discrete(n_)) {
                int w = queue.front();
                queue.pop_front();
                queued[w] = false;
                std::fill(mask.begin(), mask.end(), 0);
                for (int k = w; k < p.end[w]; ++k)
                    mask[p.lab[k] >> 6] |= std::uint64_t{1} << (p.lab[k] & 63);

                for (int x = 0; x < n_;) {
                    int e = p.end[x];
                    if (e - x == 1) {
                        x = e;
                        continue;
                    }
                    keyed.clear();
                    bool uniform = true;
                    for (int k = x; k < e; ++k) {
                        keyed.emplace_back(count_into(p.lab[k], mask), p.lab[k]);
                        if (keyed.back().first != keyed.front().first)
                            uniform = false;
                    }
                    if (uniform) {
                        x = e;
                        continue;
                    }
                    std::sort(keyed.begin(), keyed.end());
                    int s = x;
                    for (int k = x; k < e; ++k) {
                        p.lab[k] = keyed[k - x].second;
                        bool boundary = k + 1 == e || keyed[k + 1 - x].first != keyed[k - x].first;
                        if (boundary) {
                            for (int t = s; t <= k; ++t)
                                p.start[t] = s;
                            p.end[s] = k + 1;
                            if (s != x)
                                ++p.cells;
                            if (!queued[s]) {
                                queue.push_back(s);
                                queued[s] = true;
                            }
                            s = k + 1;
                        }
                    }
                    x = e;
                }
            }
        }

        auto individualize(const Partition &p, int cell, Vertex v) const -> Partition
        {
            Partition q = p;
            int e = q.end[cell];
            auto it = std::find(q.lab.begin() + cell, q.lab.begin() + e, v);
            std::rotate(q.lab.begin() + cell, it, it + 1);
            q.end[cell] = cell + 1;
            q.end[cell + 1] = e;
            for (int k = cell + 1; k < e; ++k)
                q.start[k] = cell + 1;
            ++q.cells;
            return q;
        }

        auto image_of(const std::vector<Vertex> &lab) const -> std::vector<std::uint64_t>
        {
            std::vector<Vertex> pos(n_);
            for (int i = 0; i < n_; ++i)
                pos[lab[i]] = i;
            std::vector<std::uint64_t> img(static_cast<std::size_t>(n_) * words_, 0);
            for (int i = 0; i < n_; ++i) {
                auto r = g_.row(lab[i]);
                auto *dst = img.data() + static_cast<std::size_t>(i) * words_;
                for (int w = 0; w < words_; ++w)
                    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
                        int j = pos[w * 64 + std::countr_zero(bits)];
                        dst[j >> 6] |= std::uint64_t{1} << (j & 63);
                    }
            }
            return img;
        }

        auto record_automorphism(const std::vector<Vertex> &from, const std::vector<Vertex> &to) -> void
        {
            std::vector<Vertex> gamma(n_);
            for (int i = 0; i < n_; ++i)
                gamma[from[i]] = to[i];
            bool identity = true;
            for (int v = 0; v < n_ && identity; ++v)
                identity = gamma[v] == v;
            if (!identity)
                generators_.push_back(std::move(gamma));
        }

        // Orbit representatives under the generators (among the first `count`)
        // that fix every vertex of `fixed`.
        auto orbits_of(std::size_t count, std::span<const Vertex> fixed) const -> std::vector<Vertex>
        {
            std::vector<Vertex> parent(n_);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](Vertex v) {
                while (parent[v] != v)
                    v = parent[v] = parent[parent[v]];
                return v;
            };
            for (std::size_t k = 0; k < count; ++k) {
                const auto &gen = generators_[k];
                bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return gen[v] == v; });
                if (!fixes)
                    continue;
                for (int v = 0; v < n_; ++v) {
                    auto a = find(v), b = find(gen[v]);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }
            }
            for (int v = 0; v < n_; ++v)
                parent[v] = find(v);
            return parent;
        }

        static auto common_prefix(const std::vector<Vertex> &a, const std::vector<Vertex> &b) -> int
        {
            int k = 0;
            while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k])
                ++k;
            return k;
        }

        auto leaf(const Partition &p, const std::vector<Vertex> &path) -> int
        {
            auto img = image_of(p.lab);
            if (!have_first_) {
                have_first_ = true;
                first_lab_ = best_lab_ = p.lab;
                first_img_ = best_img_ = std::move(img);
                first_path_ = best_path_ = path;
                return kNoJump;
            }
            if (img == first_img_) {
                record_automorphism(first_lab_, p.lab);
                return common_prefix(path, first_path_);
            }
            if (img == best_img_) {
                record_automorphism(best_lab_, p.lab);
                return common_prefix(path, best_path_);
            }
            if (img < best_img_) {
                best_lab_ = p.lab;
                best_img_ = std::move(img);
                best_path_ = path;
            }
            return kNoJump;
        }

        auto search(const Partition &p, int level, std::vector<Vertex> &path, bool first_path) -> int
        {
            if (p.discrete(n_))
                return leaf(p, path);

            // Target: the first smallest non-singleton cell.
            int cell = -1;
            int best_len = n_ + 1;
            for (int s = 0; s < n_; s = p.end[s]) {
                int len = p.end[s] - s;
                if (len > 1 && len < best_len) {
                    best_len = len;
                    cell = s;
                }
            }
            std::vector<Vertex> members(p.lab.begin() + cell, p.lab.begin() + p.end[cell]);
            std::sort(members.begin(), members.end());

            std::vector<Vertex> explored;
            std::vector<Vertex> orbit;
            std::size_t orbit_gens = std::numeric_limits<std::size_t>::max();
            for (auto v : members) {
                if (!explored.empty()) {
                    if (orbit_gens != generators_.size()) {
                        orbit = orbits_of(generators_.size(), path);
                        orbit_gens = generators_.size();
                    }
                    bool equivalent = std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[v]; });
                    if (equivalent)
                        continue;
                }
                explored.push_back(v);
                Partition q = individualize(p, cell, v);
                std::deque<int> queue{cell};
                std::vector<bool> queued(n_, false);
                queued[cell] = true;
                refine(q, queue, queued);
                path.push_back(v);
                int r = search(q, level + 1, path, first_path && explored.size() == 1);
                path.pop_back();
                if (r < level)
                    return r;
            }

            if (first_path) {
                auto orb = orbits_of(generators_.size(), path);
                auto size = static_cast<std::uint64_t>(std::count_if(members.begin(), members.end(), [&](Vertex u) { return orb[u] == orb[members.front()]; }));
                if (order_ > std::numeric_limits<std::uint64_t>::max() / size)
                    overflow_ = true;
                else
                    order_ *= size;
            }
            return kNoJump;
        }

    public:
        std::vector<Vertex> best_lab_;
        std::vector<std::uint64_t> best_img_;

    private:
        const Graph &g_;
        int n_;
        int words_;
        std::vector<int> colours_;

        bool have_first_ = false;
        std::vector<Vertex> first_lab_;
        std::vector<std::uint64_t> first_img_;
        std::vector<Vertex> first_path_;
        std::vector<Vertex> best_path_;
        std::vector<std::vector<Vertex>> generators_;
        std::uint64_t order_ = 1;
        bool overflow_ = false;
    };

    auto canonize(const Graph &g, std::span<const int> colours, AutomorphismGroup *group) -> CanonicalForm
    {
        if (g.order() == 0)
            return {g, Permutation::identity(0)};
        Canonizer c(g, colours);
        c.run();
        auto labeling = c.labeling();
        auto graph = g.permuted(labeling);
        if (group != nullptr) {
            *group = c.group();
            if (c.overflowed())
                throw std::overflow_error("automorphism group order exceeds 64 bits");
        }
        return {std::move(graph), std::move(labeling)};
    }

} // namespace

auto canonical_form(const Graph &g, std::span<const int> colours) -> CanonicalForm
{
    return canonize(g, colours, nullptr);
}

auto canonical_form_with_group(const Graph &g, std::span<const int> colours, AutomorphismGroup &group) -> CanonicalForm
{
    return canonize(g, colours, &group);
}

auto isomorphic(const Graph &g, const Graph &h) -> std::optional<Permutation>
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    std::vector<int> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return std::nullopt;
    auto cg = canonical_form(g);
    auto ch = canonical_form(h);
    if (cg.graph != ch.graph)
        return std::nullopt;
    return ch.labeling.inverse() * cg.labeling;
}

auto automorphism_group(const Graph &g, std::span<const int> colours) -> AutomorphismGroup
{
    AutomorphismGroup grp;
    canonize(g, colours, &grp);
    return grp;
}

auto automorphism_order(const Graph &g) -> std::uint64_t
{
    return automorphism_group(g).order;
}

} // namespace trifree
