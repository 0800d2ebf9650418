#include "trifree/embed.hpp"

#include <algorithm>

namespace trifree {

auto Embedding::contains(Vertex host_vertex) const -> bool
{
    return std::find(map.begin(), map.end(), host_vertex) != map.end();
}

auto Embedding::preimage(Vertex host_vertex) const -> Vertex
{
    auto it = std::find(map.begin(), map.end(), host_vertex);
    return it == map.end() ? -1 : static_cast<Vertex>(it - map.begin());
}

auto is_induced_embedding(const Graph &host, const Graph &pattern, const Embedding &e) -> bool
{
    if (e.pattern_order() != pattern.order())
        return false;
    std::vector<bool> used(host.order(), false);
    for (auto v : e.map) {
        if (v < 0 || v >= host.order() || used[v])
            return false;
        used[v] = true;
    }
    for (Vertex a = 0; a < pattern.order(); ++a)
        for (Vertex b = a + 1; b < pattern.order(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(e.map[a], e.map[b]))
                return false;
    return true;
}

namespace {

    // Next pattern vertex: most already-placed neighbours, then highest degree,
    // then least index.
    auto placement_order(const Graph &pattern) -> std::vector<Vertex>
    {
        int p = pattern.order();
        std::vector<Vertex> order;
        std::vector<bool> placed(p, false);
        std::vector<int> placed_neighbours(p, 0);
        for (int step = 0; step < p; ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < p; ++v) {
                if (placed[v])
                    continue;
                if (pick < 0 || placed_neighbours[v] > placed_neighbours[pick] ||
                    (placed_neighbours[v] == placed_neighbours[pick] && pattern.degree(v) > pattern.degree(pick)))
                    pick = v;
            }
            placed[pick] = true;
            order.push_back(pick);
            for (Vertex u = 0; u < p; ++u)
                if (pattern.adjacent(pick, u))
                    ++placed_neighbours[u];
        }
        return order;
    }

    class InducedSearch {
    public:
        InducedSearch(const Graph &host, const Graph &pattern, const std::function<bool(const Embedding &)> &visit)
            : host_(host), pattern_(pattern), visit_(visit), order_(placement_order(pattern)), words_(host.words_per_row())
        {
            current_.map.assign(pattern.order(), -1);
            for (Vertex v = 0; v < host.order(); ++v)
                host_degree_.push_back(host.degree(v));
            masks_.assign(static_cast<std::size_t>(pattern.order() + 1) * words_, 0);
        }

        void run()
        {
            if (pattern_.order() > host_.order())
                return;
            if (pattern_.order() == 0) {
                visit_(current_);
                return;
            }
            extend(0);
        }

    private:
        auto extend(int level) -> bool
        {
            if (level == pattern_.order())
                return visit_(current_);
            Vertex pv = order_[level];
            int need = pattern_.degree(pv);
            auto *mask = masks_.data() + static_cast<std::size_t>(level) * words_;
            for (int w = 0; w < words_; ++w)
                mask[w] = ~std::uint64_t{0};
            int tail = host_.order() & 63;
            if (tail != 0)
                mask[words_ - 1] = (std::uint64_t{1} << tail) - 1;
            for (int j = 0; j < level; ++j) {
                Vertex hv = current_.map[order_[j]];
                auto row = host_.row(hv);
                bool adj = pattern_.adjacent(pv, order_[j]);
                for (int w = 0; w < words_; ++w)
                    mask[w] &= adj ? row[w] : ~row[w];
                mask[hv >> 6] &= ~(std::uint64_t{1} << (hv & 63));
            }
            for (int w = 0; w < words_; ++w) {
                for (auto bits = mask[w]; bits != 0; bits &= bits - 1) {
                    Vertex hv = w * 64 + std::countr_zero(bits);
                    if (host_degree_[hv] < need)
                        continue;
                    current_.map[pv] = hv;
                    if (!extend(level + 1))
                        return false;
                }
            }
            current_.map[pv] = -1;
            return true;
        }

        const Graph &host_;
        const Graph &pattern_;
        const std::function<bool(const Embedding &)> &visit_;
        std::vector<Vertex> order_;
        int words_;
        Embedding current_;
        std::vector<std::uint64_t> masks_;
        std::vector<int> host_degree_;
    };

} // namespace

void for_each_induced(const Graph &host, const Graph &pattern, const std::function<bool(const Embedding &)> &visit)
{
    InducedSearch(host, pattern, visit).run();
}

auto find_induced(const Graph &host, const Graph &pattern) -> std::optional<Embedding>
{
    std::optional<Embedding> found;
    for_each_induced(host, pattern, [&](const Embedding &e) {
        found = e;
        return false;
    });
    return found;
}

auto all_induced(const Graph &host, const Graph &pattern) -> std::vector<Embedding>
{
    std::vector<Embedding> out;
    for_each_induced(host, pattern, [&](const Embedding &e) {
        out.push_back(e);
        return true;
    });
    return out;
}

auto count_induced(const Graph &host, const Graph &pattern) -> std::size_t
{
    std::size_t count = 0;
    for_each_induced(host, pattern, [&](const Embedding &) {
        ++count;
        return true;
    });
    return count;
}

} // namespace trifree
